#ifndef POWERGEN_EXACT_HPP
#define POWERGEN_EXACT_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <powergen/errors.hpp>

namespace powergen
{

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction kept in lowest terms with a positive denominator, so that
// equality is structural. Zero is 0/1.
class Rational
{
public:
    Rational() : m_num(0), m_den(1) {}
    Rational(int n) : m_num(n), m_den(1) {}
    Rational(long n) : m_num(n), m_den(1) {}
    Rational(long long n) : m_num(n), m_den(1) {}
    Rational(unsigned long n) : m_num(n), m_den(1) {}
    Rational(unsigned long long n) : m_num(n), m_den(1) {}
    Rational(BigInt n) : m_num(std::move(n)), m_den(1) {}
    Rational(BigInt n, BigInt d) : m_num(std::move(n)), m_den(std::move(d))
    {
        if (m_den == 0) {
            throw domain_error("rational with zero denominator");
        }
        canonicalise();
    }

    const BigInt &num() const noexcept
    {
        return m_num;
    }
    const BigInt &den() const noexcept
    {
        return m_den;
    }

    bool is_zero() const noexcept
    {
        return m_num == 0;
    }
    bool is_integer() const noexcept
    {
        return m_den == 1;
    }
    int sign() const noexcept
    {
        return m_num.sign();
    }

    Rational operator-() const
    {
        Rational r;
        r.m_num = -m_num;
        r.m_den = m_den;
        return r;
    }

    friend Rational operator+(const Rational &a, const Rational &b)
    {
        if (a.m_den == b.m_den) {
            return Rational(a.m_num + b.m_num, a.m_den);
        }
        return Rational(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend Rational operator-(const Rational &a, const Rational &b)
    {
        return a + (-b);
    }
    friend Rational operator*(const Rational &a, const Rational &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Rational();
        }
        return Rational(a.m_num * b.m_num, a.m_den * b.m_den);
    }
    friend Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.is_zero()) {
            throw domain_error("division of a rational by zero");
        }
        return Rational(a.m_num * b.m_den, a.m_den * b.m_num);
    }

    Rational &operator+=(const Rational &o)
    {
        return *this = *this + o;
    }
    Rational &operator-=(const Rational &o)
    {
        return *this = *this - o;
    }
    Rational &operator*=(const Rational &o)
    {
        return *this = *this * o;
    }
    Rational &operator/=(const Rational &o)
    {
        return *this = *this / o;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const BigInt lhs = a.m_num * b.m_den;
        const BigInt rhs = b.m_num * a.m_den;
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (lhs > rhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // "n" or "n/d".
    std::string str() const
    {
        if (m_den == 1) {
            return m_num.str();
        }
        return m_num.str() + "/" + m_den.str();
    }

    // Correctly rounded to well below double precision.
    double to_double() const
    {
        using boost::multiprecision::cpp_bin_float_100;
        return static_cast<double>(cpp_bin_float_100(m_num) / cpp_bin_float_100(m_den));
    }

    // Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double v)
    {
        if (!std::isfinite(v)) {
            throw domain_error("cannot represent a non-finite double as a rational");
        }
        if (v == 0.0) {
            return Rational();
        }
        int exp = 0;
        const double mant = std::frexp(v, &exp);
        // 53 bits of mantissa fit exactly into an int64.
        const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
        exp -= 53;
        BigInt n(scaled);
        BigInt d(1);
        if (exp >= 0) {
            n <<= exp;
        } else {
            d <<= -exp;
        }
        return Rational(std::move(n), std::move(d));
    }

private:
    void canonicalise()
    {
        if (m_den < 0) {
            m_num = -m_num;
            m_den = -m_den;
        }
        if (m_num == 0) {
            m_den = 1;
            return;
        }
        const BigInt g = boost::multiprecision::gcd(m_num, m_den);
        if (g != 1) {
            m_num /= g;
            m_den /= g;
        }
    }

    BigInt m_num;
    BigInt m_den;
};

// Dense univariate polynomial over Rational, coefficients low to high. The
// highest stored coefficient is never zero; the zero polynomial stores nothing.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
    {
        trim();
    }
    Polynomial(std::initializer_list<Rational> coeffs) : m_coeffs(coeffs)
    {
        trim();
    }

    static Polynomial constant(Rational c)
    {
        return Polynomial(std::vector<Rational>{std::move(c)});
    }
    static Polynomial monomial(Rational c, std::size_t k)
    {
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }
    // The polynomial x.
    static Polynomial x()
    {
        return monomial(Rational(1), 1);
    }

    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept
    {
        if (m_coeffs.empty()) {
            return std::nullopt;
        }
        return m_coeffs.size() - 1;
    }
    // Number of stored coefficients (degree + 1, or 0).
    std::size_t size() const noexcept
    {
        return m_coeffs.size();
    }
    std::span<const Rational> coefficients() const noexcept
    {
        return m_coeffs;
    }
    Rational coeff(std::size_t k) const
    {
        return k < m_coeffs.size() ? m_coeffs[k] : Rational();
    }

    // Copy with coefficient k replaced.
    Polynomial with_coeff(std::size_t k, Rational c) const
    {
        std::vector<Rational> v = m_coeffs;
        if (v.size() <= k) {
            v.resize(k + 1);
        }
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    Polynomial operator-() const
    {
        std::vector<Rational> v;
        v.reserve(m_coeffs.size());
        for (const auto &c : m_coeffs) {
            v.push_back(-c);
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        std::vector<Rational> v(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = a.coeff(i) + b.coeff(i);
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        return a + (-b);
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Polynomial();
        }
        std::vector<Rational> v(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.size(); ++j) {
                v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Rational &s, const Polynomial &a)
    {
        if (s.is_zero()) {
            return Polynomial();
        }
        std::vector<Rational> v;
        v.reserve(a.size());
        for (const auto &c : a.m_coeffs) {
            v.push_back(s * c);
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial &a, const Rational &s)
    {
        return s * a;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        return *this = *this + o;
    }
    Polynomial &operator*=(const Polynomial &o)
    {
        return *this = *this * o;
    }

    // Multiplication by x^k.
    Polynomial shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        std::vector<Rational> v(k);
        v.insert(v.end(), m_coeffs.begin(), m_coeffs.end());
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    }

    std::vector<Rational> m_coeffs;
};

inline Polynomial derivative(const Polynomial &a)
{
    if (a.size() <= 1) {
        return Polynomial();
    }
    std::vector<Rational> v(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) {
        v[k - 1] = a.coeff(k) * Rational(static_cast<unsigned long long>(k));
    }
    return Polynomial(std::move(v));
}

// Antiderivative vanishing at 0: x^k -> x^(k+1)/(k+1).
inline Polynomial antiderivative(const Polynomial &a)
{
    if (a.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> v(a.size() + 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        v[k + 1] = a.coeff(k) / Rational(static_cast<unsigned long long>(k + 1));
    }
    return Polynomial(std::move(v));
}

// Horner.
inline Rational evaluate(const Polynomial &a, const Rational &x)
{
    Rational acc;
    const auto cs = a.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// Horner in floating point, coefficients rounded once.
inline double evaluate(const Polynomial &a, double x)
{
    double acc = 0;
    const auto cs = a.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

inline BigInt factorial(long long n)
{
    if (n < 0) {
        throw domain_error("factorial of a negative integer");
    }
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// C(n, k); zero when k > n.
inline BigInt binomial(long long n, long long k)
{
    if (n < 0 || k < 0) {
        throw domain_error("binomial coefficient with a negative argument");
    }
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        // Each partial product is C(n - k + i, i), hence exact.
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// (1 - x)^k.
inline Polynomial one_minus_x_pow(std::size_t k)
{
    std::vector<Rational> v(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        BigInt c = binomial(static_cast<long long>(k), static_cast<long long>(i));
        v[i] = Rational(i % 2 == 0 ? c : BigInt(-c));
    }
    return Polynomial(std::move(v));
}

} // namespace powergen

#endif
