#ifndef POWERGEN_RATFN_HPP
#define POWERGEN_RATFN_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>

namespace powergen
{

// N(x) / (1 - x)^m. Kept canonical: when m > 0, (1 - x) does not divide N,
// and the zero function has m = 0.
class RatAtOne
{
public:
    RatAtOne() = default;
    RatAtOne(Polynomial numerator, std::size_t pole_order)
        : m_num(std::move(numerator)), m_pole(pole_order)
    {
        normalise();
    }
    // A plain polynomial.
    RatAtOne(Polynomial p) : RatAtOne(std::move(p), 0) {}

    const Polynomial &numerator() const noexcept
    {
        return m_num;
    }
    std::size_t pole_order() const noexcept
    {
        return m_pole;
    }
    bool is_polynomial() const noexcept
    {
        return m_pole == 0;
    }

    RatAtOne operator-() const
    {
        return RatAtOne(-m_num, m_pole);
    }

    friend RatAtOne operator+(const RatAtOne &f, const RatAtOne &g)
    {
        const std::size_t m = std::max(f.m_pole, g.m_pole);
        return RatAtOne(f.m_num * one_minus_x_pow(m - f.m_pole) + g.m_num * one_minus_x_pow(m - g.m_pole), m);
    }
    friend RatAtOne operator-(const RatAtOne &f, const RatAtOne &g)
    {
        return f + (-g);
    }
    friend RatAtOne operator*(const RatAtOne &f, const RatAtOne &g)
    {
        return RatAtOne(f.m_num * g.m_num, f.m_pole + g.m_pole);
    }

    friend bool operator==(const RatAtOne &, const RatAtOne &) = default;

private:
    // Divide out (1 - x) while it divides N. N = (1 - x) Q gives
    // Q_k = N_0 + ... + N_k, and divisibility is N(1) = 0.
    void normalise()
    {
        if (m_num.is_zero()) {
            m_pole = 0;
            return;
        }
        while (m_pole > 0 && evaluate(m_num, Rational(1)).is_zero()) {
            const auto cs = m_num.coefficients();
            std::vector<Rational> q(cs.size() - 1);
            Rational run;
            for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
                run += cs[k];
                q[k] = run;
            }
            m_num = Polynomial(std::move(q));
            --m_pole;
        }
    }

    Polynomial m_num;
    std::size_t m_pole = 0;
};

// d/dx N/(1-x)^m = (N' (1-x) + m N) / (1-x)^(m+1).
inline RatAtOne derivative(const RatAtOne &f)
{
    if (f.is_polynomial()) {
        return RatAtOne(derivative(f.numerator()));
    }
    const std::size_t m = f.pole_order();
    const Polynomial &n = f.numerator();
    return RatAtOne(derivative(n) * one_minus_x_pow(1) + Rational(static_cast<unsigned long long>(m)) * n, m + 1);
}

// P(x / (1 - x)) / (1 - x)^extra_pole.
inline RatAtOne compose_geometric(const Polynomial &p, std::size_t extra_pole)
{
    if (p.is_zero()) {
        return RatAtOne();
    }
    const std::size_t d = *p.degree();
    Polynomial num;
    for (std::size_t k = 0; k <= d; ++k) {
        const Rational c = p.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        num += (c * one_minus_x_pow(d - k)).shifted(k);
    }
    return RatAtOne(std::move(num), d + extra_pole);
}

// First `count` Taylor coefficients at 0. With 1/(1-x)^m = sum C(n+m-1, m-1) x^n,
// coefficient n is sum_j N_j C(n-j+m-1, m-1).
inline std::vector<Rational> taylor(const RatAtOne &f, std::size_t count)
{
    if (count == 0) {
        throw domain_error("taylor expansion needs at least one coefficient");
    }
    const Polynomial &num = f.numerator();
    std::vector<Rational> out(count);
    if (f.is_polynomial()) {
        for (std::size_t n = 0; n < count; ++n) {
            out[n] = num.coeff(n);
        }
        return out;
    }
    const auto m = static_cast<long long>(f.pole_order());
    // C(i + m - 1, m - 1) for i = 0..count-1.
    std::vector<BigInt> basis(count);
    basis[0] = 1;
    for (std::size_t i = 1; i < count; ++i) {
        basis[i] = basis[i - 1] * (static_cast<long long>(i) + m - 1) / static_cast<long long>(i);
    }
    for (std::size_t n = 0; n < count; ++n) {
        Rational acc;
        for (std::size_t j = 0; j <= n && j < num.size(); ++j) {
            const Rational &c = num.coefficients()[j];
            if (!c.is_zero()) {
                acc += c * Rational(basis[n - j]);
            }
        }
        out[n] = std::move(acc);
    }
    return out;
}

// (1/r!) (x^r f)^(r): multiplies Taylor coefficient n by C(n+r, r).
inline RatAtOne weight_by_binomial(const RatAtOne &f, std::size_t r)
{
    RatAtOne g(f.numerator().shifted(r), f.pole_order());
    for (std::size_t i = 0; i < r; ++i) {
        g = derivative(g);
    }
    const Rational inv_fact(BigInt(1), factorial(static_cast<long long>(r)));
    return RatAtOne(inv_fact * g.numerator(), g.pole_order());
}

} // namespace powergen

#endif
