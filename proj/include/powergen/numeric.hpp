#ifndef POWERGEN_NUMERIC_HPP
#define POWERGEN_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>
#include <powergen/report.hpp>

namespace powergen
{

// Euler-Mascheroni constant, 30 significant digits.
inline constexpr const char *euler_gamma_digits = "0.577215664901532860606512090082";
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// Beyond this |x| the alternating exponential-integral series loses double precision.
inline constexpr double exp_integral_max_abs_x = 30.0;

class EvalOptions
{
public:
    explicit EvalOptions(double tolerance = 1e-12, std::size_t max_terms = 500)
        : m_tolerance(tolerance), m_max_terms(max_terms)
    {
        if (!(tolerance > 0) || !std::isfinite(tolerance)) {
            throw domain_error("tolerance must be a positive finite number");
        }
        if (max_terms < 1) {
            throw domain_error("max_terms must be at least 1");
        }
    }

    double tolerance() const noexcept
    {
        return m_tolerance;
    }
    std::size_t max_terms() const noexcept
    {
        return m_max_terms;
    }

private:
    double m_tolerance;
    std::size_t m_max_terms;
};

// A truncated series: value, bound on the omitted tail, and number of terms used.
// Partial sums are accumulated in long double and rounded once.
struct SeriesValue {
    double value = 0;
    double bound = 0;
    std::size_t terms = 0;
};

namespace detail
{

// Once the tolerance is met, summation continues (within max_terms) until the
// tail is below this fraction of the sum, so the result is as accurate as a
// double allows.
inline constexpr double negligible = 0.25 * std::numeric_limits<double>::epsilon();

inline std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline Rational rational_or_zero(double v)
{
    return std::isfinite(v) ? Rational::from_double(v) : Rational();
}

// sum_{n>=1} x^n / (n! n). Stops once past the term-magnitude hump (n > |x|)
// with the geometric tail bound below tol * max(1, |sum|).
inline SeriesValue exp_integral_series(double x, const EvalOptions &opts)
{
    const double ax = std::fabs(x);
    if (ax > exp_integral_max_abs_x) {
        throw accuracy_error("exponential integral series: |x| = " + fmt_double(ax) + " exceeds the cap of 30",
                             std::numeric_limits<double>::infinity());
    }
    SeriesValue out;
    if (x == 0) {
        return out;
    }
    long double power = 1; // x^n / n!
    long double sum = 0;
    double bound = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (std::size_t n = 1; n <= opts.max_terms(); ++n) {
        power *= static_cast<long double>(x) / n;
        sum += power / n;
        out.terms = n;
        const auto next_n = static_cast<double>(n + 1);
        const double next = std::fabs(static_cast<double>(power) * x / next_n) / next_n;
        // Successive terms shrink by at least |x| / (k + 1) from here on.
        const double ratio = ax / (next_n + 1);
        if (next_n > ax && ratio < 1) {
            bound = next / (1 - ratio);
            const double scale = std::max(1.0, std::fabs(static_cast<double>(sum)));
            if (bound < opts.tolerance() * scale && (bound < detail::negligible * scale || n == opts.max_terms())) {
                out.value = static_cast<double>(sum);
                out.bound = bound;
                return out;
            }
            if (bound < opts.tolerance() * scale) {
                converged = true;
            }
        }
    }
    if (converged) {
        out.value = static_cast<double>(sum);
        out.bound = bound;
        return out;
    }
    throw accuracy_error("exponential integral series did not converge within " + std::to_string(opts.max_terms())
                             + " terms",
                         bound);
}

} // namespace detail

// Ein(x) = sum_{n>=1} (-1)^(n-1) x^n / (n! n), an entire function.
inline SeriesValue ein_num(double x, const EvalOptions &opts = EvalOptions())
{
    SeriesValue s = detail::exp_integral_series(-x, opts);
    s.value = -s.value;
    return s;
}

// Ei(x) = gamma + ln|x| + sum_{n>=1} x^n / (n! n), x != 0.
inline SeriesValue ei_num(double x, const EvalOptions &opts = EvalOptions())
{
    if (x == 0) {
        throw domain_error("Ei requires x != 0");
    }
    SeriesValue s = detail::exp_integral_series(x, opts);
    s.value += euler_gamma + std::log(std::fabs(x));
    return s;
}

inline Rational harmonic_exact(std::size_t n)
{
    if (n == 0) {
        throw domain_error("harmonic number H_n requires n >= 1");
    }
    Rational h;
    for (std::size_t k = 1; k <= n; ++k) {
        h += Rational(BigInt(1), BigInt(k));
    }
    return h;
}

namespace detail
{

inline VerificationReport numeric_report(IdentityId id, std::vector<std::pair<std::string, ParamValue>> params,
                                         std::size_t index, double lhs, double rhs, double tail_bound,
                                         double allowed, double tolerance)
{
    VerificationReport rep{id, std::move(params), std::nullopt, std::nullopt};
    const double gap = std::fabs(lhs - rhs);
    rep.numeric = NumericDetail{lhs, rhs, gap, tail_bound, tolerance};
    if (!(gap <= allowed)) {
        rep.first_mismatch = Mismatch{index, rational_or_zero(rhs), rational_or_zero(lhs)};
    }
    return rep;
}

} // namespace detail

// Ein(x) + Ei(-x) - ln|x| == gamma within 2 tolerance.
inline VerificationReport ein_triangle_check(double x, const EvalOptions &opts = EvalOptions())
{
    if (x == 0) {
        throw domain_error("Ei requires x != 0");
    }
    const SeriesValue ein = ein_num(x, opts);
    const SeriesValue ei = ei_num(-x, opts);
    const double lhs = ein.value + ei.value - std::log(std::fabs(x));
    return detail::numeric_report(IdentityId::ein_triangle, {{"x", x}, {"tolerance", opts.tolerance()}}, 0, lhs,
                                  euler_gamma, ein.bound + ei.bound, 2 * opts.tolerance(), opts.tolerance());
}

// Partial sum sum_{n=1}^{order} H_n x^n/n! against e^x Ein(x). Passes when the gap
// and the truncation bound of the partial sum are both within tolerance.
inline VerificationReport harmonic_egf_check(double x, std::size_t order, const EvalOptions &opts = EvalOptions())
{
    if (order == 0) {
        throw domain_error("truncation order must be at least 1");
    }
    long double acc = 0;
    long double h = 0;
    long double power = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        h += 1.0L / n;
        power *= static_cast<long double>(x) / n;
        acc += h * power;
    }
    const auto lhs = static_cast<double>(acc);
    // H_n <= n, so the tail is at most sum_{n>N} |x|^n/(n-1)!, whose term ratio
    // |x|/n is decreasing.
    const double ax = std::fabs(x);
    double tail = 0;
    if (ax > 0) {
        const auto n1 = static_cast<double>(order + 1);
        const double first = std::exp(n1 * std::log(ax) - std::lgamma(n1));
        const double ratio = ax / n1;
        tail = ratio < 1 ? first / (1 - ratio) : std::numeric_limits<double>::infinity();
    }
    // The e^x factor scales the Ein error, so Ein is summed past the point
    // where its own tail could matter.
    const EvalOptions inner(opts.tolerance() * 1e-3 * std::min(1.0, std::exp(-x)), std::max<std::size_t>(opts.max_terms(), 500));
    const double rhs = std::exp(x) * ein_num(x, inner).value;
    auto rep = detail::numeric_report(IdentityId::harmonic_egf,
                                      {{"x", x}, {"N", static_cast<std::int64_t>(order)}, {"tolerance", opts.tolerance()}},
                                      order, lhs, rhs, tail, opts.tolerance(), opts.tolerance());
    if (rep.passed() && !(tail < opts.tolerance())) {
        rep.first_mismatch = Mismatch{order, detail::rational_or_zero(rhs), detail::rational_or_zero(lhs)};
    }
    return rep;
}

// Li_p(x) = sum_{n>=1} x^n / n^p for |x| < 1, summed until the geometric tail
// bound drops below tolerance.
inline SeriesValue polylog_num(double p, double x, const EvalOptions &opts = EvalOptions())
{
    const double ax = std::fabs(x);
    if (!(ax < 1)) {
        throw domain_error("polylog requires |x| < 1");
    }
    SeriesValue out;
    if (x == 0) {
        return out;
    }
    long double power = 1;
    long double sum = 0;
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= opts.max_terms(); ++n) {
        const auto nd = static_cast<double>(n);
        power *= x;
        sum += power / std::pow(static_cast<long double>(n), static_cast<long double>(p));
        out.value = static_cast<double>(sum);
        out.terms = n;
        const double geometric = std::pow(ax, nd + 1) / (1 - ax);
        if (p >= 0) {
            bound = geometric * std::max(1.0, std::pow(nd, -p));
        } else {
            // n^-p grows; the term ratio |x| ((k+1)/k)^-p decreases toward |x|.
            const double ratio = ax * std::pow((nd + 2) / (nd + 1), -p);
            bound = ratio < 1 ? std::pow(ax, nd + 1) * std::pow(nd + 1, -p) / (1 - ratio)
                              : std::numeric_limits<double>::infinity();
        }
        if (bound < opts.tolerance()) {
            out.bound = bound;
            return out;
        }
    }
    throw accuracy_error("polylog series did not converge within " + std::to_string(opts.max_terms()) + " terms",
                         bound);
}

// Partial sum of sum_n (1^-p + ... + n^-p) x^n against Li_p(x)/(1-x); for p = 1
// a second report compares against -ln(1-x)/(1-x).
inline std::vector<VerificationReport> reciprocal_sum_ogf_check(double p, double x, std::size_t order,
                                                                const EvalOptions &opts = EvalOptions())
{
    const double ax = std::fabs(x);
    if (!(ax < 1)) {
        throw domain_error("reciprocal power-sum series requires |x| < 1");
    }
    if (order == 0) {
        throw domain_error("truncation order must be at least 1");
    }
    long double acc = 0;
    long double h = 0;
    long double power = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        h += std::pow(static_cast<long double>(n), static_cast<long double>(-p));
        power *= x;
        acc += h * power;
    }
    const auto lhs = static_cast<double>(acc);
    // The coefficient is at most n^s with s = 1 + max(0, -p).
    double tail = 0;
    if (ax > 0) {
        const double s = 1 + std::max(0.0, -p);
        const auto n1 = static_cast<double>(order + 1);
        const double ratio = ax * std::pow((n1 + 1) / n1, s);
        tail = ratio < 1 ? std::pow(n1, s) * std::pow(ax, n1) / (1 - ratio) : std::numeric_limits<double>::infinity();
    }
    const SeriesValue li = polylog_num(p, x, opts);
    const double rhs = li.value / (1 - x);
    const double slack = opts.tolerance() + tail + li.bound / (1 - x);
    std::vector<VerificationReport> out;
    out.push_back(detail::numeric_report(
        IdentityId::reciprocal_ogf,
        {{"p", p}, {"x", x}, {"N", static_cast<std::int64_t>(order)}, {"tolerance", opts.tolerance()}}, order, lhs,
        rhs, tail, slack, opts.tolerance()));
    if (p == 1) {
        const double log_form = -std::log1p(-x) / (1 - x);
        out.push_back(detail::numeric_report(IdentityId::reciprocal_ogf,
                                             {{"p", p},
                                              {"x", x},
                                              {"N", static_cast<std::int64_t>(order)},
                                              {"tolerance", opts.tolerance()},
                                              {"log_form", true}},
                                             order, lhs, log_form, tail, opts.tolerance() + tail, opts.tolerance()));
    }
    return out;
}

namespace detail
{

// Bound on sum_{n>m} n^q |x|^n / n!. The term ratio (1 + 1/n)^q |x| / (n + 1)
// is decreasing in n.
inline double factorial_tail_bound(double ax, double q, std::size_t m)
{
    if (ax == 0) {
        return 0;
    }
    const auto n1 = static_cast<double>(m + 1);
    const double ratio = std::pow(1 + 1 / n1, q) * ax / (n1 + 1);
    if (!(ratio < 1)) {
        return std::numeric_limits<double>::infinity();
    }
    const double first = std::exp(q * std::log(n1) + n1 * std::log(ax) - std::lgamma(n1 + 1));
    return first / (1 - ratio);
}

} // namespace detail

// E(x, p) = sum_{n>=1} n^p x^n / n!.
inline SeriesValue e_series_num(double x, double p, const EvalOptions &opts = EvalOptions())
{
    SeriesValue out;
    out.bound = std::numeric_limits<double>::infinity();
    if (x == 0) {
        out.bound = 0;
        return out;
    }
    const double ax = std::fabs(x);
    const double q = std::max(p, 0.0);
    long double power = 1;
    long double sum = 0;
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= opts.max_terms(); ++n) {
        const auto nd = static_cast<double>(n);
        power *= static_cast<long double>(x) / n;
        sum += std::pow(static_cast<long double>(n), static_cast<long double>(p)) * power;
        out.value = static_cast<double>(sum);
        out.terms = n;
        if (nd + 1 > ax) {
            bound = detail::factorial_tail_bound(ax, q, n);
            const double scale = std::max(1.0, std::fabs(out.value));
            if (bound < opts.tolerance() * scale) {
                out.bound = bound;
                if (bound < detail::negligible * scale || n == opts.max_terms()) {
                    return out;
                }
            }
        }
    }
    if (out.bound < opts.tolerance() * std::max(1.0, std::fabs(out.value))) {
        return out;
    }
    throw accuracy_error("E(x, p) series did not converge within " + std::to_string(opts.max_terms()) + " terms",
                         bound);
}

// M(x, p) = sum_{n=1}^{order} (1^p + ... + n^p) x^n / n!, with a bound on the
// omitted tail (the coefficient is at most n^(1 + max(p, 0))).
inline SeriesValue m_series_num(double x, double p, std::size_t order, const EvalOptions &opts = EvalOptions())
{
    if (order > opts.max_terms()) {
        throw accuracy_error("M(x, p) truncation order exceeds max_terms", std::numeric_limits<double>::infinity());
    }
    SeriesValue out;
    long double sum = 0;
    long double power = 1;
    long double acc = 0;
    for (std::size_t n = 1; n <= order; ++n) {
        sum += std::pow(static_cast<long double>(n), static_cast<long double>(p));
        power *= static_cast<long double>(x) / n;
        acc += sum * power;
    }
    out.value = static_cast<double>(acc);
    out.terms = order;
    out.bound = detail::factorial_tail_bound(std::fabs(x), 1 + std::max(p, 0.0), order);
    return out;
}

// M(x, p) with the smallest order whose tail bound is below tol * max(1, |M|).
inline SeriesValue m_series_adaptive(double x, double p, const EvalOptions &opts = EvalOptions())
{
    SeriesValue s;
    std::optional<SeriesValue> within_tol;
    for (std::size_t n = 1; n <= opts.max_terms(); ++n) {
        s = m_series_num(x, p, n, opts);
        const double scale = std::max(1.0, std::fabs(s.value));
        if (s.bound < opts.tolerance() * scale) {
            within_tol = s;
            if (s.bound < detail::negligible * scale) {
                return s;
            }
        }
    }
    if (within_tol) {
        return s;
    }
    throw accuracy_error("M(x, p) series did not converge within " + std::to_string(opts.max_terms()) + " terms",
                         s.bound);
}

} // namespace powergen

#endif
