#ifndef POWERGEN_IDENTITIES_HPP
#define POWERGEN_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>
#include <powergen/ratfn.hpp>
#include <powergen/report.hpp>
#include <powergen/special_polys.hpp>

namespace powergen
{

// Whether a p = 0 power sum starts at the term 0^0 = 1.
enum class ZeroConvention : bool { off = false, on = true };

inline constexpr std::size_t default_order = 30;

// 1^p + 2^p + ... + n^p by direct summation, plus 0^0 = 1 when p = 0 and the
// zero convention is on.
inline BigInt faulhaber(std::size_t p, std::size_t n, ZeroConvention zero = ZeroConvention::off)
{
    BigInt sum = (p == 0 && zero == ZeroConvention::on) ? 1 : 0;
    for (std::size_t k = 1; k <= n; ++k) {
        sum += boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(p));
    }
    return sum;
}

// n^p with 0^0 = 1.
inline BigInt int_pow(std::size_t n, std::size_t p)
{
    return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(p));
}

// A_p(x) = sum_{k=1}^{p+1} S(p+1,k)/k x^k, so that the exponential generating
// function of the power sums is e^x A_p(x).
inline Polynomial egf_closed_form(std::size_t p)
{
    check_p_limit(p);
    const auto row = StirlingTable::shared().row(p + 1);
    std::vector<Rational> v(row.size());
    for (std::size_t k = 1; k < row.size(); ++k) {
        v[k] = Rational(row[k], BigInt(k));
    }
    return Polynomial(std::move(v));
}

// phi_p + integral_0^x phi_p. Agrees with egf_closed_form for p >= 1 and
// exceeds it by 1 at p = 0.
inline Polynomial egf_closed_form_alt(std::size_t p)
{
    const Polynomial phi = exp_poly(p);
    return phi + antiderivative(phi);
}

// n! [x^n] (e^x a(x)) = sum_j a_j n!/(n-j)!.
inline Rational egf_coefficient(const Polynomial &a, std::size_t n)
{
    Rational acc;
    BigInt falling = 1;
    for (std::size_t j = 0; j <= n && j < a.size(); ++j) {
        if (j > 0) {
            falling *= n - j + 1;
        }
        const Rational &c = a.coefficients()[j];
        if (!c.is_zero()) {
            acc += c * Rational(falling);
        }
    }
    return acc;
}

namespace detail
{

using Params = std::vector<std::pair<std::string, ParamValue>>;

inline ParamValue param(std::size_t v)
{
    return static_cast<std::int64_t>(v);
}

// Compares expected(n) against got(n) for first <= n <= last, stopping at the
// first difference.
template <typename Expected, typename Got>
VerificationReport compare_sequences(IdentityId id, Params params, std::size_t first, std::size_t last,
                                     Expected &&expected, Got &&got)
{
    VerificationReport rep{id, std::move(params), std::nullopt, std::nullopt};
    for (std::size_t n = first; n <= last; ++n) {
        Rational e = expected(n);
        Rational g = got(n);
        if (e != g) {
            rep.first_mismatch = Mismatch{n, std::move(e), std::move(g)};
            break;
        }
    }
    return rep;
}

inline VerificationReport compare_polynomials(IdentityId id, Params params, const Polynomial &expected,
                                              const Polynomial &got)
{
    const std::size_t len = std::max(expected.size(), got.size());
    if (len == 0) {
        return VerificationReport{id, std::move(params), std::nullopt, std::nullopt};
    }
    return compare_sequences(
        id, std::move(params), 0, len - 1, [&](std::size_t k) { return expected.coeff(k); },
        [&](std::size_t k) { return got.coeff(k); });
}

inline void require_order(std::size_t order)
{
    if (order == 0) {
        throw domain_error("truncation order must be at least 1");
    }
}

inline void require_positive_p(std::size_t p, const char *what)
{
    if (p == 0) {
        throw domain_error(std::string(what) + " requires p >= 1");
    }
}

} // namespace detail

// Checks n! [x^n] (e^x closed(x)) == faulhaber(p, n) for 1 <= n <= order.
inline VerificationReport egf_series_check(const Polynomial &closed, std::size_t p, std::size_t order,
                                           ZeroConvention zero, IdentityId id = IdentityId::egf)
{
    detail::require_order(order);
    return detail::compare_sequences(
        id,
        {{"p", detail::param(p)}, {"N", detail::param(order)}, {"zero_convention", zero == ZeroConvention::on}},
        1, order, [&](std::size_t n) { return Rational(faulhaber(p, n, zero)); },
        [&](std::size_t n) { return egf_coefficient(closed, n); });
}

// Series check of e^x A_p. Under the zero convention at p = 0 the sums include
// 0^0, and the matching closed form is phi_0 + integral phi_0 = 1 + x.
inline VerificationReport egf_series_check(std::size_t p, std::size_t order,
                                           ZeroConvention zero = ZeroConvention::off)
{
    const Polynomial closed = (p == 0 && zero == ZeroConvention::on) ? egf_closed_form_alt(0) : egf_closed_form(p);
    return egf_series_check(closed, p, order, zero);
}

// Series check of e^x (phi_p + integral phi_p). Fails at p = 0 unless the zero
// convention is on.
inline VerificationReport egf_alt_series_check(std::size_t p, std::size_t order,
                                               ZeroConvention zero = ZeroConvention::off)
{
    return egf_series_check(egf_closed_form_alt(p), p, order, zero, IdentityId::egf_alt);
}

// Two-part check of M = E + e^x int_0^x e^-t E(t) dt with E(x,p) = e^x phi_p(x):
//  1. n! [x^n] (e^x phi) == n^p for 1 <= n <= order;
//  2. phi + integral phi - [p == 0] == a, the constant correcting for the
//     missing n = 0 term of E(x,0) = e^x - 1.
inline std::vector<VerificationReport> prop1_series_check(const Polynomial &phi, const Polynomial &a, std::size_t p,
                                                          std::size_t order)
{
    detail::require_order(order);
    std::vector<VerificationReport> out;
    out.push_back(detail::compare_sequences(
        IdentityId::prop1_e_series, {{"p", detail::param(p)}, {"N", detail::param(order)}}, 1, order,
        [&](std::size_t n) { return Rational(int_pow(n, p)); },
        [&](std::size_t n) { return egf_coefficient(phi, n); }));
    Polynomial reduced = phi + antiderivative(phi);
    if (p == 0) {
        reduced = reduced - Polynomial::constant(Rational(1));
    }
    out.push_back(detail::compare_polynomials(IdentityId::prop1_reduction, {{"p", detail::param(p)}}, a, reduced));
    return out;
}

inline std::vector<VerificationReport> prop1_series_check(std::size_t p, std::size_t order)
{
    return prop1_series_check(exp_poly(p), egf_closed_form(p), p, order);
}

// 1/(1-x)^2 omega_p(x/(1-x)).
inline RatAtOne ogf_closed_form(std::size_t p)
{
    return compose_geometric(geo_poly(p), 2);
}

// Taylor coefficient n of `closed` equals faulhaber(p, n) for n < order.
inline VerificationReport ogf_series_check(const RatAtOne &closed, std::size_t p, std::size_t order,
                                           ZeroConvention zero)
{
    detail::require_order(order);
    const auto coeffs = taylor(closed, order);
    return detail::compare_sequences(
        IdentityId::ogf,
        {{"p", detail::param(p)}, {"N", detail::param(order)}, {"zero_convention", zero == ZeroConvention::on}},
        0, order - 1, [&](std::size_t n) { return Rational(faulhaber(p, n, zero)); },
        [&](std::size_t n) { return coeffs[n]; });
}

inline VerificationReport ogf_series_check(std::size_t p, std::size_t order, ZeroConvention zero = ZeroConvention::off)
{
    return ogf_series_check(ogf_closed_form(p), p, order, zero);
}

// (1/r!) (d/dx)^r [x^r ogf_closed_form(p)]: the generating function of
// C(n+r, r) (1^p + ... + n^p).
inline RatAtOne binomial_ogf(std::size_t p, std::size_t r)
{
    detail::require_positive_p(p, "binomial_ogf");
    return weight_by_binomial(ogf_closed_form(p), r);
}

inline VerificationReport binomial_ogf_check(const RatAtOne &closed, std::size_t p, std::size_t r, std::size_t order)
{
    detail::require_order(order);
    const auto coeffs = taylor(closed, order);
    const auto rl = static_cast<long long>(r);
    return detail::compare_sequences(
        IdentityId::binomial_ogf, {{"p", detail::param(p)}, {"r", detail::param(r)}, {"N", detail::param(order)}}, 0,
        order - 1,
        [&](std::size_t n) { return Rational(binomial(static_cast<long long>(n) + rl, rl) * faulhaber(p, n)); },
        [&](std::size_t n) { return coeffs[n]; });
}

inline VerificationReport binomial_ogf_check(std::size_t p, std::size_t r, std::size_t order)
{
    return binomial_ogf_check(binomial_ogf(p, r), p, r, order);
}

// 1/(1-x)^(r+1) omega_{p,r+1}(x/(1-x)): the generating function of C(n+r, r) n^p.
inline RatAtOne weighted_power_ogf(std::size_t p, std::size_t r)
{
    return compose_geometric(gen_geo_poly(p, r), r + 1);
}

inline VerificationReport weighted_power_ogf_check(const RatAtOne &closed, std::size_t p, std::size_t r,
                                                   std::size_t order)
{
    detail::require_order(order);
    const auto coeffs = taylor(closed, order);
    const auto rl = static_cast<long long>(r);
    return detail::compare_sequences(
        IdentityId::weighted_ogf, {{"p", detail::param(p)}, {"r", detail::param(r)}, {"N", detail::param(order)}}, 0,
        order - 1,
        [&](std::size_t n) { return Rational(binomial(static_cast<long long>(n) + rl, rl) * int_pow(n, p)); },
        [&](std::size_t n) { return coeffs[n]; });
}

inline VerificationReport weighted_power_ogf_check(std::size_t p, std::size_t r, std::size_t order)
{
    return weighted_power_ogf_check(weighted_power_ogf(p, r), p, r, order);
}

// Right-hand side of the tail identity: binomial_ogf(p, r) - weighted_power_ogf(p, r).
inline RatAtOne tail_closed_form(std::size_t p, std::size_t r)
{
    return binomial_ogf(p, r) + (-weighted_power_ogf(p, r));
}

// Series of sum_k k^p (1/(1-x)^(r+1) - sum_{j<=k} C(r+j, j) x^j), truncated
// below x^order, accumulated straight from the definition: the k-th summand is
// the tail sum_{n>k} C(r+n, n) x^n weighted by k^p.
inline std::vector<Rational> tail_series_direct(std::size_t p, std::size_t r, std::size_t order)
{
    std::vector<BigInt> acc(order);
    const auto rl = static_cast<long long>(r);
    for (std::size_t k = 1; k < order; ++k) {
        const BigInt w = int_pow(k, p);
        for (std::size_t n = k + 1; n < order; ++n) {
            acc[n] += w * binomial(rl + static_cast<long long>(n), static_cast<long long>(n));
        }
    }
    return {acc.begin(), acc.end()};
}

inline VerificationReport tail_ogf_identity(const RatAtOne &rhs, std::size_t p, std::size_t r, std::size_t order)
{
    detail::require_positive_p(p, "tail_ogf_identity");
    detail::require_order(order);
    const auto lhs = tail_series_direct(p, r, order);
    const auto coeffs = taylor(rhs, order);
    return detail::compare_sequences(
        IdentityId::tail, {{"p", detail::param(p)}, {"r", detail::param(r)}, {"N", detail::param(order)}}, 0,
        order - 1, [&](std::size_t n) { return lhs[n]; }, [&](std::size_t n) { return coeffs[n]; });
}

inline VerificationReport tail_ogf_identity(std::size_t p, std::size_t r, std::size_t order)
{
    return tail_ogf_identity(tail_closed_form(p, r), p, r, order);
}

// x (phi_p + phi_p') == phi_{p+1}.
inline VerificationReport grunert_check(std::size_t p)
{
    const Polynomial phi = exp_poly(p);
    return detail::compare_polynomials(IdentityId::grunert, {{"p", detail::param(p)}}, exp_poly(p + 1),
                                       Polynomial::x() * (phi + derivative(phi)));
}

inline VerificationReport q_equals_phi_check(std::size_t p)
{
    return detail::compare_polynomials(IdentityId::q_equals_phi, {{"p", detail::param(p)}}, exp_poly(p),
                                       recurrence_poly(p));
}

} // namespace powergen

#endif
