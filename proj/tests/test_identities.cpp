#include <vector>

#include <gtest/gtest.h>

#include <powergen/identities.hpp>

#include "oracles.hpp"

using powergen::BigInt;
using powergen::Polynomial;
using powergen::RatAtOne;
using powergen::Rational;
using powergen::ZeroConvention;

namespace
{

Rational q(long long n, long long d)
{
    return Rational(BigInt(n), BigInt(d));
}

// Direct sum of k^p for k = 1..n, independent of powergen::faulhaber.
BigInt power_sum(std::size_t p, std::size_t n)
{
    BigInt s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        s += oracle::ipow(k, p);
    }
    return s;
}

Rational choose(std::size_t n, std::size_t k)
{
    return Rational(oracle::pascal(n)[n][k]);
}

} // namespace

TEST(Faulhaber, Values)
{
    EXPECT_EQ(powergen::faulhaber(2, 3), 14);
    for (std::size_t p = 0; p <= 5; ++p) {
        EXPECT_EQ(powergen::faulhaber(p, 0), 0);
    }
    EXPECT_EQ(powergen::faulhaber(0, 3, ZeroConvention::on), 4);
    EXPECT_EQ(powergen::faulhaber(0, 3, ZeroConvention::off), 3);
    // the convention only adds 0^0
    EXPECT_EQ(powergen::faulhaber(2, 3, ZeroConvention::on), 14);
}

TEST(Faulhaber, Telescoping)
{
    for (std::size_t p = 0; p <= 12; ++p) {
        for (std::size_t n = 1; n <= 40; ++n) {
            ASSERT_EQ(powergen::faulhaber(p, n) - powergen::faulhaber(p, n - 1), oracle::ipow(n, p));
        }
    }
}

TEST(EgfClosedForm, PaperPolynomials)
{
    EXPECT_EQ(powergen::egf_closed_form(1), (Polynomial{Rational(0), Rational(1), q(1, 2)}));
    EXPECT_EQ(powergen::egf_closed_form(2), (Polynomial{Rational(0), Rational(1), q(3, 2), q(1, 3)}));
    EXPECT_EQ(powergen::egf_closed_form(3), (Polynomial{Rational(0), Rational(1), q(7, 2), Rational(2), q(1, 4)}));
    EXPECT_EQ(powergen::egf_closed_form(4),
              (Polynomial{Rational(0), Rational(1), q(15, 2), q(25, 3), q(5, 2), q(1, 5)}));
    // p = 0: A_0 = x
    EXPECT_EQ(powergen::egf_closed_form(0), (Polynomial{0, 1}));
}

TEST(EgfClosedForm, AlternativeForm)
{
    EXPECT_EQ(powergen::egf_closed_form_alt(3), powergen::egf_closed_form(3));
    EXPECT_EQ(powergen::egf_closed_form_alt(0), (Polynomial{1, 1}));
    EXPECT_EQ(powergen::egf_closed_form_alt(1), (Polynomial{Rational(0), Rational(1), q(1, 2)}));
    for (std::size_t p = 1; p <= 30; ++p) {
        ASSERT_EQ(powergen::egf_closed_form(p), powergen::egf_closed_form_alt(p)) << p;
    }
    EXPECT_EQ(powergen::egf_closed_form_alt(0) - powergen::egf_closed_form(0), Polynomial::constant(Rational(1)));
}

TEST(EgfSeriesCheck, Passes)
{
    EXPECT_TRUE(powergen::egf_series_check(3, 20).passed());
    EXPECT_TRUE(powergen::egf_series_check(0, 10, ZeroConvention::on).passed());
    EXPECT_TRUE(powergen::egf_series_check(0, 10, ZeroConvention::off).passed());
    for (std::size_t p = 0; p <= 12; ++p) {
        ASSERT_TRUE(powergen::egf_series_check(p, 40).passed()) << p;
    }
}

TEST(EgfSeriesCheck, AltNeedsZeroConventionAtPZero)
{
    const auto off = powergen::egf_alt_series_check(0, 10, ZeroConvention::off);
    ASSERT_FALSE(off.passed());
    EXPECT_EQ(off.first_mismatch->n, 1u);
    EXPECT_EQ(off.first_mismatch->expected, Rational(1));
    EXPECT_EQ(off.first_mismatch->got, Rational(2));
    EXPECT_TRUE(powergen::egf_alt_series_check(0, 10, ZeroConvention::on).passed());
    EXPECT_TRUE(powergen::egf_alt_series_check(4, 10, ZeroConvention::off).passed());
}

TEST(EgfSeriesCheck, MutationLocated)
{
    const auto a = powergen::egf_closed_form(3);
    const auto bad = a.with_coeff(2, a.coeff(2) + Rational(1));
    const auto rep = powergen::egf_series_check(bad, 3, 20, ZeroConvention::off);
    ASSERT_FALSE(rep.passed());
    EXPECT_EQ(rep.first_mismatch->n, 2u);
    EXPECT_EQ(rep.first_mismatch->expected, Rational(9));
    EXPECT_EQ(rep.first_mismatch->got, Rational(11));
}

// The tail series y_p = sum_{n>=2} (1^p + ... + (n-1)^p) x^n/n! has EGF
// e^x (A_p - phi_p).
TEST(EgfSeriesCheck, TailFormSeries)
{
    for (std::size_t p = 1; p <= 10; ++p) {
        const Polynomial y = powergen::egf_closed_form(p) - powergen::exp_poly(p);
        for (std::size_t n = 2; n <= 25; ++n) {
            ASSERT_EQ(powergen::egf_coefficient(y, n), Rational(power_sum(p, n - 1))) << p << " " << n;
        }
    }
}

TEST(Prop1, Passes)
{
    for (std::size_t p : {0u, 2u, 5u}) {
        const auto reps = powergen::prop1_series_check(p, 25);
        ASSERT_EQ(reps.size(), 2u);
        EXPECT_TRUE(reps[0].passed()) << p;
        EXPECT_TRUE(reps[1].passed()) << p;
    }
    // n! [x^n] e^x (x^2 + x) = n(n-1) + n = n^2
    for (std::size_t n = 1; n <= 15; ++n) {
        EXPECT_EQ(powergen::egf_coefficient(Polynomial{0, 1, 1}, n), Rational(n * n));
    }
}

TEST(Prop1, MutationLocated)
{
    const auto phi = powergen::exp_poly(4);
    const auto a = powergen::egf_closed_form(4);
    const auto bad_phi = powergen::prop1_series_check(phi.with_coeff(3, phi.coeff(3) + Rational(1)), a, 4, 20);
    ASSERT_FALSE(bad_phi[0].passed());
    EXPECT_EQ(bad_phi[0].first_mismatch->n, 3u);
    const auto bad_a = powergen::prop1_series_check(phi, a.with_coeff(5, a.coeff(5) + Rational(1)), 4, 20);
    EXPECT_TRUE(bad_a[0].passed());
    ASSERT_FALSE(bad_a[1].passed());
    EXPECT_EQ(bad_a[1].first_mismatch->n, 5u);
}

TEST(OgfClosedForm, Values)
{
    EXPECT_EQ(powergen::ogf_closed_form(1), RatAtOne(Polynomial{0, 1}, 3));
    EXPECT_EQ(powergen::ogf_closed_form(2), RatAtOne(Polynomial{0, 1, 1}, 4));
    EXPECT_EQ(powergen::ogf_closed_form(0), RatAtOne(Polynomial{1}, 2));
    const auto c = powergen::taylor(powergen::ogf_closed_form(0), 10);
    for (std::size_t n = 0; n < 10; ++n) {
        EXPECT_EQ(c[n], Rational(n + 1));
    }
}

TEST(OgfSeriesCheck, Values)
{
    EXPECT_TRUE(powergen::ogf_series_check(1, 20).passed());
    EXPECT_TRUE(powergen::ogf_series_check(3, 20).passed());
    EXPECT_EQ(powergen::taylor(powergen::ogf_closed_form(3), 4)[3], Rational(36));
    EXPECT_TRUE(powergen::ogf_series_check(0, 10, ZeroConvention::on).passed());
    const auto off = powergen::ogf_series_check(0, 10, ZeroConvention::off);
    ASSERT_FALSE(off.passed());
    EXPECT_EQ(off.first_mismatch->n, 0u);
    for (std::size_t n = 1; n < 20; ++n) {
        EXPECT_EQ(powergen::taylor(powergen::ogf_closed_form(1), 20)[n], choose(n + 1, 2));
    }
}

TEST(OgfSeriesCheck, MutationLocated)
{
    const auto f = powergen::ogf_closed_form(4);
    for (std::size_t j = 0; j < f.numerator().size(); ++j) {
        const auto num = f.numerator();
        const RatAtOne bad(num.with_coeff(j, num.coeff(j) + Rational(1)), f.pole_order());
        const auto rep = powergen::ogf_series_check(bad, 4, 20, ZeroConvention::off);
        ASSERT_FALSE(rep.passed());
        EXPECT_EQ(rep.first_mismatch->n, j);
    }
}

TEST(BinomialOgf, Values)
{
    for (std::size_t p = 1; p <= 5; ++p) {
        EXPECT_EQ(powergen::binomial_ogf(p, 0), powergen::ogf_closed_form(p));
    }
    const auto c11 = powergen::taylor(powergen::binomial_ogf(1, 1), 15);
    for (std::size_t n = 0; n < 15; ++n) {
        EXPECT_EQ(c11[n], Rational((n + 1) * n * (n + 1) / 2));
    }
    EXPECT_EQ(powergen::taylor(powergen::binomial_ogf(2, 2), 3)[2], Rational(30));
    EXPECT_THROW(powergen::binomial_ogf(0, 1), powergen::domain_error);
}

TEST(BinomialOgf, CoefficientIdentity)
{
    for (std::size_t p = 1; p <= 8; ++p) {
        for (std::size_t r = 0; r <= 5; ++r) {
            const auto c = powergen::taylor(powergen::binomial_ogf(p, r), 25);
            for (std::size_t n = 0; n < 25; ++n) {
                ASSERT_EQ(c[n], choose(n + r, r) * Rational(power_sum(p, n)));
            }
            ASSERT_TRUE(powergen::binomial_ogf_check(p, r, 25).passed());
        }
    }
}

TEST(WeightedPowerOgf, Values)
{
    EXPECT_EQ(powergen::weighted_power_ogf(0, 0), RatAtOne(Polynomial{1}, 1));
    EXPECT_EQ(powergen::weighted_power_ogf(1, 0), RatAtOne(Polynomial{0, 1}, 2));
    EXPECT_EQ(powergen::weighted_power_ogf(1, 1), RatAtOne(Polynomial{0, 2}, 3));
    const auto c = powergen::taylor(powergen::weighted_power_ogf(1, 1), 12);
    for (std::size_t n = 0; n < 12; ++n) {
        EXPECT_EQ(c[n], Rational((n + 1) * n));
    }
}

TEST(WeightedPowerOgf, CoefficientIdentity)
{
    for (std::size_t p = 0; p <= 8; ++p) {
        for (std::size_t r = 0; r <= 5; ++r) {
            const auto c = powergen::taylor(powergen::weighted_power_ogf(p, r), 25);
            for (std::size_t n = 0; n < 25; ++n) {
                ASSERT_EQ(c[n], choose(n + r, r) * Rational(oracle::ipow(n, p)));
            }
            ASSERT_TRUE(powergen::weighted_power_ogf_check(p, r, 25).passed());
        }
    }
}

TEST(TailIdentity, Values)
{
    // r = 0, p = 1: x/(1-x)^2 * omega_1(x/(1-x)) = x^2/(1-x)^3
    EXPECT_EQ(powergen::tail_closed_form(1, 0), RatAtOne(Polynomial{0, 0, 1}, 3));
    EXPECT_TRUE(powergen::tail_ogf_identity(1, 0, 20).passed());
    EXPECT_TRUE(powergen::tail_ogf_identity(2, 1, 15).passed());
    for (std::size_t p = 1; p <= 3; ++p) {
        for (std::size_t r = 0; r <= 3; ++r) {
            EXPECT_TRUE(powergen::tail_ogf_identity(p, r, 1).passed());
        }
    }
    EXPECT_THROW(powergen::tail_ogf_identity(0, 0, 10), powergen::domain_error);
}

TEST(TailIdentity, RZeroIsGeometricForm)
{
    // x/(1-x)^2 omega_p(x/(1-x)) = x * ogf_closed_form(p)
    for (std::size_t p = 1; p <= 8; ++p) {
        const auto expect = RatAtOne(Polynomial::x()) * powergen::ogf_closed_form(p);
        EXPECT_EQ(powergen::tail_closed_form(p, 0), expect) << p;
    }
}

TEST(TailIdentity, DirectSeriesMatchesExchangedForm)
{
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::size_t r = 0; r <= 3; ++r) {
            const auto lhs = powergen::tail_series_direct(p, r, 20);
            for (std::size_t n = 0; n < 20; ++n) {
                const Rational expect = n == 0 ? Rational() : choose(n + r, r) * Rational(power_sum(p, n - 1));
                ASSERT_EQ(lhs[n], expect);
            }
        }
    }
}

TEST(TailIdentity, MutationLocated)
{
    const auto f = powergen::tail_closed_form(3, 2);
    for (std::size_t j = 0; j < f.numerator().size(); ++j) {
        const auto num = f.numerator();
        const RatAtOne bad(num.with_coeff(j, num.coeff(j) - Rational(1)), f.pole_order());
        const auto rep = powergen::tail_ogf_identity(bad, 3, 2, 30);
        ASSERT_FALSE(rep.passed());
        EXPECT_EQ(rep.first_mismatch->n, j);
    }
}

TEST(PolynomialChecks, GrunertAndQ)
{
    for (std::size_t p = 0; p <= 30; ++p) {
        ASSERT_TRUE(powergen::grunert_check(p).passed());
    }
    for (std::size_t p = 1; p <= 30; ++p) {
        ASSERT_TRUE(powergen::q_equals_phi_check(p).passed());
    }
}

TEST(Checks, OrderZeroRejected)
{
    EXPECT_THROW(powergen::egf_series_check(2, 0), powergen::domain_error);
    EXPECT_THROW(powergen::ogf_series_check(2, 0), powergen::domain_error);
    EXPECT_THROW(powergen::tail_ogf_identity(2, 1, 0), powergen::domain_error);
}

TEST(Checks, ReportParams)
{
    const auto rep = powergen::binomial_ogf_check(2, 3, 12);
    ASSERT_EQ(rep.params.size(), 3u);
    EXPECT_EQ(rep.params[0].first, "p");
    EXPECT_EQ(std::get<std::int64_t>(rep.params[0].second), 2);
    EXPECT_EQ(rep.params[1].first, "r");
    EXPECT_EQ(rep.params[2].first, "N");
    EXPECT_EQ(rep.identity, powergen::IdentityId::binomial_ogf);
}
