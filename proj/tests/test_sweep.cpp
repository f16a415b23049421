#include <gtest/gtest.h>

#include <powergen/render.hpp>
#include <powergen/sweep.hpp>

using powergen::Sweep;
using powergen::SweepRequest;

namespace
{

std::vector<std::string> dump(const std::vector<powergen::VerificationReport> &reps)
{
    std::vector<std::string> out;
    for (const auto &r : reps) {
        out.push_back(powergen::to_json(r).dump());
    }
    return out;
}

} // namespace

TEST(Sweep, Names)
{
    for (auto name : powergen::sweep_names()) {
        ASSERT_TRUE(powergen::sweep_from_string(name).has_value()) << name;
    }
    EXPECT_FALSE(powergen::sweep_from_string("nope").has_value());
    EXPECT_EQ(powergen::sweep_names().size(), 11u);
}

TEST(Sweep, ResultIndependentOfThreadCount)
{
    for (Sweep s : {Sweep::egf, Sweep::tail, Sweep::weighted_ogf, Sweep::reciprocal_ogf}) {
        SweepRequest req;
        req.sweep = s;
        req.p_max = 5;
        req.r_max = 2;
        req.order = 20;
        req.threads = 1;
        const auto serial = dump(powergen::run_sweep(req));
        for (std::size_t t : {2u, 3u, 8u}) {
            req.threads = t;
            EXPECT_EQ(dump(powergen::run_sweep(req)), serial);
        }
    }
}

TEST(Sweep, LexicographicOrder)
{
    SweepRequest req;
    req.sweep = Sweep::tail;
    req.p_max = 3;
    req.r_max = 2;
    req.order = 10;
    const auto reps = powergen::run_sweep(req);
    ASSERT_EQ(reps.size(), 9u);
    std::size_t i = 0;
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t r = 0; r <= 2; ++r, ++i) {
            EXPECT_EQ(std::get<std::int64_t>(reps[i].params.at(0).second), p);
            EXPECT_EQ(std::get<std::int64_t>(reps[i].params.at(1).second), r);
            EXPECT_TRUE(reps[i].passed());
        }
    }
}

TEST(Sweep, EgfAtZeroNeedsConvention)
{
    SweepRequest req;
    req.sweep = Sweep::egf;
    req.p_max = 0;
    const auto off = powergen::run_sweep(req);
    ASSERT_EQ(off.size(), 2u);
    EXPECT_TRUE(off[0].passed());
    EXPECT_FALSE(off[1].passed());
    req.zero = powergen::ZeroConvention::on;
    for (const auto &r : powergen::run_sweep(req)) {
        EXPECT_TRUE(r.passed()) << powergen::to_text(r);
    }
}

TEST(Sweep, AllDefaultSweepsPass)
{
    for (auto name : powergen::sweep_names()) {
        SweepRequest req;
        req.sweep = *powergen::sweep_from_string(name);
        req.zero = powergen::ZeroConvention::on;
        if (req.sweep == Sweep::harmonic_egf || req.sweep == Sweep::reciprocal_ogf) {
            req.order = 60;
        }
        if (req.sweep == Sweep::reciprocal_ogf) {
            req.tolerance = 1e-10;
            req.p_max = 3;
        }
        for (const auto &r : powergen::run_sweep(req)) {
            EXPECT_TRUE(r.passed()) << powergen::to_text(r);
        }
    }
}

TEST(Sweep, Rejections)
{
    SweepRequest req;
    req.p_max = 0;
    for (Sweep s : {Sweep::binomial_ogf, Sweep::tail, Sweep::q_equals_phi, Sweep::reciprocal_ogf}) {
        req.sweep = s;
        EXPECT_THROW(powergen::run_sweep(req), powergen::domain_error);
    }
    req.sweep = Sweep::ogf;
    req.order = 0;
    EXPECT_THROW(powergen::run_sweep(req), powergen::domain_error);
}

TEST(Sweep, CustomPoints)
{
    SweepRequest req;
    req.sweep = Sweep::ein_triangle;
    req.xs = {0.5, 3};
    const auto reps = powergen::run_sweep(req);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_EQ(std::get<double>(reps[1].params.at(0).second), 3.0);
}
