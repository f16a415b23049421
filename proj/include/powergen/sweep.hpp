#ifndef POWERGEN_SWEEP_HPP
#define POWERGEN_SWEEP_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <powergen/errors.hpp>
#include <powergen/identities.hpp>
#include <powergen/numeric.hpp>
#include <powergen/report.hpp>

namespace powergen
{

// Families of checks that can be swept over a parameter grid.
enum class Sweep {
    egf,
    prop1,
    ogf,
    binomial_ogf,
    weighted_ogf,
    tail,
    grunert,
    q_equals_phi,
    ein_triangle,
    harmonic_egf,
    reciprocal_ogf,
};

namespace detail
{

inline constexpr std::array<std::pair<Sweep, std::string_view>, 11> sweep_names{{
    {Sweep::egf, "egf"},
    {Sweep::prop1, "prop1"},
    {Sweep::ogf, "ogf"},
    {Sweep::binomial_ogf, "binomial-ogf"},
    {Sweep::weighted_ogf, "weighted-ogf"},
    {Sweep::tail, "tail"},
    {Sweep::grunert, "grunert"},
    {Sweep::q_equals_phi, "q-equals-phi"},
    {Sweep::ein_triangle, "ein-triangle"},
    {Sweep::harmonic_egf, "harmonic-egf"},
    {Sweep::reciprocal_ogf, "reciprocal-ogf"},
}};

} // namespace detail

inline std::optional<Sweep> sweep_from_string(std::string_view s)
{
    for (const auto &[k, name] : detail::sweep_names) {
        if (name == s) {
            return k;
        }
    }
    return std::nullopt;
}

inline std::vector<std::string_view> sweep_names()
{
    std::vector<std::string_view> out;
    for (const auto &entry : detail::sweep_names) {
        out.push_back(entry.second);
    }
    return out;
}

struct SweepRequest {
    Sweep sweep = Sweep::egf;
    std::size_t p_max = 8;
    std::size_t r_max = 3;
    std::size_t order = default_order;
    ZeroConvention zero = ZeroConvention::off;
    // Sample points for the numeric sweeps; empty selects the defaults.
    std::vector<double> xs;
    double tolerance = 1e-12;
    // 0 picks the hardware concurrency.
    std::size_t threads = 0;
};

inline std::vector<double> default_points(Sweep s)
{
    switch (s) {
        case Sweep::ein_triangle:
            return {0.25, 1, 2, 5};
        case Sweep::harmonic_egf:
            return {-2, 0.5, 3};
        case Sweep::reciprocal_ogf:
            return {0.25, 0.5};
        default:
            return {};
    }
}

// Runs every check of the sweep. Jobs may execute concurrently; the result is
// always in lexicographic parameter order (p, then r, then x).
inline std::vector<VerificationReport> run_sweep(const SweepRequest &req)
{
    using Job = std::function<std::vector<VerificationReport>()>;
    std::vector<Job> jobs;
    const std::size_t order = req.order;
    if (order == 0) {
        throw domain_error("--order must be at least 1");
    }
    const auto need_p1 = [&](const char *name) {
        if (req.p_max < 1) {
            throw domain_error(std::string(name) + " requires --p-max >= 1");
        }
    };
    const ZeroConvention zero = req.zero;
    const std::vector<double> xs = req.xs.empty() ? default_points(req.sweep) : req.xs;
    const EvalOptions opts(req.tolerance);

    switch (req.sweep) {
        case Sweep::egf:
            for (std::size_t p = 0; p <= req.p_max; ++p) {
                jobs.emplace_back([=] {
                    return std::vector{egf_series_check(p, order, zero), egf_alt_series_check(p, order, zero)};
                });
            }
            break;
        case Sweep::prop1:
            for (std::size_t p = 0; p <= req.p_max; ++p) {
                jobs.emplace_back([=] { return prop1_series_check(p, order); });
            }
            break;
        case Sweep::ogf:
            for (std::size_t p = 0; p <= req.p_max; ++p) {
                jobs.emplace_back([=] { return std::vector{ogf_series_check(p, order, zero)}; });
            }
            break;
        case Sweep::binomial_ogf:
            need_p1("binomial-ogf");
            for (std::size_t p = 1; p <= req.p_max; ++p) {
                for (std::size_t r = 0; r <= req.r_max; ++r) {
                    jobs.emplace_back([=] { return std::vector{binomial_ogf_check(p, r, order)}; });
                }
            }
            break;
        case Sweep::weighted_ogf:
            for (std::size_t p = 0; p <= req.p_max; ++p) {
                for (std::size_t r = 0; r <= req.r_max; ++r) {
                    jobs.emplace_back([=] { return std::vector{weighted_power_ogf_check(p, r, order)}; });
                }
            }
            break;
        case Sweep::tail:
            need_p1("tail");
            for (std::size_t p = 1; p <= req.p_max; ++p) {
                for (std::size_t r = 0; r <= req.r_max; ++r) {
                    jobs.emplace_back([=] { return std::vector{tail_ogf_identity(p, r, order)}; });
                }
            }
            break;
        case Sweep::grunert:
            for (std::size_t p = 0; p <= req.p_max; ++p) {
                jobs.emplace_back([=] { return std::vector{grunert_check(p)}; });
            }
            break;
        case Sweep::q_equals_phi:
            need_p1("q-equals-phi");
            for (std::size_t p = 1; p <= req.p_max; ++p) {
                jobs.emplace_back([=] { return std::vector{q_equals_phi_check(p)}; });
            }
            break;
        case Sweep::ein_triangle:
            for (double x : xs) {
                jobs.emplace_back([=] { return std::vector{ein_triangle_check(x, opts)}; });
            }
            break;
        case Sweep::harmonic_egf:
            for (double x : xs) {
                jobs.emplace_back([=] { return std::vector{harmonic_egf_check(x, order, opts)}; });
            }
            break;
        case Sweep::reciprocal_ogf:
            need_p1("reciprocal-ogf");
            for (std::size_t p = 1; p <= req.p_max; ++p) {
                for (double x : xs) {
                    jobs.emplace_back(
                        [=] { return reciprocal_sum_ogf_check(static_cast<double>(p), x, order, opts); });
                }
            }
            break;
    }

    std::vector<std::vector<VerificationReport>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t nthreads = req.threads != 0 ? req.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, jobs.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<VerificationReport> out;
    for (auto &r : results) {
        for (auto &rep : r) {
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace powergen

#endif
