#ifndef POWERGEN_REPORT_HPP
#define POWERGEN_REPORT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <powergen/exact.hpp>

namespace powergen
{

enum class IdentityId {
    egf,
    egf_alt,
    prop1_e_series,
    prop1_reduction,
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

inline constexpr std::array<std::pair<IdentityId, std::string_view>, 13> identity_names{{
    {IdentityId::egf, "egf"},
    {IdentityId::egf_alt, "egf-alt"},
    {IdentityId::prop1_e_series, "prop1-e-series"},
    {IdentityId::prop1_reduction, "prop1-reduction"},
    {IdentityId::ogf, "ogf"},
    {IdentityId::binomial_ogf, "binomial-ogf"},
    {IdentityId::weighted_ogf, "weighted-ogf"},
    {IdentityId::tail, "tail"},
    {IdentityId::grunert, "grunert"},
    {IdentityId::q_equals_phi, "q-equals-phi"},
    {IdentityId::ein_triangle, "ein-triangle"},
    {IdentityId::harmonic_egf, "harmonic-egf"},
    {IdentityId::reciprocal_ogf, "reciprocal-ogf"},
}};

} // namespace detail

inline std::string_view to_string(IdentityId id)
{
    for (const auto &[k, name] : detail::identity_names) {
        if (k == id) {
            return name;
        }
    }
    return "unknown";
}

inline std::optional<IdentityId> identity_from_string(std::string_view s)
{
    for (const auto &[k, name] : detail::identity_names) {
        if (name == s) {
            return k;
        }
    }
    return std::nullopt;
}

struct Mismatch {
    std::size_t n;
    Rational expected;
    Rational got;

    friend bool operator==(const Mismatch &, const Mismatch &) = default;
};

// Floating-point comparison data, present on reports from the numeric checks.
struct NumericDetail {
    double lhs = 0;
    double rhs = 0;
    double gap = 0;
    double tail_bound = 0;
    double tolerance = 0;

    friend bool operator==(const NumericDetail &, const NumericDetail &) = default;
};

using ParamValue = std::variant<std::int64_t, double, bool>;

// Outcome of one identity check. The check passed iff there is no mismatch.
struct VerificationReport {
    IdentityId identity;
    std::vector<std::pair<std::string, ParamValue>> params;
    std::optional<Mismatch> first_mismatch;
    std::optional<NumericDetail> numeric;

    bool passed() const noexcept
    {
        return !first_mismatch.has_value();
    }

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

} // namespace powergen

#endif
