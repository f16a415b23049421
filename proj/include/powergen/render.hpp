#ifndef POWERGEN_RENDER_HPP
#define POWERGEN_RENDER_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>
#include <powergen/ratfn.hpp>
#include <powergen/report.hpp>

// Text, LaTeX and JSON rendering of polynomials, rational functions, reports
// and Stirling tables, plus the JSON readers used for round-tripping.
//
// Text form: descending powers, reduced fractions, explicit '*', e.g.
// "1/4*x^4 + 2*x^3 + 7/2*x^2 + x". JSON form: big integers are decimal strings,
// a rational is [num, den], a polynomial {"coeffs": [...]} low to high.

namespace powergen
{

enum class OutputFormat { text, latex, json };

inline std::optional<OutputFormat> format_from_string(std::string_view s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "latex") {
        return OutputFormat::latex;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    return std::nullopt;
}

using Json = nlohmann::ordered_json;

namespace detail
{

inline std::string shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string text_power(std::size_t k)
{
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return "x";
    }
    return "x^" + std::to_string(k);
}

inline std::string latex_power(std::size_t k)
{
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return "x";
    }
    return "x^{" + std::to_string(k) + "}";
}

// Signed terms, highest power first, without separators.
template <typename Term>
std::string join_terms(const Polynomial &a, Term &&term, std::string_view plus, std::string_view minus,
                       std::string_view leading_minus)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    const auto cs = a.coefficients();
    bool first = true;
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Rational &c = cs[i];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) {
                out += leading_minus;
            }
        } else {
            out += neg ? minus : plus;
        }
        out += term(neg ? -c : c, i);
        first = false;
    }
    return out;
}

inline bool is_single_integer_term(const Polynomial &a)
{
    std::size_t nonzero = 0;
    bool integral = true;
    for (const auto &c : a.coefficients()) {
        if (!c.is_zero()) {
            ++nonzero;
            integral = integral && c.is_integer();
        }
    }
    return nonzero <= 1 && integral;
}

} // namespace detail

inline std::string to_text(const Polynomial &a)
{
    return detail::join_terms(
        a,
        [](const Rational &c, std::size_t k) {
            const std::string pw = detail::text_power(k);
            if (k == 0) {
                return c.str();
            }
            if (c == Rational(1)) {
                return pw;
            }
            return c.str() + "*" + pw;
        },
        " + ", " - ", "-");
}

inline std::string to_latex(const Polynomial &a)
{
    return detail::join_terms(
        a,
        [](const Rational &c, std::size_t k) {
            const std::string pw = detail::latex_power(k);
            if (c.is_integer()) {
                if (k == 0) {
                    return c.num().str();
                }
                return c == Rational(1) ? pw : c.num().str() + pw;
            }
            std::string top = (k > 0 && c.num() == 1) ? pw : c.num().str() + pw;
            return "\\frac{" + top + "}{" + c.den().str() + "}";
        },
        "+", "-", "-");
}

namespace detail
{

inline std::string text_pole(std::size_t m)
{
    return m == 1 ? "(1 - x)" : "(1 - x)^" + std::to_string(m);
}

} // namespace detail

inline std::string to_text(const RatAtOne &f)
{
    if (f.is_polynomial()) {
        return to_text(f.numerator());
    }
    std::string num = to_text(f.numerator());
    if (!detail::is_single_integer_term(f.numerator())) {
        num = "(" + num + ")";
    }
    return num + "/" + detail::text_pole(f.pole_order());
}

inline std::string to_latex(const RatAtOne &f)
{
    if (f.is_polynomial()) {
        return to_latex(f.numerator());
    }
    const std::size_t m = f.pole_order();
    const std::string den = m == 1 ? "1-x" : "(1-x)^{" + std::to_string(m) + "}";
    return "\\frac{" + to_latex(f.numerator()) + "}{" + den + "}";
}

// e^x a(x).
inline std::string egf_to_text(const Polynomial &a)
{
    if (a.is_zero()) {
        return "0";
    }
    return "exp(x)*(" + to_text(a) + ")";
}

inline std::string egf_to_latex(const Polynomial &a)
{
    if (a.is_zero()) {
        return "0";
    }
    return "e^{x}\\left(" + to_latex(a) + "\\right)";
}

// ---- JSON ----

inline Json to_json(const Rational &c)
{
    return Json::array({c.num().str(), c.den().str()});
}

inline Json to_json(const Polynomial &a)
{
    Json coeffs = Json::array();
    for (const auto &c : a.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    Json out = Json::object();
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline Json to_json(const RatAtOne &f)
{
    Json out = Json::object();
    out["numerator"] = to_json(f.numerator());
    out["pole_order"] = f.pole_order();
    return out;
}

// e^x a(x): the polynomial schema with a "times_exp" marker.
inline Json egf_to_json(const Polynomial &a)
{
    Json out = to_json(a);
    out["times_exp"] = true;
    return out;
}

namespace detail
{

inline Json param_to_json(const ParamValue &v)
{
    return std::visit([](auto x) { return Json(x); }, v);
}

// JSON has no infinities; they are written as null.
inline Json finite_or_null(double v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

inline double double_or_inf(const Json &j)
{
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

inline BigInt parse_bigint(const Json &j)
{
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
        throw domain_error("malformed integer string: " + s);
    }
    return BigInt(s);
}

} // namespace detail

inline Json to_json(const VerificationReport &rep)
{
    Json out = Json::object();
    out["identity"] = std::string(to_string(rep.identity));
    Json params = Json::object();
    for (const auto &[k, v] : rep.params) {
        params[k] = detail::param_to_json(v);
    }
    out["params"] = std::move(params);
    out["status"] = rep.passed() ? "pass" : "fail";
    if (rep.first_mismatch) {
        Json mm = Json::object();
        mm["n"] = rep.first_mismatch->n;
        mm["expected"] = to_json(rep.first_mismatch->expected);
        mm["got"] = to_json(rep.first_mismatch->got);
        out["first_mismatch"] = std::move(mm);
    } else {
        out["first_mismatch"] = nullptr;
    }
    if (rep.numeric) {
        Json num = Json::object();
        num["lhs"] = detail::finite_or_null(rep.numeric->lhs);
        num["rhs"] = detail::finite_or_null(rep.numeric->rhs);
        num["gap"] = detail::finite_or_null(rep.numeric->gap);
        num["tail_bound"] = detail::finite_or_null(rep.numeric->tail_bound);
        num["tolerance"] = detail::finite_or_null(rep.numeric->tolerance);
        out["numeric"] = std::move(num);
    }
    return out;
}

inline Rational rational_from_json(const Json &j)
{
    if (!j.is_array() || j.size() != 2) {
        throw domain_error("a rational must be a [numerator, denominator] pair");
    }
    return Rational(detail::parse_bigint(j[0]), detail::parse_bigint(j[1]));
}

inline Polynomial polynomial_from_json(const Json &j)
{
    std::vector<Rational> v;
    for (const auto &c : j.at("coeffs")) {
        v.push_back(rational_from_json(c));
    }
    return Polynomial(std::move(v));
}

inline RatAtOne ratfn_from_json(const Json &j)
{
    return RatAtOne(polynomial_from_json(j.at("numerator")), j.at("pole_order").get<std::size_t>());
}

inline VerificationReport report_from_json(const Json &j)
{
    const auto id = identity_from_string(j.at("identity").get<std::string>());
    if (!id) {
        throw domain_error("unknown identity tag");
    }
    VerificationReport rep{*id, {}, std::nullopt, std::nullopt};
    for (const auto &[k, v] : j.at("params").items()) {
        if (v.is_boolean()) {
            rep.params.emplace_back(k, v.get<bool>());
        } else if (v.is_number_integer()) {
            rep.params.emplace_back(k, v.get<std::int64_t>());
        } else {
            rep.params.emplace_back(k, v.get<double>());
        }
    }
    const auto &mm = j.at("first_mismatch");
    if (!mm.is_null()) {
        rep.first_mismatch = Mismatch{mm.at("n").get<std::size_t>(), rational_from_json(mm.at("expected")),
                                      rational_from_json(mm.at("got"))};
    }
    if (j.contains("numeric")) {
        const auto &num = j.at("numeric");
        rep.numeric = NumericDetail{detail::double_or_inf(num.at("lhs")), detail::double_or_inf(num.at("rhs")),
                                    detail::double_or_inf(num.at("gap")), detail::double_or_inf(num.at("tail_bound")),
                                    detail::double_or_inf(num.at("tolerance"))};
    }
    if ((j.at("status").get<std::string>() == "pass") != rep.passed()) {
        throw domain_error("report status disagrees with first_mismatch");
    }
    return rep;
}

inline std::string to_text(const VerificationReport &rep)
{
    std::string out = rep.passed() ? "PASS " : "FAIL ";
    out += to_string(rep.identity);
    for (const auto &[k, v] : rep.params) {
        out += " " + k + "=";
        std::visit(
            [&](auto x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, bool>) {
                    out += x ? "on" : "off";
                } else if constexpr (std::is_same_v<T, double>) {
                    out += detail::shortest(x);
                } else {
                    out += std::to_string(x);
                }
            },
            v);
    }
    if (rep.numeric) {
        out += " gap=" + detail::shortest(rep.numeric->gap) + " tail_bound=" + detail::shortest(rep.numeric->tail_bound);
    }
    if (rep.first_mismatch) {
        out += " first mismatch at n=" + std::to_string(rep.first_mismatch->n)
               + ": expected " + rep.first_mismatch->expected.str() + ", got " + rep.first_mismatch->got.str();
    }
    return out;
}

// Rows 0..n of the Stirling triangle.
inline std::string table_to_text(const std::vector<std::vector<BigInt>> &rows)
{
    std::string out;
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                out += ' ';
            }
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

inline std::string table_to_latex(const std::vector<std::vector<BigInt>> &rows)
{
    const std::size_t cols = rows.empty() ? 1 : rows.back().size();
    std::string out = "\\begin{array}{" + std::string(cols, 'r') + "}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            if (k > 0) {
                out += " & ";
            }
            out += rows[i][k].str();
        }
        out += i + 1 < rows.size() ? " \\\\\n" : "\n";
    }
    out += "\\end{array}\n";
    return out;
}

inline Json table_to_json(const std::vector<std::vector<BigInt>> &rows)
{
    Json arr = Json::array();
    for (const auto &row : rows) {
        Json r = Json::array();
        for (const auto &v : row) {
            r.push_back(v.str());
        }
        arr.push_back(std::move(r));
    }
    Json out = Json::object();
    out["rows"] = std::move(arr);
    return out;
}

} // namespace powergen

#endif
