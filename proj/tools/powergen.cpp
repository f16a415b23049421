// powergen: closed forms, identity sweeps, numeric evaluation and Stirling
// tables for power sums 1^p + 2^p + ... + n^p.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or domain error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <powergen/powergen.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

const std::vector<std::string> closed_form_kinds
    = {"egf", "egf-alt", "ogf", "binomial-ogf", "weighted-ogf", "phi", "omega", "omega-gen", "q"};
const std::vector<std::string> eval_functions = {"ein", "ei", "polylog", "E", "M"};

struct Common {
    std::string format = "text";
};

powergen::OutputFormat parse_format(const std::string &s)
{
    auto f = powergen::format_from_string(s);
    if (!f) {
        throw powergen::domain_error("unknown format '" + s + "' (expected text, latex or json)");
    }
    return *f;
}

void emit(powergen::OutputFormat fmt, const powergen::Polynomial &a)
{
    switch (fmt) {
        case powergen::OutputFormat::text:
            std::cout << powergen::to_text(a) << '\n';
            break;
        case powergen::OutputFormat::latex:
            std::cout << powergen::to_latex(a) << '\n';
            break;
        case powergen::OutputFormat::json:
            std::cout << powergen::to_json(a).dump() << '\n';
            break;
    }
}

void emit(powergen::OutputFormat fmt, const powergen::RatAtOne &f)
{
    switch (fmt) {
        case powergen::OutputFormat::text:
            std::cout << powergen::to_text(f) << '\n';
            break;
        case powergen::OutputFormat::latex:
            std::cout << powergen::to_latex(f) << '\n';
            break;
        case powergen::OutputFormat::json:
            std::cout << powergen::to_json(f).dump() << '\n';
            break;
    }
}

void emit_egf(powergen::OutputFormat fmt, const powergen::Polynomial &a)
{
    switch (fmt) {
        case powergen::OutputFormat::text:
            std::cout << powergen::egf_to_text(a) << '\n';
            break;
        case powergen::OutputFormat::latex:
            std::cout << powergen::egf_to_latex(a) << '\n';
            break;
        case powergen::OutputFormat::json:
            std::cout << powergen::egf_to_json(a).dump() << '\n';
            break;
    }
}

struct ClosedFormArgs {
    std::string kind;
    std::size_t p = 0;
    std::size_t r = 0;
    Common common;
};

int run_closed_form(const ClosedFormArgs &a)
{
    using namespace powergen;
    const OutputFormat fmt = parse_format(a.common.format);
    if (a.kind == "egf") {
        emit_egf(fmt, egf_closed_form(a.p));
    } else if (a.kind == "egf-alt") {
        emit_egf(fmt, egf_closed_form_alt(a.p));
    } else if (a.kind == "ogf") {
        emit(fmt, ogf_closed_form(a.p));
    } else if (a.kind == "binomial-ogf") {
        emit(fmt, binomial_ogf(a.p, a.r));
    } else if (a.kind == "weighted-ogf") {
        emit(fmt, weighted_power_ogf(a.p, a.r));
    } else if (a.kind == "phi") {
        emit(fmt, exp_poly(a.p));
    } else if (a.kind == "omega") {
        emit(fmt, geo_poly(a.p));
    } else if (a.kind == "omega-gen") {
        emit(fmt, gen_geo_poly(a.p, a.r));
    } else if (a.kind == "q") {
        emit(fmt, recurrence_poly(a.p));
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string identity;
    powergen::SweepRequest req;
    bool zero_convention = false;
    Common common;
};

int run_verify(VerifyArgs a)
{
    using namespace powergen;
    const OutputFormat fmt = parse_format(a.common.format);
    a.req.sweep = *sweep_from_string(a.identity);
    a.req.zero = a.zero_convention ? ZeroConvention::on : ZeroConvention::off;
    const auto reports = run_sweep(a.req);
    bool all = true;
    std::size_t failed = 0;
    for (const auto &rep : reports) {
        all = all && rep.passed();
        failed += rep.passed() ? 0 : 1;
        if (fmt == OutputFormat::json) {
            std::cout << to_json(rep).dump() << '\n';
        } else {
            std::cout << to_text(rep) << '\n';
        }
    }
    std::cerr << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return all ? exit_ok : exit_failed;
}

struct EvalArgs {
    std::string func;
    double x = 0;
    std::optional<double> p;
    std::optional<std::size_t> order;
    double tol = 1e-12;
    std::size_t max_terms = 500;
    Common common;
};

int run_eval(const EvalArgs &a)
{
    using namespace powergen;
    const OutputFormat fmt = parse_format(a.common.format);
    const EvalOptions opts(a.tol, a.max_terms);
    const auto need_p = [&] {
        if (!a.p) {
            throw domain_error(a.func + " requires --p");
        }
        return *a.p;
    };
    SeriesValue v;
    if (a.func == "ein") {
        v = ein_num(a.x, opts);
    } else if (a.func == "ei") {
        v = ei_num(a.x, opts);
    } else if (a.func == "polylog") {
        v = polylog_num(need_p(), a.x, opts);
    } else if (a.func == "E") {
        v = e_series_num(a.x, need_p(), opts);
    } else {
        const double p = need_p();
        v = a.order ? m_series_num(a.x, p, *a.order, opts) : m_series_adaptive(a.x, p, opts);
    }
    if (fmt == OutputFormat::json) {
        Json out = Json::object();
        out["function"] = a.func;
        out["x"] = a.x;
        if (a.p) {
            out["p"] = *a.p;
        }
        out["value"] = v.value;
        out["bound"] = v.bound;
        out["terms"] = v.terms;
        std::cout << out.dump() << '\n';
    } else {
        std::ostringstream os;
        os << std::setprecision(15) << v.value << " (±" << std::setprecision(3) << v.bound << ")";
        std::cout << os.str() << '\n';
    }
    return exit_ok;
}

struct TableArgs {
    std::string what;
    std::size_t n = 0;
    Common common;
};

int run_table(const TableArgs &a)
{
    using namespace powergen;
    const OutputFormat fmt = parse_format(a.common.format);
    check_p_limit(a.n);
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i <= a.n; ++i) {
        rows.push_back(StirlingTable::shared().row(i));
    }
    switch (fmt) {
        case OutputFormat::text:
            std::cout << table_to_text(rows);
            break;
        case OutputFormat::latex:
            std::cout << table_to_latex(rows);
            break;
        case OutputFormat::json:
            std::cout << table_to_json(rows).dump() << '\n';
            break;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Closed forms and identity checks for sums of powers"};
    app.require_subcommand(1);

    ClosedFormArgs cf;
    auto *cmd_cf = app.add_subcommand("closed-form", "Print a closed form or special polynomial");
    cmd_cf->add_option("kind", cf.kind, "What to print")->required()->check(CLI::IsMember(closed_form_kinds));
    cmd_cf->add_option("--p", cf.p, "Power p")->required();
    cmd_cf->add_option("--r", cf.r, "Binomial weight r (binomial-ogf, weighted-ogf, omega-gen)");
    cmd_cf->add_option("--format", cf.common.format, "text, latex or json");

    VerifyArgs vf;
    std::vector<std::string> sweep_names;
    for (auto s : powergen::sweep_names()) {
        sweep_names.emplace_back(s);
    }
    auto *cmd_verify = app.add_subcommand("verify", "Run an identity verification sweep");
    cmd_verify->add_option("identity", vf.identity, "Identity family")->required()->check(CLI::IsMember(sweep_names));
    cmd_verify->add_option("--p-max", vf.req.p_max, "Largest p in the sweep");
    cmd_verify->add_option("--r-max", vf.req.r_max, "Largest r in the sweep");
    cmd_verify->add_option("--order", vf.req.order, "Truncation order N");
    cmd_verify->add_flag("--zero-convention", vf.zero_convention,
                         "Treat p = 0 sums as 0^0 + 1^0 + ... + n^0 with 0^0 = 1. The egf family always runs the "
                         "e^x A_p check (passes at p = 0 either way) and the e^x (phi_p + int phi_p) check, which "
                         "needs this flag at p = 0; ogf at p = 0 needs it too");
    cmd_verify->add_option("--x", vf.req.xs, "Sample points for numeric identities (repeatable)");
    cmd_verify->add_option("--tol", vf.req.tolerance, "Numeric tolerance");
    cmd_verify->add_option("--threads", vf.req.threads, "Worker threads (0 = hardware concurrency)");
    cmd_verify->add_option("--format", vf.common.format, "text or json");

    EvalArgs ev;
    auto *cmd_eval = app.add_subcommand("eval", "Evaluate a transcendental function numerically");
    cmd_eval->add_option("func", ev.func, "Function")->required()->check(CLI::IsMember(eval_functions));
    cmd_eval->add_option("--x", ev.x, "Argument x")->required();
    cmd_eval->add_option("--p", ev.p, "Order p (polylog, E, M)");
    cmd_eval->add_option("--order", ev.order, "Fixed truncation order for M");
    cmd_eval->add_option("--tol", ev.tol, "Tolerance");
    cmd_eval->add_option("--max-terms", ev.max_terms, "Term budget");
    cmd_eval->add_option("--format", ev.common.format, "text or json");

    TableArgs tb;
    auto *cmd_table = app.add_subcommand("table", "Print a number triangle");
    cmd_table->add_option("what", tb.what, "Table")->required()->check(CLI::IsMember({"stirling"}));
    cmd_table->add_option("--n", tb.n, "Last row")->required();
    cmd_table->add_option("--format", tb.common.format, "text, latex or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_cf) {
            return run_closed_form(cf);
        }
        if (*cmd_verify) {
            return run_verify(vf);
        }
        if (*cmd_eval) {
            return run_eval(ev);
        }
        if (*cmd_table) {
            return run_table(tb);
        }
    } catch (const powergen::accuracy_error &e) {
        std::cerr << "error: " << e.what() << " (last bound " << e.last_bound() << ")\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
