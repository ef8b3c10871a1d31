#pragma once

#include "cli/parse.hpp"
#include "cli/svg.hpp"
#include "cli/tables.hpp"
#include "cli/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace sturm::cli {

enum ExitCode { kOk = 0, kDisagree = 1, kUsage = 2, kBudget = 3 };

/// Runs the command line `args` (without the program name). Data goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sturmian words, abelian powers and Lagrange constants, in exact arithmetic", "sturm"};
    app.require_subcommand(1);

    std::string alpha_text = "fib", rho_text = "alpha", convention_text = "zero-in-b", format = "tsv";
    std::string m, n, i, j, id;
    unsigned digits = 6;
    long long start = 0;
    std::size_t len = 34, depth = 60;
    unsigned long long budget = 50'000'000ULL;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--alpha", alpha_text, "fib, (a,b,c,d) for (a+b*sqrt(d))/c, or [a0;pre|period]");
        sub->add_option("--rho", rho_text, "initial point u+v*alpha");
        sub->add_option("--convention", convention_text, "zero-in-b or zero-in-a");
    };

    auto* word = app.add_subcommand("word", "print letters of s_{alpha,rho}");
    common(word);
    word->add_option("--start", start, "first position")->check(CLI::NonNegativeNumber);
    word->add_option("--len", len, "number of letters");

    auto* table = app.add_subcommand("table", "emit a table as TSV or JSON");
    common(table);
    table->add_option("id", id, "km, kmn, kmi, norms, lp, fibperiods or sqrt5dev")->required();
    table->add_option("--m", m, "periods, e.g. 1..21 or 3,10");
    table->add_option("--n", n, "positions");
    table->add_option("--i", i, "anticipations");
    table->add_option("--j", j, "Fibonacci indices");
    table->add_option("--digits", digits, "decimals for irrational values");
    table->add_option("--format", format, "tsv or json");

    auto* lagrange = app.add_subcommand("lagrange", "exact Lagrange constant (abelian critical exponent)");
    lagrange->add_option("--alpha", alpha_text, "angle");
    lagrange->add_option("--depth", depth, "depth of the rational lower bound");
    lagrange->add_option("--digits", digits, "decimals for irrational values");
    lagrange->add_option("--format", format, "tsv or json");

    auto* verify = app.add_subcommand("verify", "compare closed forms with brute-force scans");
    common(verify);
    verify->add_option("id", id, "km, kmn, kmi, lp or fibperiods")->required();
    verify->add_option("--m", m, "periods");
    verify->add_option("--n", n, "positions");
    verify->add_option("--i", i, "anticipations");
    verify->add_option("--j", j, "Fibonacci indices");
    verify->add_option("--budget", budget, "oracle work allowed per cell");

    auto* svg = app.add_subcommand("svg", "render the interval partition as SVG");
    common(svg);
    svg->add_option("kind", id, "partition")->required();
    svg->add_option("--m", m, "factor length")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const Angle alpha = parse_alpha(alpha_text);
        const RhoSpec rho = parse_rho(rho_text);
        const Convention convention = parse_convention(convention_text);
        if (format != "tsv" && format != "json") throw UsageError("--format must be tsv or json");

        if (*word) {
            out << sturmian_word(SturmianSpec(alpha.value, rho.u, rho.v, convention), start, len) << "\n";
            return kOk;
        }
        if (*table) {
            TableOptions o{id, alpha, rho, convention, m, n, i, j, digits};
            const Table t = build_table(o);
            if (format == "json") write_json(out, t, alpha, digits);
            else write_tsv(out, t, digits);
            return kOk;
        }
        if (*lagrange) {
            if (depth < 2) throw UsageError("--depth must be at least 2");
            const LagrangeValue lv = lagrange_exact(alpha.cf);
            const Rational bound = lagrange_numeric(alpha.cf, depth);
            Table t;
            t.id = "lagrange";
            t.columns = {"quantity", "value"};
            t.rows.push_back({std::string("alpha"), alpha.value});
            t.rows.push_back({std::string("expansion"), alpha.cf.str()});
            t.rows.push_back({std::string("exact"), lv.exact.str()});
            t.rows.push_back({std::string("approx"), lv.exact});
            t.rows.push_back({std::string("witness_residue"), Integer(lv.witness_residue)});
            t.rows.push_back({std::string("lower_bound_depth_" + std::to_string(depth)), QI(bound)});
            t.rows.push_back({std::string("lower_bound_approx"), to_decimal(bound, digits)});
            if (format == "json") write_json(out, t, alpha, digits);
            else write_tsv(out, t, digits);
            return kOk;
        }
        if (*verify) {
            VerifyOptions o{id, alpha, rho, convention, m, n, i, j, budget};
            switch (run_verify(o, out, err)) {
                case VerifyStatus::Pass: return kOk;
                case VerifyStatus::Mismatch: return kDisagree;
                case VerifyStatus::BudgetExceeded: return kBudget;
            }
        }
        if (*svg) {
            if (id != "partition") throw UsageError("unknown svg kind '" + id + "' (expected partition)");
            const auto mm = parse_range_min(m, 1, "m");
            if (mm.size() != 1) throw UsageError("svg partition takes a single --m");
            out << partition_svg(alpha, static_cast<std::size_t>(mm.front()), convention);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace sturm::cli
