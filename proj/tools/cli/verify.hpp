#pragma once

// Formula-versus-oracle sweeps. Cells are checked in key order; the first disagreement stops the sweep.

#include "cli/parse.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace sturm::cli {

enum class VerifyStatus { Pass = 0, Mismatch = 1, BudgetExceeded = 3 };

struct VerifyOptions {
    std::string id;
    Angle alpha;
    RhoSpec rho;
    Convention convention = Convention::ZeroInB;
    std::string m, n, i, j;
    /// Oracle work allowed per cell: letters scanned, squared for the quadratic minimum-period scan.
    unsigned long long budget = 50'000'000ULL;
};

inline const std::vector<std::string>& verify_ids() {
    static const std::vector<std::string> ids{"km", "kmn", "kmi", "lp", "fibperiods"};
    return ids;
}

namespace detail {

inline std::string describe(const Angle& a, const RhoSpec& rho, Convention c) {
    return "alpha=" + a.cf.str() + " rho=" + to_string(rho.u) + "+" + to_string(rho.v) + "*alpha convention=" + to_string(c);
}

class Sweep {
public:
    Sweep(const VerifyOptions& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    bool afford(unsigned long long work, const std::string& cell) {
        if (work <= o_.budget) return true;
        err_ << "budget exceeded at " << cell << ": needs " << work << " > " << o_.budget << "\n";
        status_ = VerifyStatus::BudgetExceeded;
        return false;
    }

    bool agree(const std::string& where, const std::string& formula, const std::string& oracle) {
        if (formula == oracle) {
            ++cells_;
            return true;
        }
        out_ << "MISMATCH " << where << ": formula=" << formula << " oracle=" << oracle << "\n";
        status_ = VerifyStatus::Mismatch;
        return false;
    }

    VerifyStatus finish() {
        if (status_ == VerifyStatus::Pass) out_ << "PASS verify " << o_.id << ": " << cells_ << " cells agree\n";
        else out_ << "partial: " << cells_ << " cells agreed before stopping\n";
        return status_;
    }

private:
    const VerifyOptions& o_;
    std::ostream& out_;
    std::ostream& err_;
    std::size_t cells_ = 0;
    VerifyStatus status_ = VerifyStatus::Pass;
};

}  // namespace detail

inline VerifyStatus run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    detail::Sweep sweep(o, out, err);
    const QI& alpha = o.alpha.value;
    const SturmianSpec spec(alpha, o.rho.u, o.rho.v, o.convention);
    auto cell = [&](const std::string& rest) { return "(" + detail::describe(o.alpha, o.rho, o.convention) + " " + rest + ")"; };

    if (o.id == "km") {
        // The maximum is attained at the start of s_{alpha,0} under one of the two conventions.
        const SturmianSpec lower(alpha, 0, 0, Convention::ZeroInB), upper(alpha, 0, 0, Convention::ZeroInA);
        for (long long m : range_or(o.m, "1..21", 1, "m")) {
            const auto mm = static_cast<std::size_t>(m);
            const std::size_t k = k_max(alpha, mm);
            const std::size_t len = 20 * mm * k;
            if (!sweep.afford(3ULL * len, cell("m=" + std::to_string(m)))) return sweep.finish();
            std::size_t oracle = 0;
            for (const auto* s : {&lower, &upper, &spec})
                oracle = std::max(oracle, max_power_exponent(sturmian_word(*s, 0, len), mm));
            if (!sweep.agree(cell("m=" + std::to_string(m)), std::to_string(k), std::to_string(oracle))) break;
        }
    } else if (o.id == "kmn") {
        const auto ms = range_or(o.m, "3,10", 1, "m");
        const auto ns = range_or(o.n, "0..20", 0, "n");
        const long long n_max = *std::max_element(ns.begin(), ns.end());
        for (long long m : ms) {
            const auto mm = static_cast<std::size_t>(m);
            const std::size_t len = static_cast<std::size_t>(n_max) + (k_max(alpha, mm) + 2) * mm;
            if (!sweep.afford(len, cell("m=" + std::to_string(m)))) return sweep.finish();
            const std::string w = sturmian_word(spec, 0, len);
            bool ok = true;
            for (long long n : ns) {
                const std::string where = cell("m=" + std::to_string(m) + " n=" + std::to_string(n));
                ok = sweep.agree(where, std::to_string(k_mn(spec, mm, n).k),
                                 std::to_string(max_power_at(w, static_cast<std::size_t>(n), mm)));
                if (!ok) break;
            }
            if (!ok) break;
        }
    } else if (o.id == "kmi") {
        // Finite-prefix check: the worst window of i+1 consecutive starts within the first 4000 positions.
        for (long long m : range_or(o.m, "10", 1, "m")) {
            const auto mm = static_cast<std::size_t>(m);
            const std::size_t starts = 4000;
            const std::size_t len = starts + (k_max(alpha, mm) + 2) * mm;
            if (!sweep.afford(len, cell("m=" + std::to_string(m)))) return sweep.finish();
            const std::string w = sturmian_word(spec, 0, len);
            std::vector<std::size_t> best(starts);
            for (std::size_t n = 0; n < starts; ++n) best[n] = max_power_at(w, n, mm);
            bool ok = true;
            for (long long i : range_or(o.i, "0..9", 0, "i")) {
                if (i > m) throw UsageError("--i entries must not exceed m");
                const auto ii = static_cast<std::size_t>(i);
                std::size_t oracle = SIZE_MAX;
                for (std::size_t n = 0; n + ii < starts; ++n)
                    oracle = std::min(oracle, *std::max_element(best.begin() + static_cast<std::ptrdiff_t>(n),
                                                                best.begin() + static_cast<std::ptrdiff_t>(n + ii + 1)));
                ok = sweep.agree(cell("m=" + std::to_string(m) + " i=" + std::to_string(i)),
                                 std::to_string(guaranteed_exponent(alpha, mm, ii)), std::to_string(oracle));
                if (!ok) break;
            }
            if (!ok) break;
        }
    } else if (o.id == "lp" || o.id == "fibperiods") {
        if (!o.alpha.fibonacci) throw UsageError("verify " + o.id + " is defined for the Fibonacci word only (--alpha fib)");
        const bool lp = o.id == "lp";
        for (long long j : range_or(o.j, lp ? "2..11" : "3..13", lp ? 2 : 3, "j")) {
            const auto jj = static_cast<std::size_t>(j);
            const std::string where = cell("j=" + std::to_string(j));
            if (lp) {
                const Integer closed = lp_closed(jj);
                const auto len = static_cast<std::size_t>(closed + 2 * fib(jj));
                if (!sweep.afford(len, where)) return sweep.finish();
                const auto oracle = longest_prefix_repetition(fibonacci_prefix(len), fib_size(jj)).length();
                if (!sweep.agree(where, closed.str(), std::to_string(oracle))) break;
            } else {
                const std::size_t len = fib_size(jj);
                if (!sweep.afford(static_cast<unsigned long long>(len) * len, where)) return sweep.finish();
                const std::size_t oracle = min_abelian_period(fib_word(jj));
                if (!sweep.agree(where, min_period_fj_closed(jj).value.str(), std::to_string(oracle))) break;
            }
        }
    } else {
        throw UsageError("unknown verify target '" + o.id + "'");
    }
    return sweep.finish();
}

}  // namespace sturm::cli
