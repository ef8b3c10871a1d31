#pragma once

// The Fibonacci word f = s_{phi-1, phi-1}. Fibonacci numbers are indexed F_0 = F_1 = 1.

#include "sturm/abelian.hpp"
#include "sturm/formulas.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace sturm {

inline Integer fib(std::size_t j) {
    Integer prev = 1, cur = 1;
    for (std::size_t i = 2; i <= j; ++i) {
        Integer next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline std::size_t fib_size(std::size_t j) { return fib(j).convert_to<std::size_t>(); }

/// f_0 = b, f_1 = a, f_j = f_{j-1} f_{j-2}.
inline std::string fib_word(std::size_t j) {
    std::string prev = "b", cur = "a";
    if (j == 0) return prev;
    for (std::size_t i = 1; i < j; ++i) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// The first len letters of f.
inline std::string fibonacci_prefix(std::size_t len) { return sturmian_word(SturmianSpec::fibonacci(), 0, len); }

/// floor(phi F_j + F_{j-1}) = k_{F_j}.
inline Integer k_fib_closed(std::size_t j) {
    if (j < 1) throw std::invalid_argument("k_fib_closed: index must be at least 1");
    const QI phi = golden_conjugate() + QI(1);
    return (phi * QI(fib(j)) + QI(fib(j - 1))).floor();
}

struct PowerPosition {
    Integer position;
    Integer exponent;
};

/// The longest abelian power of period F_j starting before F_j occurs at F_j - 1.
inline PowerPosition longest_power_before(std::size_t j) {
    if (j < 2) throw std::invalid_argument("longest_power_before: index must exceed 1");
    return {fib(j) - 1, k_fib_closed(j) - 1};
}

/// Length of the longest prefix of f that is an abelian repetition of period F_j.
inline Integer lp_closed(std::size_t j) {
    if (j < 2) throw std::invalid_argument("lp_closed: index must exceed 1");
    const Integer s = fib(j + 1) + fib(j - 1) + (j % 2 == 0 ? 1 : 0);
    return fib(j) * s - 2;
}

struct FibIndex {
    std::size_t j = 0;
    Integer value;  // F_j
};

/// Minimum abelian period of f_j is F_n with n = floor(j/2), plus one when j = 3 mod 4.
inline FibIndex min_period_fj_closed(std::size_t j) {
    if (j < 3) throw std::invalid_argument("min_period_fj_closed: index must be at least 3");
    const std::size_t n = j / 2 + (j % 4 == 3 ? 1 : 0);
    return {n, fib(n)};
}

/// F_j (F_{j+1} + F_{j-1}) = F_{2j+1}.
inline bool fib_identity(std::size_t j) {
    if (j < 1) throw std::invalid_argument("fib_identity: index must be at least 1");
    return fib(j) * (fib(j + 1) + fib(j - 1)) == fib(2 * j + 1);
}

inline bool is_fibonacci(std::size_t n) {
    for (std::size_t j = 0;; ++j) {
        const std::size_t f = fib_size(j);
        if (f == n) return true;
        if (f > n) return false;
    }
}

struct FactorPeriodReport {
    std::size_t max_len = 0;
    std::size_t factors_checked = 0;
    std::map<std::size_t, std::size_t> histogram;  // minimum abelian period -> number of factors
    std::optional<std::string> violation;          // first factor whose period is not a Fibonacci number
    bool ok() const { return !violation; }
};

/// Minimum abelian periods of all distinct factors of f of length 1..N, read off the partitions.
inline FactorPeriodReport verify_factor_periods(std::size_t N) {
    if (N < 1) throw std::invalid_argument("verify_factor_periods: N must be positive");
    FactorPeriodReport rep;
    rep.max_len = N;
    const QI alpha = golden_conjugate();
    for (std::size_t len = 1; len <= N; ++len) {
        for (const auto& iv : partition(alpha, len, Convention::ZeroInB).intervals) {
            const std::size_t mu = min_abelian_period(iv.factor);
            ++rep.histogram[mu];
            ++rep.factors_checked;
            if (!rep.violation && !is_fibonacci(mu)) rep.violation = iv.factor;
        }
    }
    return rep;
}

}  // namespace sturm
