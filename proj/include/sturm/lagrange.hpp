#pragma once

// Lagrange constants of quadratic irrationals and the abelian critical exponent of Sturmian words.

#include "sturm/exact/continued_fraction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sturm {

struct LagrangeValue {
    QI exact;
    std::size_t witness_residue = 0;  // j in [0, period length) attaining the maximum
};

namespace detail {

inline std::vector<Integer> rotated(const std::vector<Integer>& period, std::size_t j) {
    std::vector<Integer> out(period.size());
    for (std::size_t t = 0; t < period.size(); ++t) out[t] = period[(j + t) % period.size()];
    return out;
}

/// Value of the finite expansion [q0; q1, ..., q_{n-1}].
inline Rational finite_value(const std::vector<Integer>& q) {
    Rational v(q.back());
    for (auto it = q.rbegin() + 1; it != q.rend(); ++it) v = Rational(*it) + 1 / v;
    return v;
}

}  // namespace detail

/// Complete quotient alpha_i = [a_i; a_{i+1}, ...].
inline QI complete_quotient(const ContinuedFraction& cf, std::size_t i) {
    const std::size_t r = cf.preperiod().size();
    if (i >= r) return purely_periodic_value(detail::rotated(cf.period(), (i - r) % cf.period().size()));
    std::vector<Integer> head(cf.preperiod().begin() + static_cast<std::ptrdiff_t>(i), cf.preperiod().end());
    return fold_quotients(head, purely_periodic_value(cf.period()));
}

/**
 * limsup_i ([a_{i+1}; a_{i+2}, ...] + [0; a_i, a_{i-1}, ..., a_1]).
 * Along each residue j of the period the tail is purely periodic from p_j and the head
 * converges to [0; p_{j-1}, p_{j-2}, ...] (the reversed period), so the limsup is the
 * largest of these per-residue sums.
 */
inline LagrangeValue lagrange_exact(const ContinuedFraction& cf) {
    const auto& period = cf.period();
    const std::size_t L = period.size();
    std::optional<LagrangeValue> best;
    for (std::size_t j = 0; j < L; ++j) {
        const QI tail = purely_periodic_value(detail::rotated(period, j));
        std::vector<Integer> reversed(L);
        for (std::size_t t = 0; t < L; ++t) reversed[t] = period[(j + L - 1 - t) % L];
        const QI head = purely_periodic_value(reversed).reciprocal();
        QI sum = tail + head;
        if (!best || sum > best->exact) best = LagrangeValue{std::move(sum), j};
    }
    return *best;
}

/**
 * Lower bound on the Lagrange constant from the first `depth` periodic indices.
 * Each term truncates alpha_{i+1} and the head [0; a_i, ..., a_r] at an even convergent
 * index, so every term stays below the per-residue limit.
 */
inline Rational lagrange_numeric(const ContinuedFraction& cf, std::size_t depth) {
    if (depth < 2) throw std::invalid_argument("lagrange_numeric: depth must be at least 2");
    const std::size_t r = cf.preperiod().size();
    const std::size_t tail_len = 2 * (depth / 2) + 1;
    Rational best = 0;
    for (std::size_t i = r; i < r + depth; ++i) {
        std::vector<Integer> tail(tail_len);
        for (std::size_t t = 0; t < tail_len; ++t) tail[t] = cf.quotient(i + 1 + t);
        Rational term = detail::finite_value(tail);
        const std::size_t K = ((i - r + 1) / 2) * 2;
        if (K > 0) {
            std::vector<Integer> head(K);
            for (std::size_t t = 0; t < K; ++t) head[t] = cf.quotient(i - t);
            term += 1 / detail::finite_value(head);
        }
        best = std::max(best, term);
    }
    return best;
}

/// Expansions ultimately coincide: equal minimal periods up to rotation.
inline bool are_equivalent(const ContinuedFraction& x, const ContinuedFraction& y) {
    const auto& p = x.period();
    const auto& q = y.period();
    if (p.size() != q.size()) return false;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (detail::rotated(p, j) == q) return true;
    return false;
}

/// A(s_alpha) = lambda(alpha). Always finite here: quadratic angles have bounded partial quotients.
inline LagrangeValue abelian_critical_exponent(const QI& alpha) {
    if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= QI(1))
        throw std::invalid_argument("abelian_critical_exponent: angle must be an irrational in (0, 1)");
    return lagrange_exact(cf_from_qi(alpha));
}

}  // namespace sturm
