#pragma once

// Word-level brute-force reference implementations of abelian periods, powers and
// repetitions. These scan the word directly and never consult the rotation.

#include "sturm/parikh.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sturm {

/// w = u_0 u_1 ... u_j: head, block_count full blocks of length `period`, tail.
struct AbelianDecomposition {
    std::size_t head_len = 0;
    std::size_t period = 0;
    std::size_t block_count = 0;
    std::size_t tail_len = 0;

    std::size_t length() const { return head_len + block_count * period + tail_len; }
    friend bool operator==(const AbelianDecomposition&, const AbelianDecomposition&) = default;
};

/// An abelian decomposition of w[start, start + length()).
struct Repetition {
    std::size_t start = 0;
    AbelianDecomposition shape;

    std::size_t length() const { return shape.length(); }
};

struct PowerOccurrence {
    std::size_t position = 0;
    std::size_t exponent = 0;
};

namespace detail {

/// Decomposition of w with the given head length, or nothing if it is not valid.
inline std::optional<AbelianDecomposition> decomposition_with_head(const PrefixCounts& pc, std::size_t m,
                                                                   std::size_t head) {
    const std::size_t n = pc.size();
    if (head >= m || head + m > n) return std::nullopt;
    const ParikhVector block = pc.slice(head, head + m);
    if (!parikh_contained(pc.slice(0, head), block)) return std::nullopt;
    const std::size_t blocks = (n - head) / m;
    for (std::size_t t = 1; t < blocks; ++t)
        if (pc.count_a(head + t * m, head + (t + 1) * m) != block.count_a) return std::nullopt;
    const std::size_t tail_start = head + blocks * m;
    if (!parikh_contained(pc.slice(tail_start, n), block)) return std::nullopt;
    return AbelianDecomposition{head, m, blocks, n - tail_start};
}

}  // namespace detail

/// Some abelian decomposition of w with period m (at least one full block), if any.
inline std::optional<AbelianDecomposition> abelian_decomposition(std::string_view w, std::size_t m) {
    if (m == 0 || m > w.size()) return std::nullopt;
    const PrefixCounts pc(w);
    for (std::size_t h = 0; h < m; ++h)
        if (auto d = detail::decomposition_with_head(pc, m, h)) return d;
    return std::nullopt;
}

inline bool has_abelian_period(std::string_view w, std::size_t m) { return abelian_decomposition(w, m).has_value(); }

/// Minimum abelian period mu_w. O(|w|^2) over (period, head) pairs.
inline std::size_t min_abelian_period(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("min_abelian_period: empty word");
    const PrefixCounts pc(w);
    for (std::size_t m = 1; m <= w.size(); ++m)
        for (std::size_t h = 0; h < m && h + m <= w.size(); ++h)
            if (detail::decomposition_with_head(pc, m, h)) return m;
    return w.size();  // unreachable: m = |w|, h = 0 always decomposes
}

/// Largest k such that w[pos, pos + km) is an abelian power of period m (1 = degenerated, 0 = no room).
inline std::size_t max_power_at(std::string_view w, std::size_t pos, std::size_t m) {
    if (m == 0 || pos + m > w.size()) return 0;
    const ParikhVector block = parikh_of(w.substr(pos, m));
    std::size_t k = 1;
    while (pos + (k + 1) * m <= w.size() && parikh_of(w.substr(pos + k * m, m)) == block) ++k;
    return k;
}

namespace detail {

/// runs[p] = max_power_at(w, p, m) for every p in [0, |w| - m].
inline std::vector<std::size_t> power_runs(const PrefixCounts& pc, std::size_t m) {
    const std::size_t n = pc.size();
    if (m == 0 || m > n) return {};
    const std::size_t last = n - m;
    std::vector<std::size_t> runs(last + 1, 1);
    for (std::size_t p = last + 1; p-- > 0;) {
        if (p + m <= last && pc.count_a(p, p + m) == pc.count_a(p + m, p + 2 * m)) runs[p] = runs[p + m] + 1;
    }
    return runs;
}

}  // namespace detail

/// Maximum exponent of an abelian power of period m anywhere in w, with its first occurrence.
inline PowerOccurrence max_power_occurrence(std::string_view w, std::size_t m) {
    const PrefixCounts pc(w);
    const auto runs = detail::power_runs(pc, m);
    PowerOccurrence best;
    for (std::size_t p = 0; p < runs.size(); ++p) {
        if (runs[p] > best.exponent) best = {p, runs[p]};
    }
    return best;
}

inline std::size_t max_power_exponent(std::string_view w, std::size_t m) { return max_power_occurrence(w, m).exponent; }

/// Longest prefix of w that is an abelian repetition of period m (head < m, at least two blocks).
/// The returned shape has block_count == 0 when no such prefix exists.
inline AbelianDecomposition longest_prefix_repetition(std::string_view w, std::size_t m) {
    AbelianDecomposition best{0, m, 0, 0};
    if (m == 0) return best;
    const PrefixCounts pc(w);
    const std::size_t n = w.size();
    for (std::size_t h = 0; h < m && h + 2 * m <= n; ++h) {
        const ParikhVector block = pc.slice(h, h + m);
        if (!parikh_contained(pc.slice(0, h), block)) continue;
        std::size_t blocks = 1;
        while (h + (blocks + 1) * m <= n && pc.count_a(h + blocks * m, h + (blocks + 1) * m) == block.count_a) ++blocks;
        if (blocks < 2) continue;
        const std::size_t tail_start = h + blocks * m;
        std::size_t tail = 0;
        while (tail + 1 < m && tail_start + tail + 1 <= n &&
               parikh_contained(pc.slice(tail_start, tail_start + tail + 1), block))
            ++tail;
        AbelianDecomposition cand{h, m, blocks, tail};
        if (cand.length() > best.length()) best = cand;
    }
    return best;
}

/// Longest abelian repetition of period m occurring anywhere in w (at least two blocks).
inline std::optional<Repetition> max_repetition(std::string_view w, std::size_t m) {
    const PrefixCounts pc(w);
    const auto runs = detail::power_runs(pc, m);
    const std::size_t n = w.size();
    std::optional<Repetition> best;
    for (std::size_t s = 0; s < runs.size(); ++s) {
        if (runs[s] < 2) continue;
        // Only maximal runs: the block before s must differ (or not exist).
        if (s >= m && runs[s - m] == runs[s] + 1) continue;
        const ParikhVector block = pc.slice(s, s + m);
        std::size_t head = 0;
        while (head + 1 < m && head + 1 <= s && parikh_contained(pc.slice(s - head - 1, s), block)) ++head;
        const std::size_t tail_start = s + runs[s] * m;
        std::size_t tail = 0;
        while (tail + 1 < m && tail_start + tail + 1 <= n &&
               parikh_contained(pc.slice(tail_start, tail_start + tail + 1), block))
            ++tail;
        Repetition cand{s - head, {head, m, runs[s], tail}};
        if (!best || cand.length() > best->length()) best = cand;
    }
    return best;
}

/// True iff w[start, start + shape.length()) decomposes with the given shape.
inline bool is_abelian_repetition(std::string_view w, const Repetition& r) {
    const auto& d = r.shape;
    if (d.period == 0 || d.block_count == 0 || r.start + d.length() > w.size()) return false;
    const PrefixCounts pc(w);
    const std::size_t first = r.start + d.head_len;
    const ParikhVector block = pc.slice(first, first + d.period);
    for (std::size_t t = 1; t < d.block_count; ++t)
        if (pc.slice(first + t * d.period, first + (t + 1) * d.period) != block) return false;
    const std::size_t tail_start = first + d.block_count * d.period;
    return parikh_contained(pc.slice(r.start, first), block) &&
           parikh_contained(pc.slice(tail_start, tail_start + d.tail_len), block);
}

}  // namespace sturm
