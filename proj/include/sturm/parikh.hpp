#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

namespace sturm {

/// Letter counts of a word over {a, b}.
struct ParikhVector {
    std::size_t count_a = 0;
    std::size_t count_b = 0;

    std::size_t norm() const { return count_a + count_b; }

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const ParikhVector& p) {
        return os << "(" << p.count_a << "," << p.count_b << ")";
    }
};

inline ParikhVector parikh_of(std::string_view w) {
    ParikhVector p;
    for (char c : w) (c == 'a' ? p.count_a : p.count_b) += 1;
    return p;
}

/// P is contained in Q: |P| < |Q| and P <= Q componentwise.
inline bool parikh_contained(const ParikhVector& p, const ParikhVector& q) {
    return p.norm() < q.norm() && p.count_a <= q.count_a && p.count_b <= q.count_b;
}

/// Prefix sums of the letter a, giving O(1) Parikh vectors of slices.
class PrefixCounts {
public:
    explicit PrefixCounts(std::string_view w) : prefix_a_(w.size() + 1, 0) {
        for (std::size_t i = 0; i < w.size(); ++i) prefix_a_[i + 1] = prefix_a_[i] + (w[i] == 'a' ? 1U : 0U);
    }

    std::size_t size() const { return prefix_a_.size() - 1; }

    /// Number of a's in w[i, j).
    std::size_t count_a(std::size_t i, std::size_t j) const { return prefix_a_[j] - prefix_a_[i]; }

    /// Parikh vector of w[i, j).
    ParikhVector slice(std::size_t i, std::size_t j) const {
        const std::size_t a = count_a(i, j);
        return {a, (j - i) - a};
    }

private:
    std::vector<std::uint32_t> prefix_a_;
};

}  // namespace sturm
