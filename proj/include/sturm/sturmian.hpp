#pragma once

#include "sturm/exact/quadratic.hpp"
#include "sturm/parikh.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturm {

/// Which half-open coding is used: I_b = [0, 1-alpha) or I_b = (0, 1-alpha].
enum class Convention { ZeroInB, ZeroInA };

enum class Weight { Light, Heavy };

inline const char* to_string(Convention c) { return c == Convention::ZeroInB ? "zero-in-b" : "zero-in-a"; }
inline const char* to_string(Weight w) { return w == Weight::Heavy ? "heavy" : "light"; }

/// A point u + v*alpha of the torus, with u, v rational, reduced into [0, 1).
class TorusPoint {
public:
    TorusPoint(const QI& alpha, Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
        value_ = QI(u_) + QI(v_) * alpha;
        const Integer f = value_.floor();
        if (f != 0) {
            u_ -= Rational(f);
            value_ -= QI(f);
        }
    }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const QI& value() const { return value_; }

private:
    Rational u_, v_;
    QI value_;
};

/// {-i alpha}.
inline TorusPoint negative_multiple(const QI& alpha, long long i) { return {alpha, Rational(0), Rational(-i)}; }

/**
 * The Sturmian word of angle alpha and initial point rho = u + v*alpha coded under a
 * convention. alpha must be an irrational in (0, 1).
 */
class SturmianSpec {
public:
    SturmianSpec(QI alpha, Rational rho_u, Rational rho_v, Convention convention = Convention::ZeroInB)
        : alpha_(validated(std::move(alpha))), rho_(alpha_, std::move(rho_u), std::move(rho_v)), convention_(convention) {}

    /// rho = alpha, e.g. the Fibonacci word for alpha = phi - 1.
    static SturmianSpec characteristic(QI alpha, Convention c = Convention::ZeroInB) {
        return {std::move(alpha), Rational(0), Rational(1), c};
    }

    static SturmianSpec fibonacci() { return characteristic(golden_conjugate()); }

    const QI& alpha() const { return alpha_; }
    const TorusPoint& rho() const { return rho_; }
    Convention convention() const { return convention_; }

    /// {rho + n alpha}.
    TorusPoint point(long long n) const { return {alpha_, rho_.u(), rho_.v() + n}; }

private:
    static QI validated(QI alpha) {
        if (alpha.is_rational()) throw std::invalid_argument("angle must be irrational: " + alpha.str());
        if (alpha.sign() <= 0 || alpha >= QI(1)) throw std::invalid_argument("angle must lie in (0, 1): " + alpha.str());
        return alpha;
    }

    QI alpha_;
    TorusPoint rho_;
    Convention convention_;
};

/// Membership of a torus point in the half-open interval I(left, right) (wrapping when left > right).
inline bool in_interval(const QI& p, const QI& left, const QI& right, Convention c) {
    if (c == Convention::ZeroInB) {
        // [left, right)
        if (left < right) return left <= p && p < right;
        return p >= left || p < right;
    }
    // (left, right]; the torus point 0 plays the role of 1.
    const bool zero = p.sign() == 0;
    if (left < right) return zero ? right == QI(1) : (left < p && p <= right);
    return zero || p > left || p <= right;
}

inline char letter_of_point(const QI& p, const QI& alpha, Convention c) {
    return in_interval(p, QI(0), QI(1) - alpha, c) ? 'b' : 'a';
}

/// The n-th letter, decided by exact membership of {rho + n alpha} in I_b.
inline char letter_at(const SturmianSpec& s, long long n) {
    return letter_of_point(s.point(n).value(), s.alpha(), s.convention());
}

/**
 * Sequential coder for long prefixes: letter n is a iff floor(x_{n+1}) - floor(x_n) = 1
 * (ceil under ZeroInA), with x_n = rho + n alpha held as (R + n R' + (S + n S') sqrt d) / D.
 */
class RotationCoder {
public:
    explicit RotationCoder(const SturmianSpec& s) : d_(s.alpha().d()), ceil_(s.convention() == Convention::ZeroInA) {
        const QI& al = s.alpha();
        const Integer& p1 = boost::multiprecision::numerator(s.rho().u());
        const Integer& q1 = boost::multiprecision::denominator(s.rho().u());
        const Integer& p2 = boost::multiprecision::numerator(s.rho().v());
        const Integer& q2 = boost::multiprecision::denominator(s.rho().v());
        // x_n = p1/q1 + (p2 + n q2)/q2 * (a + b sqrt d)/c
        den_ = q1 * q2 * al.c();
        r0_ = p1 * q2 * al.c() + p2 * q1 * al.a();
        r1_ = q2 * q1 * al.a();
        s0_ = p2 * q1 * al.b();
        s1_ = q2 * q1 * al.b();
    }

    /// floor(x_n), or ceil(x_n) under ZeroInA.
    Integer level(long long n) const {
        const Integer r = r0_ + r1_ * n;
        const Integer s = s0_ + s1_ * n;
        if (!ceil_) return floor_div(r + floor_surd(s), den_);
        return -floor_div(-r + floor_surd(-s), den_);
    }

    std::string word(long long start, std::size_t len) const {
        std::string out(len, 'b');
        Integer prev = level(start);
        for (std::size_t i = 0; i < len; ++i) {
            Integer next = level(start + static_cast<long long>(i) + 1);
            if (next != prev) out[i] = 'a';
            prev = std::move(next);
        }
        return out;
    }

private:
    Integer floor_surd(const Integer& s) const {
        if (s == 0) return 0;
        const Integer r = isqrt(s * s * d_);
        return s > 0 ? r : Integer(-r - 1);
    }

    Integer d_;
    bool ceil_;
    Integer den_, r0_, r1_, s0_, s1_;
};

/// Letters start .. start+len-1.
inline std::string sturmian_word(const SturmianSpec& s, long long start, std::size_t len) {
    return RotationCoder(s).word(start, len);
}

/// The length-m factor at n, read off the single point {rho + n alpha} against the
/// rotated intervals I_b^{-i} = I({-i alpha}, {-(i+1) alpha}).
inline std::string factor(const SturmianSpec& s, long long n, std::size_t m) {
    const QI p = s.point(n).value();
    std::string out;
    out.reserve(m);
    QI left = QI(0);
    for (std::size_t i = 0; i < m; ++i) {
        QI right = negative_multiple(s.alpha(), static_cast<long long>(i) + 1).value();
        out.push_back(in_interval(p, left, right, s.convention()) ? 'b' : 'a');
        left = std::move(right);
    }
    return out;
}

inline ParikhVector heavy_parikh(const QI& alpha, std::size_t m) {
    const auto a = (QI(static_cast<long long>(m)) * alpha).ceil().convert_to<std::size_t>();
    return {a, m - a};
}

inline ParikhVector light_parikh(const QI& alpha, std::size_t m) {
    const auto a = (QI(static_cast<long long>(m)) * alpha).floor().convert_to<std::size_t>();
    return {a, m - a};
}

struct PartitionInterval {
    std::size_t index = 0;  // k in L_k(m)
    QI left, right;
    long long left_source = 0;  // left = {-left_source * alpha}
    std::string factor;
    ParikhVector parikh;
    Weight weight = Weight::Light;

    QI length() const { return right - left; }
};

/// The m+1 intervals L_0(m) .. L_m(m) cut by 0, {-alpha}, ..., {-m alpha}, 1, with their factors.
struct IntervalPartition {
    std::size_t m = 0;
    Convention convention = Convention::ZeroInB;
    std::vector<QI> boundaries;  // m + 2 points, strictly increasing, from 0 to 1
    std::vector<PartitionInterval> intervals;
    QI max_len;
};

inline IntervalPartition partition(const QI& alpha, std::size_t m, Convention c) {
    if (m == 0) throw std::invalid_argument("partition: m must be positive");
    if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= QI(1))
        throw std::invalid_argument("partition: angle must be an irrational in (0, 1)");
    struct Cut {
        QI value;
        long long source;
    };
    std::vector<Cut> cuts;
    cuts.reserve(m + 1);
    cuts.push_back({QI(0), 0});
    for (std::size_t i = 1; i <= m; ++i) cuts.push_back({negative_multiple(alpha, static_cast<long long>(i)).value(), static_cast<long long>(i)});
    std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) { return x.value < y.value; });

    IntervalPartition part;
    part.m = m;
    part.convention = c;
    for (const auto& cut : cuts) part.boundaries.push_back(cut.value);
    part.boundaries.push_back(QI(1));

    const QI threshold = negative_multiple(alpha, static_cast<long long>(m)).value();
    const ParikhVector heavy = heavy_parikh(alpha, m);
    const ParikhVector light = light_parikh(alpha, m);
    for (std::size_t k = 0; k <= m; ++k) {
        PartitionInterval iv;
        iv.index = k;
        iv.left = part.boundaries[k];
        iv.right = part.boundaries[k + 1];
        iv.left_source = cuts[k].source;
        // Decode from the endpoint the interval contains: left under ZeroInB, right under ZeroInA.
        const long long source = c == Convention::ZeroInB ? cuts[k].source : (k + 1 <= m ? cuts[k + 1].source : 0);
        iv.factor = sturmian_word(SturmianSpec(alpha, Rational(0), Rational(-source), c), 0, m);
        iv.weight = iv.left >= threshold ? Weight::Heavy : Weight::Light;
        iv.parikh = iv.weight == Weight::Heavy ? heavy : light;
        part.intervals.push_back(std::move(iv));
    }
    part.max_len = part.intervals.front().length();
    for (const auto& iv : part.intervals)
        if (iv.length() > part.max_len) part.max_len = iv.length();
    return part;
}

/// Heavy iff {rho + n alpha} > {-m alpha}; exact ties fall back to decoding the factor.
/// Under ZeroInA the point 0 lies in the last interval, which is always heavy.
inline Weight classify_position(const SturmianSpec& s, long long n, std::size_t m) {
    const QI x = s.point(n).value();
    if (x.sign() == 0 && s.convention() == Convention::ZeroInA) return Weight::Heavy;
    const QI threshold = negative_multiple(s.alpha(), static_cast<long long>(m)).value();
    if (x > threshold) return Weight::Heavy;
    if (x < threshold) return Weight::Light;
    return parikh_of(factor(s, n, m)) == heavy_parikh(s.alpha(), m) ? Weight::Heavy : Weight::Light;
}

}  // namespace sturm
