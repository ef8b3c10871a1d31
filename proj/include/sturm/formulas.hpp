#pragma once

// Closed forms for abelian powers and repetitions in Sturmian words.

#include "sturm/exact/continued_fraction.hpp"
#include "sturm/sturmian.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturm {

enum class PowerCase { Generic, ZeroPoint, ExceptionalBelow, ExceptionalAtOrAbove };

inline const char* to_string(PowerCase c) {
    switch (c) {
        case PowerCase::Generic: return "generic";
        case PowerCase::ZeroPoint: return "zero-point";
        case PowerCase::ExceptionalBelow: return "exceptional-below";
        case PowerCase::ExceptionalAtOrAbove: return "exceptional-at-or-above";
    }
    return "?";
}

struct PowerReport {
    std::size_t m = 0;
    long long n = 0;
    std::size_t k = 0;
    PowerCase case_tag = PowerCase::Generic;
    Integer A = 0;
    Integer B = 0;
    int gamma = 0;
};

namespace detail {

inline QI multiple(const QI& alpha, long long m) { return QI(m) * alpha; }

inline void require_positive(long long m, const char* what) {
    if (m < 1) throw std::invalid_argument(std::string(what) + ": period must be positive");
}

/// r >= 0 with {rho + n alpha} = {-r m alpha}, if any. r = 0 is the point 0.
inline std::optional<Integer> exceptional_index(const SturmianSpec& s, long long n, std::size_t m) {
    if (!is_integer(s.rho().u())) return std::nullopt;
    const Rational r = -(s.rho().v() + n) / Rational(static_cast<long long>(m));
    if (!is_integer(r) || r < 0) return std::nullopt;
    return boost::multiprecision::numerator(r);
}

}  // namespace detail

/// k_m = floor(1 / ||m alpha||), the largest exponent of an abelian power of period m.
inline std::size_t k_max(const QI& alpha, std::size_t m) {
    if (alpha.is_rational()) throw std::invalid_argument("k_max: angle must be irrational");
    detail::require_positive(static_cast<long long>(m), "k_max");
    const QI norm = dist_nearest_int(detail::multiple(alpha, static_cast<long long>(m)));
    return norm.reciprocal().floor().convert_to<std::size_t>();
}

/// Whether the factor of length k*m at n is an abelian power of period m, for k >= 2.
inline bool power_exists_at(const SturmianSpec& s, long long n, std::size_t m, std::size_t k) {
    detail::require_positive(static_cast<long long>(m), "power_exists_at");
    if (k < 2) throw std::invalid_argument("power_exists_at: exponent must be at least 2");
    const QI x = s.point(n).value();
    const QI mu = frac_part(detail::multiple(s.alpha(), static_cast<long long>(m)));
    const QI nu = QI(1) - mu;  // {-m alpha}
    const QI kk(static_cast<long long>(k));
    const bool small = mu < QI(Rational(1, 2));
    const bool zero_in_b = s.convention() == Convention::ZeroInB;

    const auto r = detail::exceptional_index(s, n, m);
    if (r && *r == 0) return small ? (zero_in_b && kk * mu < QI(1)) : (!zero_in_b && kk * nu < QI(1));
    if (r && Integer(static_cast<long long>(k)) >= *r) {
        if (*r < 2) return false;
        // The run ends exactly on a boundary point, so the bound is attained.
        return small ? (!zero_in_b && x <= QI(1) - kk * mu) : (zero_in_b && x >= kk * nu);
    }
    return small ? x < QI(1) - kk * mu : x > kk * nu;
}

/// k_{m,n}: the largest exponent of a (possibly degenerated) abelian power of period m at n.
inline PowerReport k_mn(const SturmianSpec& s, std::size_t m, long long n) {
    detail::require_positive(static_cast<long long>(m), "k_mn");
    PowerReport rep;
    rep.m = m;
    rep.n = n;
    rep.gamma = s.convention() == Convention::ZeroInB ? 1 : 0;

    const QI x = s.point(n).value();
    const QI mu = frac_part(detail::multiple(s.alpha(), static_cast<long long>(m)));
    const QI nu = QI(1) - mu;
    const QI neg_x = x.sign() == 0 ? QI(0) : QI(1) - x;  // {-rho - n alpha}
    rep.A = (neg_x / mu).floor();
    rep.B = (x / nu).floor();
    const Integer top = rep.A > rep.B ? rep.A : rep.B;

    Integer k;
    const auto r = detail::exceptional_index(s, n, m);
    if (!r) {
        rep.case_tag = PowerCase::Generic;
        k = top;
    } else if (*r == 0) {
        rep.case_tag = PowerCase::ZeroPoint;
        k = (rep.gamma == 1 ? mu : nu).reciprocal().floor();
    } else if (*r > top) {
        rep.case_tag = PowerCase::ExceptionalBelow;
        k = top;
    } else {
        rep.case_tag = PowerCase::ExceptionalAtOrAbove;
        const Integer lhs = rep.A - rep.gamma;
        const Integer rhs = rep.B + rep.gamma - 1;
        k = lhs > rhs ? lhs : rhs;
    }
    rep.k = k.convert_to<std::size_t>();
    return rep;
}

/// k_m^{(i)} = max(1, floor((1 - l_i) / ||m alpha||)) with l_i the longest interval of partition(alpha, i), l_0 = 1.
inline std::size_t guaranteed_exponent(const QI& alpha, std::size_t m, std::size_t i) {
    detail::require_positive(static_cast<long long>(m), "guaranteed_exponent");
    if (i > m) throw std::invalid_argument("guaranteed_exponent: anticipation exceeds the period");
    const QI l = i == 0 ? QI(1) : partition(alpha, i, Convention::ZeroInB).max_len;
    const QI norm = dist_nearest_int(detail::multiple(alpha, static_cast<long long>(m)));
    const Integer k = ((QI(1) - l) / norm).floor();
    return k < 1 ? 1 : k.convert_to<std::size_t>();
}

/**
 * The two interval lengths of partition(alpha, m_k - 1):
 * ||m_{k-1} alpha|| and ||((a_k - 1) m_{k-1} + m_{k-2}) alpha||, sorted, duplicates merged.
 * Requires m_{k-1} != m_{k-2}, which rules out k = 2 when a_1 = 1.
 */
inline std::vector<QI> three_distance_lengths(const QI& alpha, std::size_t k) {
    if (k < 2) throw std::invalid_argument("three_distance_lengths: convergent index must be at least 2");
    const auto cf = cf_from_qi(alpha);
    const auto conv = convergents(cf, k + 1);
    const Integer& m1 = conv[k - 1].den;
    const Integer& m2 = conv[k - 2].den;
    if (m1 == m2)
        throw std::invalid_argument("three_distance_lengths: m_{k-1} = m_{k-2}, the two-length form does not apply");
    const Integer other = (cf.quotient(k) - 1) * m1 + m2;
    std::vector<QI> out{dist_nearest_int(QI(m1) * alpha), dist_nearest_int(QI(other) * alpha)};
    if (out[1] < out[0]) std::swap(out[0], out[1]);
    if (out[0] == out[1]) out.pop_back();
    return out;
}

/// Convergent denominator m_k (k indexes the expansion of alpha).
inline Integer convergent_denominator(const QI& alpha, std::size_t k) {
    return convergents(cf_from_qi(alpha), k + 1).back().den;
}

struct ExtremeFactor {
    std::string word;
    Weight weight = Weight::Heavy;
};

/// At a convergent denominator m there is one heavy factor (if {-m alpha} >= {-alpha}) or one light factor.
inline ExtremeFactor unique_extreme_factor(const QI& alpha, std::size_t m) {
    if (!is_convergent_denominator(alpha, Integer(static_cast<long long>(m))))
        throw std::invalid_argument("unique_extreme_factor: " + std::to_string(m) + " is not a convergent denominator");
    const Weight w = frac_part(-QI(static_cast<long long>(m)) * alpha) >= frac_part(-alpha) ? Weight::Heavy : Weight::Light;
    const auto part = partition(alpha, m, Convention::ZeroInB);
    std::optional<std::string> found;
    for (const auto& iv : part.intervals) {
        if (iv.weight != w) continue;
        if (found) throw std::logic_error("unique_extreme_factor: class is not a singleton");
        found = iv.factor;
    }
    if (!found) throw std::logic_error("unique_extreme_factor: class is empty");
    return {*found, w};
}

struct RepetitionExtension {
    long long start = 0;
    std::size_t length = 0;
    std::size_t head_len = 0;
    std::size_t tail_len = 0;
    std::size_t exponent = 0;  // k_{m,n} of the enclosed power
    Rational k_prime;          // k_m + 2 - 2/m
};

/// Extends the maximal abelian power of period m (a convergent denominator) at n by a head and tail of length m - 1.
inline RepetitionExtension repetition_extension(const SturmianSpec& s, long long n, std::size_t m) {
    detail::require_positive(static_cast<long long>(m), "repetition_extension");
    if (!is_convergent_denominator(s.alpha(), Integer(static_cast<long long>(m))))
        throw std::invalid_argument("repetition_extension: " + std::to_string(m) + " is not a convergent denominator");
    if (n < static_cast<long long>(m) - 1)
        throw std::invalid_argument("repetition_extension: position must be at least m - 1");
    const PowerReport p = k_mn(s, m, n);
    if (p.k < 2) throw std::invalid_argument("repetition_extension: no abelian power of exponent >= 2 at this position");
    RepetitionExtension ext;
    ext.start = n - static_cast<long long>(m - 1);
    ext.head_len = m - 1;
    ext.tail_len = m - 1;
    ext.exponent = p.k;
    ext.length = 2 * (m - 1) + p.k * m;
    const auto km = static_cast<long long>(k_max(s.alpha(), m));
    ext.k_prime = Rational(km + 2) - Rational(2, static_cast<long long>(m));
    return ext;
}

}  // namespace sturm
