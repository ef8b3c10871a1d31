#pragma once

#include "sturm/sturm.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>
#include <string>
#include <vector>

namespace sturm::test {

inline QI phi_minus_1() { return golden_conjugate(); }
inline QI sqrt3_angle() { return {-1, 1, 2, 3}; }  // [0; 2, 1, 2, 1, ...]
inline QI sqrt2_angle() { return {-1, 1, 1, 2}; }  // frac(sqrt 2) = [0; 2, 2, ...]

inline std::vector<QI> angles() { return {phi_minus_1(), sqrt3_angle(), sqrt2_angle()}; }

/// Deterministic generator for every property test.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed2013ULL);
    return engine;
}

inline long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

/// Random continued fraction: preperiod of length <= 6 (a0 in [-3, 9]), period of length 1..6, entries in [1, 9].
inline ContinuedFraction random_cf(std::size_t max_len = 6, long long max_entry = 9) {
    std::vector<Integer> pre, period;
    const auto pre_len = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < pre_len; ++i) pre.emplace_back(i == 0 ? uniform(-3, max_entry) : uniform(1, max_entry));
    const auto per_len = static_cast<std::size_t>(uniform(1, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < per_len; ++i) period.emplace_back(uniform(1, max_entry));
    return {pre, period};
}

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<220>>;

/// 220-digit decimal evaluation, independent of the exact comparison code.
inline Decimal to_decimal_float(const QI& x) {
    const Decimal a(x.a().str()), b(x.b().str()), c(x.c().str()), d(x.d().str());
    return (a + b * boost::multiprecision::sqrt(d)) / c;
}

inline double approx(const QI& x) { return to_decimal_float(x).convert_to<double>(); }

/// Letter counts computed directly, without prefix sums.
inline ParikhVector naive_parikh(const std::string& w, std::size_t i, std::size_t j) {
    ParikhVector p;
    for (std::size_t t = i; t < j; ++t) (w[t] == 'a' ? p.count_a : p.count_b) += 1;
    return p;
}

/// Straight from the definition: some head h < m, blocks of equal Parikh vector, head and tail contained in it.
inline bool naive_has_period(const std::string& w, std::size_t m) {
    for (std::size_t h = 0; h < m && h + m <= w.size(); ++h) {
        const ParikhVector block = naive_parikh(w, h, h + m);
        if (!parikh_contained(naive_parikh(w, 0, h), block)) continue;
        std::size_t pos = h + m;
        bool ok = true;
        while (ok && pos + m <= w.size()) {
            ok = naive_parikh(w, pos, pos + m) == block;
            pos += m;
        }
        if (ok && parikh_contained(naive_parikh(w, pos, w.size()), block)) return true;
    }
    return false;
}

inline std::size_t naive_min_period(const std::string& w) {
    for (std::size_t m = 1;; ++m)
        if (naive_has_period(w, m)) return m;
}

inline std::string random_word(std::size_t len) {
    std::string w(len, 'a');
    for (auto& ch : w) ch = uniform(0, 1) ? 'a' : 'b';
    return w;
}

/// Initial points exercising the generic, zero and exceptional cases.
struct NamedSpec {
    std::string name;
    SturmianSpec spec;
};

inline std::vector<NamedSpec> specs_for(const QI& alpha) {
    std::vector<NamedSpec> out;
    for (auto c : {Convention::ZeroInB, Convention::ZeroInA}) {
        const std::string cs = to_string(c);
        out.push_back({"rho=alpha " + cs, SturmianSpec(alpha, 0, 1, c)});
        out.push_back({"rho=0 " + cs, SturmianSpec(alpha, 0, 0, c)});
        out.push_back({"rho=1/3 " + cs, SturmianSpec(alpha, Rational(1, 3), 0, c)});
        out.push_back({"rho=-60alpha " + cs, SturmianSpec(alpha, 0, -60, c)});
        out.push_back({"rho=-210alpha " + cs, SturmianSpec(alpha, 0, -210, c)});
    }
    return out;
}

}  // namespace sturm::test
