#pragma once

#include "sturm/exact/quadratic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sturm {

/**
 * Eventually periodic simple continued fraction [a0; a1, ..., a_{r-1}, (p0, ..., p_{L-1}) repeated].
 *
 * Canonical form: the preperiod always holds a0 and is otherwise as short as
 * possible; the period has minimal length. Two canonical expansions are equal
 * iff they denote the same number.
 */
class ContinuedFraction {
public:
    ContinuedFraction(std::vector<Integer> preperiod, std::vector<Integer> period)
        : pre_(std::move(preperiod)), period_(std::move(period)) {
        if (period_.empty()) throw std::invalid_argument("continued fraction: empty period");
        for (const auto& p : period_)
            if (p < 1) throw std::invalid_argument("continued fraction: period entries must be >= 1");
        for (std::size_t i = 1; i < pre_.size(); ++i)
            if (pre_[i] < 1) throw std::invalid_argument("continued fraction: partial quotients a_i, i >= 1, must be >= 1");
        canonicalize();
    }

    /// Purely periodic shorthand, e.g. periodic({1}) is phi.
    static ContinuedFraction periodic(std::vector<Integer> period) { return {{}, std::move(period)}; }

    const std::vector<Integer>& preperiod() const { return pre_; }
    const std::vector<Integer>& period() const { return period_; }

    /// Partial quotient a_i.
    const Integer& quotient(std::size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return period_[(i - pre_.size()) % period_.size()];
    }

    /// "[a0;a1,a2|p0,p1]".
    std::string str() const {
        std::string s = "[" + pre_[0].str() + ";";
        for (std::size_t i = 1; i < pre_.size(); ++i) s += (i > 1 ? "," : "") + pre_[i].str();
        s += "|";
        for (std::size_t i = 0; i < period_.size(); ++i) s += (i > 0 ? "," : "") + period_[i].str();
        return s + "]";
    }

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    void canonicalize() {
        if (pre_.empty()) {
            pre_.push_back(period_.front());
            std::rotate(period_.begin(), period_.begin() + 1, period_.end());
        }
        const std::size_t len = period_.size();
        for (std::size_t p = 1; p <= len; ++p) {
            if (len % p != 0) continue;
            bool ok = true;
            for (std::size_t i = p; i < len && ok; ++i) ok = period_[i] == period_[i - p];
            if (ok) {
                period_.resize(p);
                break;
            }
        }
        while (pre_.size() > 1 && pre_.back() == period_.back()) {
            pre_.pop_back();
            std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
        }
    }

    std::vector<Integer> pre_;
    std::vector<Integer> period_;
};

/// Parses "[a0;a1,...|p0,...]". The preperiod list after ';' may be empty.
inline ContinuedFraction parse_continued_fraction(std::string_view text) {
    std::string_view s = trim(text);
    auto bad = [&]() { return std::invalid_argument("malformed continued fraction '" + std::string(text) + "'"); };
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw bad();
    s = s.substr(1, s.size() - 2);
    const auto semi = s.find(';');
    const auto bar = s.find('|');
    if (semi == std::string_view::npos || bar == std::string_view::npos || bar < semi) throw bad();
    auto split = [](std::string_view list) {
        std::vector<Integer> out;
        list = trim(list);
        if (list.empty()) return out;
        std::size_t start = 0;
        while (true) {
            auto comma = list.find(',', start);
            out.push_back(parse_integer(list.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    };
    std::vector<Integer> pre{parse_integer(s.substr(0, semi))};
    for (auto& q : split(s.substr(semi + 1, bar - semi - 1))) pre.push_back(std::move(q));
    std::vector<Integer> period = split(s.substr(bar + 1));
    if (period.empty()) throw bad();
    return {std::move(pre), std::move(period)};
}

/// Expansion of a quadratic irrational; the period is found when the (P, Q) state of the
/// complete quotient (P + sqrt D) / Q repeats.
inline ContinuedFraction cf_from_qi(const QI& x) {
    if (x.is_rational()) throw std::invalid_argument("not a quadratic irrational: " + x.str());
    Integer D = x.b() * x.b() * x.d();
    Integer P = x.b() > 0 ? x.a() : Integer(-x.a());
    Integer Q = x.b() > 0 ? x.c() : Integer(-x.c());
    if ((D - P * P) % Q != 0) {
        const Integer aq = abs_int(Q);
        P *= aq;
        D *= Q * Q;
        Q *= aq;
    }
    const Integer s = isqrt(D);
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> quotients;
    while (true) {
        auto [it, inserted] = seen.emplace(std::make_pair(P, Q), quotients.size());
        if (!inserted) {
            const std::size_t start = it->second;
            std::vector<Integer> pre(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
            std::vector<Integer> period(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
            return {std::move(pre), std::move(period)};
        }
        const Integer a = Q > 0 ? floor_div(P + s, Q) : floor_div(-P - s - 1, -Q);
        quotients.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

/// Value of [q0; q1, ..., q_{n-1}, tail].
inline QI fold_quotients(const std::vector<Integer>& quotients, QI tail) {
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) tail = QI(*it) + tail.reciprocal();
    return tail;
}

/// Value of the purely periodic expansion [p0; p1, ..., p_{L-1}, p0, ...] (> 1).
inline QI purely_periodic_value(const std::vector<Integer>& period) {
    // t = (h t + h') / (k t + k') with h/k, h'/k' the last two convergents of the period.
    Integer h = 1, h_prev = 0, k = 0, k_prev = 1;
    for (const auto& p : period) {
        Integer h_next = p * h + h_prev;
        Integer k_next = p * k + k_prev;
        h_prev = std::move(h);
        k_prev = std::move(k);
        h = std::move(h_next);
        k = std::move(k_next);
    }
    // k t^2 + (k' - h) t - h' = 0, positive root.
    const Integer disc = (k_prev - h) * (k_prev - h) + 4 * k * h_prev;
    return QI(h - k_prev, 1, 2 * k, disc);
}

inline QI qi_from_cf(const ContinuedFraction& cf) {
    return fold_quotients(cf.preperiod(), purely_periodic_value(cf.period()));
}

struct Convergent {
    Integer num;  // n_i
    Integer den;  // m_i
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// The first `count` convergents n_i / m_i, i = 0 .. count-1.
inline std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
    if (count == 0) throw std::invalid_argument("convergents: count must be >= 1");
    std::vector<Convergent> out;
    out.reserve(count);
    Integer n = 1, n_prev = 0, m = 0, m_prev = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const Integer& a = cf.quotient(i);
        Integer n_next = a * n + n_prev;
        Integer m_next = a * m + m_prev;
        n_prev = std::move(n);
        m_prev = std::move(m);
        n = std::move(n_next);
        m = std::move(m_next);
        out.push_back({n, m});
    }
    return out;
}

/// Convergent denominators m_0, m_1, ... up to and including the first one exceeding `limit`.
inline std::vector<Integer> convergent_denominators(const ContinuedFraction& cf, const Integer& limit) {
    std::vector<Integer> dens;
    Integer m = 0, m_prev = 1;
    for (std::size_t i = 0;; ++i) {
        Integer m_next = cf.quotient(i) * m + m_prev;
        m_prev = std::move(m);
        m = std::move(m_next);
        dens.push_back(m);
        if (m > limit) return dens;
    }
}

inline bool is_convergent_denominator(const QI& alpha, const Integer& m) {
    const auto dens = convergent_denominators(cf_from_qi(alpha), m);
    return std::find(dens.begin(), dens.end(), m) != dens.end();
}

/// Next convergent denominator after m: the smallest m' > m with ||m' alpha|| < ||m alpha||.
inline Integer smallest_better(const QI& alpha, const Integer& m) {
    if (m < 1) throw std::invalid_argument("smallest_better: m must be positive");
    const auto dens = convergent_denominators(cf_from_qi(alpha), m);
    if (std::find(dens.begin(), dens.end(), m) == dens.end())
        throw std::invalid_argument("smallest_better: " + m.str() + " is not a convergent denominator of " + alpha.str());
    return dens.back();
}

}  // namespace sturm
