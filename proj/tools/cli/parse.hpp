#pragma once

#include "sturm/sturm.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sturm::cli {

/// Malformed user input; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Angle {
    QI value;
    ContinuedFraction cf;
    bool fibonacci = false;
};

/// "fib", a quadruple "(a,b,c,d)" for (a + b sqrt d) / c, or a continued fraction "[a0;pre|period]".
inline Angle parse_alpha(std::string_view text) {
    const std::string_view s = trim(text);
    QI value;
    try {
        if (s == "fib") {
            value = golden_conjugate();
        } else if (!s.empty() && s.front() == '[') {
            value = qi_from_cf(parse_continued_fraction(s));
        } else if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            std::vector<Integer> parts;
            std::string_view body = s.substr(1, s.size() - 2);
            std::size_t start = 0;
            while (true) {
                const auto comma = body.find(',', start);
                parts.push_back(parse_integer(body.substr(start, comma == std::string_view::npos ? comma : comma - start)));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            if (parts.size() != 4) throw UsageError("alpha quadruple needs four integers: '" + std::string(text) + "'");
            if (parts[2] <= 0 || parts[3] <= 0) throw UsageError("alpha quadruple needs c > 0 and d > 0");
            value = QI(parts[0], parts[1], parts[2], parts[3]);
        } else {
            throw UsageError("unrecognized alpha '" + std::string(text) + "' (expected fib, (a,b,c,d) or [a0;pre|period])");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (value.is_rational() || value.sign() <= 0 || value >= QI(1))
        throw UsageError("alpha must be an irrational in (0, 1), got " + value.str());
    return {value, cf_from_qi(value), value == golden_conjugate()};
}

struct RhoSpec {
    Rational u = 0;
    Rational v = 1;
};

/// "u+v*alpha" with rational u and v; either part may be omitted ("alpha", "1/3", "-7*alpha").
inline RhoSpec parse_rho(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw UsageError("empty rho");
    RhoSpec rho{0, 0};
    std::size_t pos = 0;
    try {
        while (pos < s.size()) {
            std::size_t end = pos + 1;
            while (end < s.size() && s[end] != '+' && s[end] != '-') {
                if (s[end] == '/' && end + 1 < s.size() && (s[end + 1] == '-' || s[end + 1] == '+')) ++end;
                ++end;
            }
            std::string term = s.substr(pos, end - pos);
            pos = end;
            bool negative = false;
            if (term.front() == '+' || term.front() == '-') {
                negative = term.front() == '-';
                term.erase(0, 1);
            }
            Rational coeff = 1;
            bool is_alpha = false;
            if (term == "alpha") {
                is_alpha = true;
            } else if (term.size() > 6 && term.compare(term.size() - 6, 6, "*alpha") == 0) {
                is_alpha = true;
                coeff = parse_rational(term.substr(0, term.size() - 6));
            } else {
                coeff = parse_rational(term);
            }
            if (negative) coeff = -coeff;
            (is_alpha ? rho.v : rho.u) += coeff;
        }
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rho '" + std::string(text) + "' (expected u+v*alpha)");
    }
    return rho;
}

inline Convention parse_convention(std::string_view text) {
    if (text == "zero-in-b") return Convention::ZeroInB;
    if (text == "zero-in-a") return Convention::ZeroInA;
    throw UsageError("convention must be zero-in-b or zero-in-a, got '" + std::string(text) + "'");
}

/// Comma-separated items, each "k" or "lo..hi", in the given order.
inline std::vector<long long> parse_range(std::string_view text) {
    std::vector<long long> out;
    const std::string s(trim(text));
    if (s.empty()) throw UsageError("empty range");
    std::size_t start = 0;
    auto number = [&](const std::string& item) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            return v;
        } catch (const std::logic_error&) {
            throw UsageError("malformed range '" + s + "'");
        }
    };
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
        } else {
            const long long lo = number(item.substr(0, dots));
            const long long hi = number(item.substr(dots + 2));
            if (hi < lo) throw UsageError("empty range '" + item + "'");
            if (hi - lo > 10'000'000) throw UsageError("range too large '" + item + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// A range whose entries must all be at least `min`.
inline std::vector<long long> parse_range_min(std::string_view text, long long min, const char* name) {
    auto v = parse_range(text);
    for (long long x : v)
        if (x < min) throw UsageError(std::string("--") + name + " entries must be >= " + std::to_string(min));
    return v;
}

/// `text` parsed as a range, or `fallback` when `text` is empty.
inline std::vector<long long> range_or(const std::string& text, const char* fallback, long long min, const char* name) {
    return parse_range_min(text.empty() ? std::string_view(fallback) : std::string_view(text), min, name);
}

}  // namespace sturm::cli
