#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sturm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(n / d), d != 0.
inline Integer floor_div(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("floor_div: division by zero");
    Integer q, r;
    boost::multiprecision::divide_qr(n, d, q, r);
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

/// floor(sqrt(n)), n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Integer pow10(unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline Integer floor(const Rational& x) {
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline Integer ceil(const Rational& x) { return -floor(Rational(-x)); }

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
    const Integer& den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view text) {
    std::string_view s = trim(text);
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
    if (pos >= s.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    Integer v(std::string(s.substr(pos)));
    return (s[0] == '-') ? Integer(-v) : v;
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace sturm
