#pragma once

#include "sturm/exact/quadratic.hpp"

#include <string>

namespace sturm {

/// Rounds x to `digits` decimals (half up) and renders it. The rounding decision is exact.
inline std::string to_decimal(const QI& x, unsigned digits) {
    const Integer scale = pow10(digits);
    // floor(x * 10^digits + 1/2) = floor((2 * 10^digits * (a + b sqrt d) + c) / (2c))
    const QI shifted(2 * scale * x.a() + x.c(), 2 * scale * x.b(), 2 * x.c(), x.d());
    Integer n = shifted.floor();
    std::string sign;
    if (n < 0) {
        sign = "-";
        n = -n;
    }
    Integer whole, part;
    boost::multiprecision::divide_qr(n, scale, whole, part);
    std::string out = sign + whole.str();
    if (digits > 0) {
        std::string frac = part.str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

inline std::string to_decimal(const Rational& x, unsigned digits) { return to_decimal(QI(x), digits); }

}  // namespace sturm
