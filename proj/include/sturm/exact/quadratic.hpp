#pragma once

#include "sturm/exact/integer.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sturm {

namespace detail {

/// Sign of p + q*sqrt(d) for d > 0.
inline int sign_surd(const Integer& p, const Integer& q, const Integer& d) {
    const int sp = p.sign();
    const int sq = q.sign();
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const Integer lhs = p * p;
    const Integer rhs = q * q * d;
    if (lhs > rhs) return sp;
    if (lhs < rhs) return sq;
    return 0;
}

/// Sign of A + B*sqrt(d1) + C*sqrt(d2), by squaring with sign bookkeeping.
inline int sign_two_surds(const Integer& A, const Integer& B, const Integer& d1, const Integer& C,
                          const Integer& d2) {
    const int sx = sign_surd(A, B, d1);
    const int sy = C.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // |X| vs |Y| with X = A + B sqrt(d1), Y = C sqrt(d2): compare X^2 with C^2 d2.
    const int t = sign_surd(A * A + B * B * d1 - C * C * d2, 2 * A * B, d1);
    if (t > 0) return sx;
    if (t < 0) return sy;
    return 0;
}

}  // namespace detail

/**
 * An element (a + b*sqrt(d)) / c of a real quadratic field, held exactly.
 *
 * Normal form: c > 0, gcd(a, b, c) = 1, d squarefree and > 1 whenever b != 0.
 * Rationals are embedded with b = 0 and d = 1. Arithmetic is closed within one
 * field (a rational operand adopts the other operand's field); ordering is total
 * and also works across different fields.
 */
class QuadraticIrrational {
public:
    QuadraticIrrational() : a_(0), b_(0), c_(1), d_(1) {}
    QuadraticIrrational(long long n) : a_(n), b_(0), c_(1), d_(1) {}  // NOLINT(implicit)
    QuadraticIrrational(const Integer& n) : a_(n), b_(0), c_(1), d_(1) {}  // NOLINT(implicit)
    QuadraticIrrational(const Rational& r)  // NOLINT(implicit)
        : a_(boost::multiprecision::numerator(r)), b_(0), c_(boost::multiprecision::denominator(r)), d_(1) {}

    QuadraticIrrational(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (c_ == 0) throw std::invalid_argument("quadratic irrational: zero denominator");
        if (d_ <= 0) throw std::invalid_argument("quadratic irrational: radicand must be positive");
        normalize();
    }

    /// sqrt(d) for d >= 0.
    static QuadraticIrrational sqrt(const Integer& d) {
        if (d == 0) return {};
        return {0, 1, 1, d};
    }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && c_ == 1; }

    Rational rational_part() const { return Rational(a_, c_); }
    Rational surd_part() const { return Rational(b_, c_); }

    int sign() const { return detail::sign_surd(a_, b_, d_); }

    Integer floor() const {
        if (b_ == 0) return floor_div(a_, c_);
        const Integer s = isqrt(b_ * b_ * d_);
        const Integer fb = b_ > 0 ? s : Integer(-s - 1);
        return floor_div(a_ + fb, c_);
    }

    Integer ceil() const { return -(-*this).floor(); }

    /// Galois conjugate (a - b sqrt d)/c.
    QuadraticIrrational conjugate() const { return {a_, -b_, c_, d_}; }

    QuadraticIrrational operator-() const {
        QuadraticIrrational r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        const Integer d = common_field(x, y);
        return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d};
    }

    friend QuadraticIrrational operator-(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x + (-y);
    }

    friend QuadraticIrrational operator*(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        const Integer d = common_field(x, y);
        return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d};
    }

    friend QuadraticIrrational operator/(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x * y.reciprocal();
    }

    QuadraticIrrational reciprocal() const {
        // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        const Integer norm = a_ * a_ - b_ * b_ * d_;
        if (norm == 0) throw std::domain_error("quadratic irrational: division by zero");
        return {c_ * a_, -c_ * b_, norm, d_};
    }

    QuadraticIrrational& operator+=(const QuadraticIrrational& y) { return *this = *this + y; }
    QuadraticIrrational& operator-=(const QuadraticIrrational& y) { return *this = *this - y; }
    QuadraticIrrational& operator*=(const QuadraticIrrational& y) { return *this = *this * y; }
    QuadraticIrrational& operator/=(const QuadraticIrrational& y) { return *this = *this / y; }

    /// Exact sign of x - y. Works across different fields.
    friend int compare_sign(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        if (x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_) return (x - y).sign();
        // sign(c2 (a1 + b1 sqrt d1) - c1 (a2 + b2 sqrt d2))
        return detail::sign_two_surds(y.c_ * x.a_ - x.c_ * y.a_, y.c_ * x.b_, x.d_, -x.c_ * y.b_, y.d_);
    }

    friend std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        const int s = compare_sign(x, y);
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Normal form is unique, so structural equality is value equality.
    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    /// "(a+b*sqrt(d))/c" with redundant parts dropped, e.g. "(-1+sqrt(5))/2", "3/4", "2*sqrt(3)".
    std::string str() const {
        if (b_ == 0) return to_string(rational_part());
        std::string num;
        if (a_ != 0) num = a_.str();
        std::string surd = "sqrt(" + d_.str() + ")";
        Integer ab = abs_int(b_);
        if (ab != 1) surd = ab.str() + "*" + surd;
        if (b_ < 0)
            num += "-" + surd;
        else if (a_ != 0)
            num += "+" + surd;
        else
            num = surd;
        if (c_ == 1) return num;
        if (a_ != 0 || b_ < 0) num = "(" + num + ")";
        return num + "/" + c_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x) { return os << x.str(); }

private:
    // d = outside^2 * result with result squarefree.
    static Integer squarefree_part(const Integer& d, Integer& outside) {
        if (d <= Integer(std::numeric_limits<std::uint64_t>::max())) {
            auto rest = d.convert_to<std::uint64_t>();
            std::uint64_t kept = 1;
            std::uint64_t out = 1;
            for (std::uint64_t p = 2; p <= rest / p; ++p) {
                unsigned e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                for (unsigned i = 0; i < e / 2; ++i) out *= p;
                if (e % 2 == 1) kept *= p;
            }
            outside = Integer(out);
            return Integer(kept) * Integer(rest);
        }
        Integer rest = d;
        Integer kept = 1;
        for (Integer p = 2; p * p <= rest; ++p) {
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            for (unsigned i = 0; i < e / 2; ++i) outside *= p;
            if (e % 2 == 1) kept *= p;
        }
        return kept * rest;
    }

    static Integer common_field(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
        throw std::domain_error("quadratic irrational: operands live in different fields (sqrt(" + x.d_.str() +
                                ") vs sqrt(" + y.d_.str() + "))");
    }

    void normalize() {
        if (b_ != 0) {
            // Pull square factors out of the radicand.
            Integer outside = 1;
            d_ = squarefree_part(d_, outside);
            b_ *= outside;
            if (d_ == 1) {
                a_ += b_;
                b_ = 0;
            }
        }
        if (b_ == 0) d_ = 1;
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        Integer g = gcd_int(gcd_int(a_, b_), c_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
    }

    Integer a_, b_, c_, d_;
};

using QI = QuadraticIrrational;

enum class Ordering { Less, Equal, Greater };

inline Ordering compare(const QI& x, const QI& y) {
    const int s = compare_sign(x, y);
    return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

/// {x} = x - floor(x), in [0, 1).
inline QI frac_part(const QI& x) { return x - QI(x.floor()); }

/// ||x||: distance to the nearest integer, in [0, 1/2].
inline QI dist_nearest_int(const QI& x) {
    QI f = frac_part(x);
    QI g = QI(1) - f;
    if (f.sign() == 0) return f;
    return f < g ? f : g;
}

/// phi - 1 = (-1 + sqrt 5) / 2.
inline QI golden_conjugate() { return {-1, 1, 2, 5}; }

}  // namespace sturm
