// Interval arithmetic with exact rational endpoints. There is no
// rounding anywhere, so enclosures are exact set images of the interval
// operations (not necessarily tight for dependent expressions).
#pragma once

#include <span>

#include "stiefel/multipoly.hpp"
#include "stiefel/rational.hpp"
#include "stiefel/unipoly.hpp"

namespace stiefel {

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h);
    static RatInterval point(Rational v) { return RatInterval(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool is_positive() const { return sign(lo) > 0; }
    bool is_negative() const { return sign(hi) < 0; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    // max |x| over the interval
    Rational mag() const;

    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    // requires 0 not in b
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);
    RatInterval pow(unsigned e) const;

    bool operator==(const RatInterval& o) const = default;
};

RatInterval interval_eval(const UniPoly& f, const RatInterval& x);
RatInterval interval_eval(const MultiPoly& f, std::span<const RatInterval> box);

}  // namespace stiefel
