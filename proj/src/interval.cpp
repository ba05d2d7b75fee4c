#include "stiefel/interval.hpp"

#include <algorithm>

#include "stiefel/errors.hpp"

namespace stiefel {

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw InvalidArgumentError("interval with lo > hi");
}

Rational RatInterval::mag() const { return std::max(Rational(abs(lo)), Rational(abs(hi))); }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw InvalidArgumentError("interval division by an interval containing zero");
    return a * RatInterval(make_rational(1, 1) / b.hi, make_rational(1, 1) / b.lo);
}

RatInterval RatInterval::pow(unsigned e) const {
    if (e == 0) return point(Rational(1));
    if (e % 2 == 0 && contains_zero()) {
        // even power of an interval straddling zero: [0, max^e]
        Rational m = mag(), v(1);
        for (unsigned k = 0; k < e; ++k) v *= m;
        return {Rational(0), v};
    }
    RatInterval r = *this;
    for (unsigned k = 1; k < e; ++k) r = r * *this;
    return r;
}

RatInterval interval_eval(const UniPoly& f, const RatInterval& x) {
    RatInterval s = RatInterval::point(Rational(0));
    for (int k = f.degree(); k >= 0; --k) s = s * x + RatInterval::point(f.coeff(k));
    return s;
}

RatInterval interval_eval(const MultiPoly& f, std::span<const RatInterval> box) {
    if (static_cast<int>(box.size()) != f.ring()->nvars()) throw InvalidArgumentError("interval box size mismatch");
    RatInterval s = RatInterval::point(Rational(0));
    for (const auto& [m, c] : f.terms()) {
        RatInterval t = RatInterval::point(c);
        for (int i = 0; i < m.nvars; ++i)
            if (auto e = m.exp[static_cast<size_t>(i)]) t = t * box[static_cast<size_t>(i)].pow(e);
        s = s + t;
    }
    return s;
}

}  // namespace stiefel
