#include "stiefel/curvature.hpp"

#include <algorithm>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

std::array<int, 3> sorted_key(int i, int j, int k) {
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    for (int v : key)
        if (v < 0 || v > 3) throw InvalidArgumentError("triple index out of range");
    return key;
}

}  // namespace

Rational TripleTable::get(int i, int j, int k) const {
    auto it = entries.find(sorted_key(i, j, k));
    return it == entries.end() ? Rational(0) : it->second;
}

void TripleTable::set(int i, int j, int k, const Rational& v) {
    if (v == 0) return;
    entries[sorted_key(i, j, k)] = v;
}

TripleTable structure_constants_bruteforce(const Decomposition& dec) {
    TripleTable t;
    t.n = dec.n;
    t.p = dec.p;
    t.dims = dec.dims();

    std::array<std::vector<Rational>, 4> norms;  // -B(x,x) per stored basis vector
    for (int i = 0; i <= 3; ++i)
        for (const auto& x : dec.module(i)) norms[static_cast<size_t>(i)].push_back(minus_B(x, x));

    // A_ijk = sum over basis triples of (-B([x,y],z))^2 / (|x|^2 |y|^2 |z|^2)
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
            for (int k = j; k <= 3; ++k) {
                Rational s(0);
                const auto& Mi = dec.module(i);
                const auto& Mj = dec.module(j);
                const auto& Mk = dec.module(k);
                for (size_t a = 0; a < Mi.size(); ++a)
                    for (size_t b = 0; b < Mj.size(); ++b) {
                        const SkewElement br = bracket(Mi[a], Mj[b]);
                        if (br.is_zero()) continue;
                        for (size_t c = 0; c < Mk.size(); ++c) {
                            Rational v = minus_B(br, Mk[c]);
                            if (v != 0)
                                s += v * v /
                                     (norms[static_cast<size_t>(i)][a] * norms[static_cast<size_t>(j)][b] *
                                      norms[static_cast<size_t>(k)][c]);
                        }
                    }
                t.set(i, j, k, s);
            }
    return t;
}

TripleTable structure_constants_closed(int n, int p) {
    if (p < 2 || n - 2 * p < 1) throw InvalidArgumentError("structure_constants_closed requires p >= 2 and n - 2p >= 1");
    TripleTable t;
    t.n = n;
    t.p = p;
    const int d1 = p * p - 1, d2 = 2 * p * (n - 2 * p), d3 = p * (p - 1);
    t.dims = {1, d1, d2, d3};
    const Int D = d2 + 4 * d3;  // equals 2p(n-2)
    t.set(2, 2, 0, make_rational(d2, D));
    t.set(3, 3, 0, make_rational(4 * d3, D));
    t.set(1, 1, 1, make_rational(Int(2 * d3) * (2 * d1 + 2 - d3), D));
    t.set(1, 2, 2, make_rational(Int(d1) * d2, D));
    t.set(1, 3, 3, make_rational(Int(2 * d3) * (d3 - 2), D));
    t.set(3, 2, 2, make_rational(Int(d2) * d3, D));
    return t;
}

RationalFn RationalFn::of(MultiPoly num, MultiPoly den) {
    if (den.is_zero() || den.term_count() != 1) throw InvalidArgumentError("RationalFn denominator must be one term");
    const auto& [dm, dc] = den.terms()[0];
    num = make_rational(1, 1) / dc * num;
    MultiPoly mden = MultiPoly::monomial(den.ring(), dm, Rational(1));
    if (num.is_zero()) return {std::move(num), MultiPoly::constant(den.ring(), Rational(1))};
    // cancel the common monomial factor
    Monomial g = gcd(num.monomial_content(), dm);
    if (!g.is_one()) {
        num = num.divide_by_monomial(g);
        mden = mden.divide_by_monomial(g);
    }
    return {std::move(num), std::move(mden)};
}

RationalFn RationalFn::from_poly(MultiPoly p) {
    auto ring = p.ring();
    return {std::move(p), MultiPoly::constant(ring, Rational(1))};
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    const Monomial da = den.terms()[0].first, db = o.den.terms()[0].first;
    const Monomial l = lcm(da, db);
    MultiPoly sa = MultiPoly::monomial(num.ring(), l / da, Rational(1));
    MultiPoly sb = MultiPoly::monomial(num.ring(), l / db, Rational(1));
    return RationalFn::of(num * sa + o.num * sb, MultiPoly::monomial(num.ring(), l, Rational(1)));
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + RationalFn{-o.num, o.den}; }

bool RationalFn::equals(const RationalFn& o) const { return num * o.den == o.num * den; }

Rational RationalFn::eval(std::span<const Rational> point) const {
    Rational d = den.eval(point);
    if (d == 0) throw InvalidArgumentError("RationalFn evaluated at a denominator zero");
    return num.eval(point) / d;
}

RatInterval RationalFn::eval(std::span<const RatInterval> box) const {
    return interval_eval(num, box) / interval_eval(den, box);
}

RingPtr metric_ring() {
    static const RingPtr ring = make_ring({"u0", "u1", "u2", "u3"});
    return ring;
}

std::array<MultiPoly, 4> metric_variables(const RingPtr& ring4) {
    return {MultiPoly::variable(ring4, "u0"), MultiPoly::variable(ring4, "u1"), MultiPoly::variable(ring4, "u2"),
            MultiPoly::variable(ring4, "u3")};
}

RicciComponents ricci_general(const TripleTable& table, const std::array<int, 4>& dims, const RingPtr& ring,
                              const std::array<MultiPoly, 4>& metric) {
    for (const auto& x : metric)
        if (x.is_zero() || x.term_count() != 1) throw InvalidArgumentError("metric entries must be single-term polynomials");
    for (int d : dims)
        if (d <= 0) throw InvalidArgumentError("summand dimension must be positive");

    RicciComponents rc;
    rc.ring = ring;
    const MultiPoly one = MultiPoly::constant(ring, Rational(1));
    for (int k = 0; k <= 3; ++k) {
        const size_t ku = static_cast<size_t>(k);
        RationalFn r = RationalFn::of(one, Rational(2) * metric[ku]);
        for (int j = 0; j <= 3; ++j)
            for (int i = 0; i <= 3; ++i) {
                const size_t ju = static_cast<size_t>(j), iu = static_cast<size_t>(i);
                if (Rational a = table.get(j, i, k); a != 0)
                    r = r + RationalFn::of(make_rational(a.get_num(), 4 * dims[ku] * a.get_den()) * metric[ku],
                                           metric[ju] * metric[iu]);
                if (Rational a = table.get(k, i, j); a != 0)
                    r = r - RationalFn::of(make_rational(a.get_num(), 2 * dims[ku] * a.get_den()) * metric[ju],
                                           metric[ku] * metric[iu]);
            }
        rc.r[ku] = r;
    }
    return rc;
}

RicciComponents ricci_specialized(int n, int p, const RingPtr& ring, const std::array<MultiPoly, 4>& metric) {
    if (p < 2 || n - 2 * p < 1) throw InvalidArgumentError("ricci_specialized requires p >= 2 and n - 2p >= 1");
    const Int d1 = p * p - 1, d2 = 2 * p * (n - 2 * p), d3 = p * (p - 1);
    const Int D = d2 + 4 * d3;
    const MultiPoly &u0 = metric[0], &u1 = metric[1], &u2 = metric[2], &u3 = metric[3];
    const MultiPoly one = MultiPoly::constant(ring, Rational(1));
    auto fn = [&](const Rational& c, const MultiPoly& num, const MultiPoly& den) {
        return RationalFn::of(c * num, den);
    };

    RicciComponents rc;
    rc.ring = ring;
    rc.r[0] = fn(make_rational(d2, 4 * D), u0, u2 * u2) + fn(make_rational(4 * d3, 4 * D), u0, u3 * u3);
    rc.r[1] = fn(make_rational(2 * d3 * (2 * d1 + 2 - d3), 4 * d1 * D), one, u1) +
              fn(make_rational(d2, 4 * D), u1, u2 * u2) + fn(make_rational(d3 * (d3 - 2), 2 * d1 * D), u1, u3 * u3);
    rc.r[2] = fn(make_rational(1, 2), one, u2) - fn(make_rational(d3, 2 * D), u3, u2 * u2) -
              fn(make_rational(1, 2 * D), u0, u2 * u2) - fn(make_rational(d1, 2 * D), u1, u2 * u2);
    rc.r[3] = fn(make_rational(D - d2, 2 * D), one, u3) + fn(make_rational(d2, 4 * D), u3, u2 * u2) -
              fn(make_rational(2, D), u0, u3 * u3) - fn(make_rational(d3 - 2, D), u1, u3 * u3);
    return rc;
}

RicciComponents ricci_general(const TripleTable& table) {
    const RingPtr ring = metric_ring();
    return ricci_general(table, table.dims, ring, metric_variables(ring));
}

RicciComponents ricci_specialized(int n, int p) {
    const RingPtr ring = metric_ring();
    return ricci_specialized(n, p, ring, metric_variables(ring));
}

std::array<Rational, 4> ricci_at(const RicciComponents& rc, const MetricVector& metric) {
    for (const auto& u : metric.u)
        if (sign(u) <= 0) throw InvalidArgumentError("metric entries must be strictly positive");
    std::array<Rational, 4> out;
    for (int k = 0; k <= 3; ++k) out[static_cast<size_t>(k)] = rc.r[static_cast<size_t>(k)].eval(metric.u);
    return out;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const MonomialOrder order = MonomialOrder::lex(a.ring());
    return b.leading_term(order).second * a == a.leading_term(order).second * b;
}

EinsteinSystem einstein_system_printed(int n, int p) {
    if (p < 2 || n - 2 * p < 1) throw InvalidArgumentError("einstein_system requires p >= 2 and n - 2p >= 1");
    const RingPtr ring = make_ring({"u0", "u1", "u2"});
    const MultiPoly u0 = MultiPoly::variable(ring, "u0");
    const MultiPoly u1 = MultiPoly::variable(ring, "u1");
    const MultiPoly u2 = MultiPoly::variable(ring, "u2");
    auto C = [&](long v) { return MultiPoly::constant(ring, Rational(v)); };

    EinsteinSystem es;
    es.n = n;
    es.p = p;
    es.ring = ring;
    es.f1 = C(n - 2 * p) * u0 * u1 - C(n - 2 * p) * u1 * u1 + C(2 * (p - 1)) * u0 * u1 * u2 * u2 -
            C(p - 2) * u1 * u1 * u2 * u2 - C(p) * u2 * u2;
    es.f2 = C(static_cast<long>(n) * p - p * p - 1) * u1 * u1 - C(2 * (n - 2) * p) * u1 * u2 + C(p * p) * u2 * u2 +
            C((p - 2) * p) * u1 * u1 * u2 * u2 + C((p - 1) * p) * u1 + u0 * u1;
    es.f3 = C(2 * (n - 2) * p) * u2 + C(p * (-n + p + 1)) + C(2 * (p - 2) * (p + 1)) * u1 * u2 * u2 -
            C((p - 1) * (p + 1)) * u1 - C(4 * (p - 1) * p) * u2 * u2 + C(4) * u0 * u2 * u2 - u0;
    return es;
}

EinsteinSystem einstein_system(int n, int p) {
    const RicciComponents rc = ricci_general(structure_constants_closed(n, p));

    const RingPtr ring3 = make_ring({"u0", "u1", "u2"});
    const MonomialOrder order3 = MonomialOrder::lex(ring3);
    // u3 -> 1 into the three-variable ring
    const std::array<MultiPoly, 4> images{MultiPoly::variable(ring3, "u0"), MultiPoly::variable(ring3, "u1"),
                                          MultiPoly::variable(ring3, "u2"), MultiPoly::constant(ring3, Rational(1))};

    EinsteinSystem es;
    es.n = n;
    es.p = p;
    es.ring = ring3;
    std::array<MultiPoly, 3> fs{MultiPoly::zero(ring3), MultiPoly::zero(ring3), MultiPoly::zero(ring3)};
    for (int k = 0; k < 3; ++k) {
        const RationalFn diff = rc.r[static_cast<size_t>(k)] - rc.r[static_cast<size_t>(k + 1)];
        MultiPoly num = diff.num.substitute(ring3, images);
        if (num.is_zero()) throw Error("Einstein equation collapsed to zero");
        num = num.divide_by_monomial(num.monomial_content());
        fs[static_cast<size_t>(k)] = num.primitive_positive(order3);
    }
    es.f1 = fs[0];
    es.f2 = fs[1];
    es.f3 = fs[2];

    const EinsteinSystem printed = einstein_system_printed(n, p);
    if (!proportional(es.f1, printed.f1) || !proportional(es.f2, printed.f2) || !proportional(es.f3, printed.f3))
        throw Error("derived Einstein system is not proportional to the printed one");
    return es;
}

}  // namespace stiefel
