// Structure constants A_ijk for the four tangent summands (brute force
// over the stored bases, and the closed forms), symbolic Ricci components
// for the diagonal metric (u0,u1,u2,u3), and the normalized Einstein
// polynomial system f1, f2, f3.
#pragma once

#include <array>
#include <map>

#include "stiefel/interval.hpp"
#include "stiefel/multipoly.hpp"
#include "stiefel/rational.hpp"
#include "stiefel/son_model.hpp"

namespace stiefel {

struct TripleTable {
    int n = 0, p = 0;
    std::array<int, 4> dims{};
    // key sorted ascending; fully symmetric; zero values not stored
    std::map<std::array<int, 3>, Rational> entries;

    Rational get(int i, int j, int k) const;
    void set(int i, int j, int k, const Rational& v);
    bool operator==(const TripleTable& o) const = default;
};

TripleTable structure_constants_bruteforce(const Decomposition& dec);
// Lemma-level closed forms with d1 = p^2-1, d2 = 2p(n-2p), d3 = p(p-1)
TripleTable structure_constants_closed(int n, int p);

// positive diagonal metric (u0, u1, u2, u3) for numeric evaluation
struct MetricVector {
    std::array<Rational, 4> u;
};

// Quotient of polynomials whose denominator is a single monic monomial;
// closed under the sums that build Ricci components.
struct RationalFn {
    MultiPoly num;
    MultiPoly den;  // one term, coefficient 1

    static RationalFn of(MultiPoly num, MultiPoly den);
    static RationalFn from_poly(MultiPoly p);
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    bool equals(const RationalFn& o) const;  // cross-multiplied, exact
    Rational eval(std::span<const Rational> point) const;
    RatInterval eval(std::span<const RatInterval> box) const;  // denominator box must avoid 0
};

struct RicciComponents {
    RingPtr ring;
    std::array<RationalFn, 4> r;
};

// Instantiates the general Ricci sum formula with s = 4 summands. The
// metric entries must be single-term polynomials in `ring` (a variable,
// a positive constant, or t*u_k for the homogeneity identity).
RicciComponents ricci_general(const TripleTable& table, const std::array<int, 4>& dims, const RingPtr& ring,
                              const std::array<MultiPoly, 4>& metric);
// The printed component formulas, transcribed directly.
RicciComponents ricci_specialized(int n, int p, const RingPtr& ring, const std::array<MultiPoly, 4>& metric);

// canonical ring (u0, u1, u2, u3) and the identity metric in it
RingPtr metric_ring();
std::array<MultiPoly, 4> metric_variables(const RingPtr& ring4);

RicciComponents ricci_general(const TripleTable& table);    // symbolic, canonical ring
RicciComponents ricci_specialized(int n, int p);            // symbolic, canonical ring
std::array<Rational, 4> ricci_at(const RicciComponents& rc, const MetricVector& metric);

struct EinsteinSystem {
    int n = 0, p = 0;
    RingPtr ring;  // (u0, u1, u2)
    MultiPoly f1, f2, f3;

    std::array<const MultiPoly*, 3> polys() const { return {&f1, &f2, &f3}; }
};

// r0-r1, r1-r2, r2-r3 at u3 = 1, denominators cleared, integer content
// removed, positive leading coefficient under lex(u0>u1>u2). Checked
// internally to be exactly proportional to the printed system.
EinsteinSystem einstein_system(int n, int p);
// direct transcription of the printed normalized system
EinsteinSystem einstein_system_printed(int n, int p);

bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace stiefel
