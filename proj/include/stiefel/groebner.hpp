// Buchberger's algorithm over Q with lexicographic elimination for the
// saturated Einstein ideal at concrete (n, p), plus extraction of the
// univariate eliminant, removal of the named factors, and the
// back-substitution relations used to lift F-roots to full solutions.
#pragma once

#include <optional>
#include <vector>

#include "stiefel/curvature.hpp"
#include "stiefel/multipoly.hpp"
#include "stiefel/unipoly.hpp"

namespace stiefel {

struct Ideal {
    RingPtr ring;  // (z, u0, u1, u2)
    std::vector<MultiPoly> generators;
};

// J = < f1, f2, f3, z*u0*u1*u2 - 1 >; the z generator removes solutions
// with any vanishing coordinate.
Ideal saturated_ideal(const EinsteinSystem& system);

RingPtr saturation_ring();  // (z, u0, u1, u2)

struct BuchbergerOptions {
    size_t term_ceiling = 2'000'000;  // total stored terms before aborting
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> elements;  // reduced, monic, sorted by leading monomial ascending
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& opts = {});

// checks the defining property: every S-polynomial reduces to zero
bool is_groebner(const GroebnerBasis& gb);

// The unique basis element involving only the order's least variable,
// primitive with positive leading coefficient.
UniPoly eliminant(const GroebnerBasis& gb);

enum class KnownFactor { jensen_quadratic, u1_minus_1, u0_minus_1 };

struct BackSubRelations {
    // b*u0 - X(u1) and c*u2 - Y(u1), valid modulo the F-branch
    // (reduced mod F); b, c nonzero, deg X, deg Y <= 7 generically.
    Rational b;
    UniPoly X;
    Rational c;
    UniPoly Y;
    // the ideal-level u0 tail (b*u0 = raw_u0_tail(u1) on all of V(J));
    // satisfies raw_u0_tail(1) = b, the Jensen consistency
    UniPoly raw_u0_tail;
    // the leading-u2^2 basis element specialized at u1 = 1; proportional
    // to the Jensen quadratic when the basis is consistent
    std::optional<UniPoly> u2_quadratic_at_u1_1;
};

struct EliminationResult {
    UniPoly eliminant;
    UniPoly known_factor;
    UniPoly cofactor;  // eliminant / known_factor, primitive, positive lc
    std::optional<BackSubRelations> relations;
};

// Removes the named factor by exact division (never factorization).
// Throws FactorDoesNotDivideError when it does not divide.
EliminationResult split_known_factor(const UniPoly& e, int n, int p, KnownFactor which);

// Requires the lex z>u0>u2>u1 basis. Throws RelationNotFoundError with a
// dump of the basis leading-term shapes when the expected elements are
// missing.
BackSubRelations back_substitution(const GroebnerBasis& gb, int n, int p);

// How a computed cofactor compares against a transcribed golden
// polynomial: exact proportionality, or equality after accounting for
// repeated factors of the golden polynomial (gcd-detected), or neither.
struct GoldenMatch {
    bool strict = false;
    bool up_to_multiplicity = false;
    UniPoly extra;  // golden / cofactor when up_to_multiplicity
};
GoldenMatch match_golden(const UniPoly& cofactor, const UniPoly& golden);

}  // namespace stiefel
