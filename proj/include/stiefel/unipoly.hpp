// Dense univariate polynomials over Q: division, gcd, squarefree
// decomposition and Sturm sequences. These carry all eliminant work, so
// everything here is exact.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stiefel/multipoly.hpp"
#include "stiefel/rational.hpp"

namespace stiefel {

class UniPoly {
public:
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    // coefficients from degree 0 upward; trailing zeros trimmed
    UniPoly(std::string var, std::vector<Rational> coeffs);

    static UniPoly zero(std::string var) { return UniPoly(std::move(var)); }
    static UniPoly constant(std::string var, Rational c) { return UniPoly(std::move(var), {std::move(c)}); }

    const std::string& variable() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Rational(0); }
    const Rational& lc() const;  // requires nonzero

    Rational eval(const Rational& x) const;  // Horner
    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    bool operator==(const UniPoly& o) const { return var_ == o.var_ && c_ == o.c_; }

    // field division over Q; b nonzero
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // throws DivisionNotExactError when the remainder is nonzero
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

    Rational content() const;            // positive; requires nonzero
    UniPoly primitive_positive() const;  // integer coprime coefficients, lc > 0
    UniPoly monic() const;

    std::string str() const;

private:
    void trim();
    std::string var_;
    std::vector<Rational> c_;
};

// primitive positive-lc gcd
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Product of the distinct irreducible factors (primitive, positive lc):
// divides f and has the same real roots. Throws on the zero polynomial.
UniPoly squarefree_part(const UniPoly& f);

// Yun decomposition: returns g_1, g_2, ... with f ~ prod g_i^i up to a
// constant; each g_i primitive with positive lc (possibly constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

// Canonical Sturm chain of f (f assumed squarefree per the callers; the
// chain is the negated-remainder sequence, each member scaled primitive
// which leaves all sign variations unchanged). Throws on zero input.
std::vector<UniPoly> sturm_sequence(const UniPoly& f);

// Number of sign variations of the chain at x, or at -inf/+inf when x is
// empty (signs taken from leading terms).
int sturm_variations(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool at_minus_inf);

// Distinct real roots of f in the open interval (lo, hi); unset endpoints
// mean -inf / +inf. Counts via the Sturm chain of the squarefree part.
int count_real_roots(const UniPoly& f, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

// All real roots of f lie in (-B, B)
Rational cauchy_root_bound(const UniPoly& f);

// view of a MultiPoly that is univariate in `var`
UniPoly unipoly_from(const MultiPoly& p, std::string_view var);
MultiPoly to_multipoly(const UniPoly& p, const RingPtr& ring);

}  // namespace stiefel
