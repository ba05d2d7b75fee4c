// Sparse multivariate polynomials over Q. Terms are kept in a canonical
// sorted vector (ascending under the ring's natural lex), so equal
// polynomials have identical term lists; order-dependent views are
// produced on demand for the active MonomialOrder.
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stiefel/monomial.hpp"
#include "stiefel/rational.hpp"

namespace stiefel {

class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, Rational c);
    static MultiPoly variable(const RingPtr& ring, std::string_view name);
    static MultiPoly monomial(RingPtr ring, Monomial m, Rational c);
    // normalizes: merges duplicates, drops zeros, sorts canonically
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const;         // -1 for zero
    int degree_in(int var) const;
    bool involves(int var) const;
    // true when every term's support is contained in {var}
    bool is_univariate_in(int var) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

    Term leading_term(const MonomialOrder& order) const;  // requires nonzero
    std::vector<Term> sorted_terms_desc(const MonomialOrder& order) const;

    // positive rational c with (1/c)*this integer-coefficient and primitive
    Rational content() const;  // requires nonzero
    // divide by signed content so coefficients are coprime integers and the
    // leading coefficient under `order` is positive
    MultiPoly primitive_positive(const MonomialOrder& order) const;
    // largest monomial dividing every term (for saturation-style stripping)
    Monomial monomial_content() const;  // requires nonzero
    MultiPoly divide_by_monomial(const Monomial& m) const;

    Rational eval(std::span<const Rational> point) const;
    // variable i is replaced by images[i], which live in `target`
    MultiPoly substitute(const RingPtr& target, std::span<const MultiPoly> images) const;

    std::string str() const;

private:
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    void assert_same_ring(const MultiPoly& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;  // canonical ascending, no zero coefficients
};

// Exact quotient a/b. Throws DivisionNotExactError (message carries the
// remainder's leading term) when b does not divide a.
MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b);

// Normal form of f modulo `basis` under `order`: no term of the result is
// divisible by any basis leading term, and f - result lies in the ideal
// generated by basis. Total; deterministic (first matching reducer wins).
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);

}  // namespace stiefel
