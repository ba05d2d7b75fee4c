// Exact arbitrary-precision integers and rationals (GMP-backed) plus the
// parsing/printing helpers used by the CLI and the report writers.
// Invariants of mpq_class match the spec's BigRational: always canonical
// (reduced, positive denominator); arithmetic never rounds.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stiefel {

using Int = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// num/den with any signs; canonicalizes. den == 0 is an error.
Rational make_rational(const Int& num, const Int& den);

// Accepts "a/b", integers, plain decimals ("0.25") and scientific
// notation ("1e-40", "2.5e3"). Everything is converted exactly.
Rational parse_rational(std::string_view text);

// "num/den" (denominator printed even when 1, so the format is uniform).
std::string rational_string(const Rational& q);

// Fixed-point rendering with `digits` digits after the point, truncated
// toward zero. Presentation only; never used in certification paths.
std::string decimal_string(const Rational& q, int digits = 30);

Rational pow10(long e);  // 10^e for e of either sign

}  // namespace stiefel
