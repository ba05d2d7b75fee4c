// Matrix model of so(n): the basis e_ab = E_ab - E_ba, the Lie bracket,
// the Killing form B(X,Y) = (n-2) tr XY, and the orthogonal decomposition
//   so(n) = h_iso + m0 + m1 + m2 + m3
// attached to K = U(p) x SO(n-2p), where u(p) sits inside so(2p) as the
// centralizer of the complex structure J = sum_i e_{2i-1,2i}.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stiefel/rational.hpp"

namespace stiefel {

struct BasisIndex {
    int a, b;  // 1 <= a < b <= n
    auto operator<=>(const BasisIndex&) const = default;
};

class SkewElement {
public:
    explicit SkewElement(int n);
    // e_ab with sign convention e_ba = -e_ab; a == b is rejected
    static SkewElement basis(int n, int a, int b);

    int n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<BasisIndex, Rational>& terms() const { return c_; }
    Rational coeff(int a, int b) const;  // signed lookup

    SkewElement& add_scaled(const SkewElement& o, const Rational& s);
    friend SkewElement operator+(const SkewElement& x, const SkewElement& y);
    friend SkewElement operator-(const SkewElement& x, const SkewElement& y);
    friend SkewElement operator*(const Rational& s, const SkewElement& x);
    bool operator==(const SkewElement& o) const = default;

private:
    int n_;
    std::map<BasisIndex, Rational> c_;  // no zero coefficients
};

SkewElement bracket(const SkewElement& x, const SkewElement& y);
Rational trace_product(const SkewElement& x, const SkewElement& y);  // tr(xy)
Rational killing(const SkewElement& x, const SkewElement& y);        // (n-2) tr(xy); n >= 3
inline Rational minus_B(const SkewElement& x, const SkewElement& y) { return -killing(x, y); }

struct Decomposition {
    int n = 0, p = 0;
    std::vector<SkewElement> m0, m1, m2, m3;  // tangent summands, (-B)-orthogonal bases
    std::vector<SkewElement> h_iso;           // so(n-2p) block

    const std::vector<SkewElement>& module(int i) const;
    std::array<int, 4> dims() const {
        return {static_cast<int>(m0.size()), static_cast<int>(m1.size()), static_cast<int>(m2.size()),
                static_cast<int>(m3.size())};
    }
};

// requires p >= 2 and n - 2p >= 1
Decomposition build_decomposition(int n, int p);

struct RelationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Verifies relation (9) on tangent projections: [m2,m2] has no m2
// component, [m3,m3] has no m2 or m3 component, [m2,m3] lies in m2; and
// that each summand is invariant under k = u(p) + so(n-2p).
RelationReport check_module_relations(const Decomposition& dec);

}  // namespace stiefel
