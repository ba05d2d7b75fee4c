#include "stiefel/son_model.hpp"

#include <array>
#include <sstream>

#include "stiefel/errors.hpp"

namespace stiefel {

SkewElement::SkewElement(int n) : n_(n) {
    if (n < 2) throw InvalidArgumentError("so(n) needs n >= 2");
}

SkewElement SkewElement::basis(int n, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) throw InvalidArgumentError("bad basis index e_ab");
    SkewElement x(n);
    if (a < b) x.c_[{a, b}] = 1;
    else x.c_[{b, a}] = -1;
    return x;
}

Rational SkewElement::coeff(int a, int b) const {
    if (a == b) return Rational(0);
    const bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = c_.find({a, b});
    if (it == c_.end()) return Rational(0);
    return flip ? Rational(-it->second) : it->second;
}

SkewElement& SkewElement::add_scaled(const SkewElement& o, const Rational& s) {
    if (n_ != o.n_) throw DimensionMismatchError("so(n) elements of different n");
    if (s == 0) return *this;
    for (const auto& [k, v] : o.c_) {
        auto [it, fresh] = c_.emplace(k, s * v);
        if (!fresh) {
            it->second += s * v;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

SkewElement operator+(const SkewElement& x, const SkewElement& y) {
    SkewElement r = x;
    return r.add_scaled(y, Rational(1));
}
SkewElement operator-(const SkewElement& x, const SkewElement& y) {
    SkewElement r = x;
    return r.add_scaled(y, Rational(-1));
}
SkewElement operator*(const Rational& s, const SkewElement& x) {
    SkewElement r(x.n());
    return r.add_scaled(x, s);
}

SkewElement bracket(const SkewElement& x, const SkewElement& y) {
    if (x.n() != y.n()) throw DimensionMismatchError("bracket of so(n) elements with different n");
    SkewElement out(x.n());
    // [e_ab, e_cd] = d_bc e_ad + d_ad e_bc - d_ac e_bd - d_bd e_ac
    for (const auto& [ij, cx] : x.terms()) {
        for (const auto& [kl, cy] : y.terms()) {
            const int a = ij.a, b = ij.b, c = kl.a, d = kl.b;
            const Rational s = cx * cy;
            if (b == c && a != d) out.add_scaled(SkewElement::basis(x.n(), a, d), s);
            if (a == d && b != c) out.add_scaled(SkewElement::basis(x.n(), b, c), s);
            if (a == c && b != d) out.add_scaled(SkewElement::basis(x.n(), b, d), -s);
            if (b == d && a != c) out.add_scaled(SkewElement::basis(x.n(), a, c), -s);
        }
    }
    return out;
}

Rational trace_product(const SkewElement& x, const SkewElement& y) {
    if (x.n() != y.n()) throw DimensionMismatchError("trace of so(n) elements with different n");
    // tr(e_ab e_cd) = -2 for identical index pairs, 0 otherwise
    Rational s(0);
    const auto& xs = x.terms();
    const auto& ys = y.terms();
    const auto& small = xs.size() <= ys.size() ? xs : ys;
    const auto& large = xs.size() <= ys.size() ? ys : xs;
    for (const auto& [k, v] : small) {
        auto it = large.find(k);
        if (it != large.end()) s += v * it->second;
    }
    return Rational(-2) * s;
}

Rational killing(const SkewElement& x, const SkewElement& y) {
    if (x.n() < 3) throw InvalidArgumentError("Killing form normalization needs n >= 3");
    return Rational(x.n() - 2) * trace_product(x, y);
}

const std::vector<SkewElement>& Decomposition::module(int i) const {
    switch (i) {
        case 0: return m0;
        case 1: return m1;
        case 2: return m2;
        case 3: return m3;
        default: throw InvalidArgumentError("module index out of range");
    }
}

Decomposition build_decomposition(int n, int p) {
    if (p < 2 || n - 2 * p < 1) throw InvalidArgumentError("build_decomposition requires p >= 2 and n - 2p >= 1");
    Decomposition dec;
    dec.n = n;
    dec.p = p;

    // m0: the center of u(p), spanned by J
    SkewElement J(n);
    for (int i = 1; i <= p; ++i) J.add_scaled(SkewElement::basis(n, 2 * i - 1, 2 * i), Rational(1));
    dec.m0.push_back(J);

    // u(p) generators inside so(2p): the diagonal rotations and, for each
    // i < j, the pair e_{2i-1,2j-1}+e_{2i,2j}, e_{2i-1,2j}-e_{2i,2j-1}
    std::vector<SkewElement> gens;
    for (int i = 1; i <= p; ++i) gens.push_back(SkewElement::basis(n, 2 * i - 1, 2 * i));
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            gens.push_back(SkewElement::basis(n, 2 * i - 1, 2 * j - 1) + SkewElement::basis(n, 2 * i, 2 * j));
            gens.push_back(SkewElement::basis(n, 2 * i - 1, 2 * j) - SkewElement::basis(n, 2 * i, 2 * j - 1));
        }

    // m1: Gram-Schmidt (no normalization, exact) of the generators against
    // J; norms squared stay rational so the whole basis stays in Q
    std::vector<SkewElement> ortho{J};
    for (const auto& g : gens) {
        SkewElement v = g;
        for (const auto& b : ortho) {
            Rational num = minus_B(g, b), den = minus_B(b, b);
            if (num != 0) v.add_scaled(b, -num / den);
        }
        if (!v.is_zero()) ortho.push_back(v);
    }
    dec.m1.assign(ortho.begin() + 1, ortho.end());

    // m2: the off-diagonal block
    for (int a = 1; a <= 2 * p; ++a)
        for (int b = 2 * p + 1; b <= n; ++b) dec.m2.push_back(SkewElement::basis(n, a, b));

    // m3: so(2p) minus u(p)
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            dec.m3.push_back(SkewElement::basis(n, 2 * i - 1, 2 * j - 1) - SkewElement::basis(n, 2 * i, 2 * j));
            dec.m3.push_back(SkewElement::basis(n, 2 * i - 1, 2 * j) + SkewElement::basis(n, 2 * i, 2 * j - 1));
        }

    // h_iso: so(n-2p)
    for (int a = 2 * p + 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) dec.h_iso.push_back(SkewElement::basis(n, a, b));

    const auto d = dec.dims();
    if (d[0] != 1 || d[1] != p * p - 1 || d[2] != 2 * p * (n - 2 * p) || d[3] != p * (p - 1))
        throw Error("decomposition dimensions disagree with d0=1, d1=p^2-1, d2=2p(n-2p), d3=p(p-1)");
    return dec;
}

namespace {

// component of v in the span of an orthogonal module basis
bool has_component(const SkewElement& v, const std::vector<SkewElement>& mod) {
    for (const auto& b : mod)
        if (minus_B(v, b) != 0) return true;
    return false;
}

}  // namespace

RelationReport check_module_relations(const Decomposition& dec) {
    RelationReport rep;
    auto complain = [&](const std::string& what) {
        rep.ok = false;
        rep.violations.push_back(what);
    };
    auto check_pair = [&](const std::vector<SkewElement>& A, const std::vector<SkewElement>& B,
                          const std::vector<int>& forbidden, const std::string& label) {
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) {
                SkewElement br = bracket(A[i], B[j]);
                if (br.is_zero()) continue;
                for (int k : forbidden)
                    if (has_component(br, dec.module(k))) {
                        std::ostringstream os;
                        os << label << ": bracket of basis vectors (" << i << "," << j << ") has a nonzero m" << k
                           << " component";
                        complain(os.str());
                    }
            }
    };

    // relation (9), read on tangent projections
    check_pair(dec.m2, dec.m2, {2}, "[m2,m2] within m0+m1+m3");
    check_pair(dec.m3, dec.m3, {2, 3}, "[m3,m3] within m0+m1");
    check_pair(dec.m2, dec.m3, {0, 1, 3}, "[m2,m3] within m2");

    // Ad(K)-invariance: [k, m_i] inside m_i for k = u(p) + so(n-2p)
    std::vector<SkewElement> k_basis;
    k_basis.insert(k_basis.end(), dec.m0.begin(), dec.m0.end());
    k_basis.insert(k_basis.end(), dec.m1.begin(), dec.m1.end());
    k_basis.insert(k_basis.end(), dec.h_iso.begin(), dec.h_iso.end());
    for (int i = 0; i <= 3; ++i) {
        std::vector<int> forbidden;
        for (int k = 0; k <= 3; ++k)
            if (k != i) forbidden.push_back(k);
        check_pair(k_basis, dec.module(i), forbidden, "[k,m" + std::to_string(i) + "] within m" + std::to_string(i));
        // the h component must vanish too, except for [h, m0+m1] where
        // there is none anyway; verify across the board
        for (size_t a = 0; a < k_basis.size(); ++a)
            for (size_t b = 0; b < dec.module(i).size(); ++b) {
                SkewElement br = bracket(k_basis[a], dec.module(i)[b]);
                if (!br.is_zero() && has_component(br, dec.h_iso))
                    complain("[k,m" + std::to_string(i) + "]: bracket has a nonzero h component");
            }
    }
    return rep;
}

}  // namespace stiefel
