#include "stiefel/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "stiefel/errors.hpp"

namespace stiefel {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::lc() const {
    if (is_zero()) throw ZeroPolynomialError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational s(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * c_[k]);
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(a.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.var_);
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.var_, std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c == 0) return UniPoly::zero(a.var_);
    UniPoly r = a;
    for (auto& cc : r.c_) cc *= c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomialError("univariate division by zero");
    UniPoly q = UniPoly::zero(a.var_), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const Rational c = r.lc() / b.lc();
        std::vector<Rational> t(static_cast<size_t>(k) + 1, Rational(0));
        t.back() = c;
        UniPoly shift(a.var_, std::move(t));
        q = q + shift;
        r = r - shift * b;
    }
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DivisionNotExactError("univariate division not exact; remainder degree " + std::to_string(r.degree()));
    return q;
}

Rational UniPoly::content() const {
    if (is_zero()) throw ZeroPolynomialError("content of zero polynomial");
    Int g = 0, l = 1;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(g, l);
}

UniPoly UniPoly::primitive_positive() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (sign(lc()) < 0) c = -c;
    UniPoly r = *this;
    for (auto& cc : r.c_) cc /= c;
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return make_rational(1, 1) / lc() * *this;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || k == 0) os << (a.get_den() == 1 ? a.get_num().get_str() : a.get_num().get_str() + "/" + a.get_den().get_str());
        if (k > 0) {
            if (a != 1) os << "*";
            os << var_;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    // primitive Euclidean remainder sequence; content stripped each step
    UniPoly f = a.primitive_positive(), g = b.primitive_positive();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = UniPoly::divmod(f, g).second;
        f = g;
        g = r.is_zero() ? r : r.primitive_positive();
    }
    return f.degree() == 0 ? UniPoly::constant(a.variable(), Rational(1)) : f;
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree part of zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(f.variable(), Rational(1));
    UniPoly g = gcd(f, f.derivative());
    return UniPoly::exact_div(f, g).primitive_positive();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree decomposition of zero polynomial");
    std::vector<UniPoly> out;
    if (f.degree() == 0) return out;
    // Yun's algorithm
    UniPoly fp = f.primitive_positive();
    UniPoly a = gcd(fp, fp.derivative());
    UniPoly b = UniPoly::exact_div(fp, a);
    UniPoly c = UniPoly::exact_div(fp.derivative(), a);
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        out.push_back(g);
        b = UniPoly::exact_div(b, g);
        c = UniPoly::exact_div(d, g);
        d = c - b.derivative();
    }
    return out;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("Sturm sequence of zero polynomial");
    std::vector<UniPoly> chain;
    chain.push_back(f.primitive_positive());
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative().primitive_positive());
    while (chain.back().degree() > 0) {
        UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // scale by 1/content only: positive factors leave variations intact
        UniPoly nr = -r;
        chain.push_back(make_rational(1, 1) / nr.content() * nr);
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_variations(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool at_minus_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& g : chain) {
        if (x) {
            signs.push_back(sign(g.eval(*x)));
        } else if (g.is_zero()) {
            signs.push_back(0);
        } else {
            int s = sign(g.lc());
            if (at_minus_inf && (g.degree() % 2 == 1)) s = -s;
            signs.push_back(s);
        }
    }
    return variations(signs);
}

int count_real_roots(const UniPoly& f, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (f.is_zero()) throw ZeroPolynomialError("root count of zero polynomial");
    if (f.degree() == 0) return 0;
    if (lo && hi && *lo >= *hi) return 0;
    UniPoly g = squarefree_part(f);
    if (g.degree() == 0) return 0;
    auto chain = sturm_sequence(g);
    // V is right-continuous, so V(a)-V(b) counts roots in (a, b]; drop b
    // itself when it is a root to get the open interval.
    int va = sturm_variations(chain, lo, /*at_minus_inf=*/true);
    int vb = sturm_variations(chain, hi, /*at_minus_inf=*/false);
    int n = va - vb;
    if (hi && g.eval(*hi) == 0) --n;
    return n;
}

Rational cauchy_root_bound(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return Rational(1);
    Rational m(0);
    for (int k = 0; k < f.degree(); ++k) m = std::max(m, Rational(abs(f.coeff(k) / f.lc())));
    return m + 1;
}

UniPoly unipoly_from(const MultiPoly& p, std::string_view var) {
    const int vi = p.ring()->index_of(var);
    if (!p.is_univariate_in(vi)) throw InvalidArgumentError("polynomial is not univariate in " + std::string(var));
    std::vector<Rational> c(static_cast<size_t>(std::max(p.degree_in(vi), 0)) + 1, Rational(0));
    for (const auto& [m, coeff] : p.terms()) c[m.exp[static_cast<size_t>(vi)]] = coeff;
    return UniPoly(std::string(var), std::move(c));
}

MultiPoly to_multipoly(const UniPoly& p, const RingPtr& ring) {
    const int vi = ring->index_of(p.variable());
    std::vector<MultiPoly::Term> terms;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) terms.emplace_back(Monomial::var(ring->nvars(), vi, static_cast<uint16_t>(k)), p.coeff(k));
    return MultiPoly::from_terms(ring, std::move(terms));
}

}  // namespace stiefel
