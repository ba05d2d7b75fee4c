#include "stiefel/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stiefel {

void MultiPoly::assert_same_ring(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw InvalidArgumentError("polynomials from different rings");
}

MultiPoly MultiPoly::constant(RingPtr ring, Rational c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.emplace_back(Monomial::one(p.ring_->nvars()), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
    return monomial(ring, Monomial::var(ring->nvars(), ring->index_of(name)), Rational(1));
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, Rational c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, Rational> acc;
    for (auto& [m, c] : terms) {
        if (m.nvars != ring->nvars()) throw InvalidArgumentError("monomial width mismatch");
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh) it->second += c;
    }
    MultiPoly p(std::move(ring));
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
}

Rational MultiPoly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw InvalidArgumentError("not a constant polynomial");
    return terms_[0].second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[static_cast<size_t>(var)]));
    return is_zero() ? -1 : d;
}

bool MultiPoly::involves(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.exp[static_cast<size_t>(var)]) return true;
    return false;
}

bool MultiPoly::is_univariate_in(int var) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < m.nvars; ++i)
            if (i != var && m.exp[static_cast<size_t>(i)]) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.assert_same_ring(b);
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first == ib->first) {
            Rational c = ia->second + ib->second;
            if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            r.terms_.push_back(*ia++);
        } else {
            r.terms_.push_back(*ib++);
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.assert_same_ring(b);
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, fresh] = acc.emplace(ma * mb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    MultiPoly r(a.ring_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
    MultiPoly r(a.ring());
    if (c == 0) return r;
    r = a;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(ring_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly::Term MultiPoly::leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw ZeroPolynomialError("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.less(best->first, t.first)) best = &t;
    return *best;
}

std::vector<MultiPoly::Term> MultiPoly::sorted_terms_desc(const MonomialOrder& order) const {
    std::vector<Term> v = terms_;
    std::sort(v.begin(), v.end(), [&](const Term& x, const Term& y) { return order.less(y.first, x.first); });
    return v;
}

Rational MultiPoly::content() const {
    if (is_zero()) throw ZeroPolynomialError("content of zero polynomial");
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(g, l);
}

MultiPoly MultiPoly::primitive_positive(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    Rational c = content();
    if (sign(leading_term(order).second) < 0) c = -c;
    MultiPoly r = *this;
    for (auto& [m, cc] : r.terms_) cc /= c;
    return r;
}

Monomial MultiPoly::monomial_content() const {
    if (is_zero()) throw ZeroPolynomialError("monomial content of zero polynomial");
    Monomial g = terms_[0].first;
    for (const auto& [m, c] : terms_) g = gcd(g, m);
    return g;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial& m) const {
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, c] : terms_) {
        if (!m.divides(mm)) throw DivisionNotExactError("monomial does not divide term");
        r.terms_.emplace_back(mm / m, c);
    }
    return r;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != ring_->nvars()) throw InvalidArgumentError("evaluation point size mismatch");
    Rational s(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.nvars; ++i)
            for (uint16_t k = 0; k < m.exp[static_cast<size_t>(i)]; ++k) t *= point[static_cast<size_t>(i)];
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::substitute(const RingPtr& target, std::span<const MultiPoly> images) const {
    if (static_cast<int>(images.size()) != ring_->nvars()) throw InvalidArgumentError("substitute: image count mismatch");
    MultiPoly r = MultiPoly::zero(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (int i = 0; i < m.nvars; ++i)
            if (m.exp[static_cast<size_t>(i)]) t = t * images[static_cast<size_t>(i)].pow(m.exp[static_cast<size_t>(i)]);
        r = r + t;
    }
    return r;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool printed_coeff = false;
        if (a != 1 || m.is_one()) {
            os << (a.get_den() == 1 ? a.get_num().get_str() : a.get_num().get_str() + "/" + a.get_den().get_str());
            printed_coeff = true;
        }
        for (int i = 0; i < m.nvars; ++i)
            if (auto e = m.exp[static_cast<size_t>(i)]) {
                if (printed_coeff) os << "*";
                os << ring_->vars()[static_cast<size_t>(i)];
                if (e > 1) os << "^" << e;
                printed_coeff = true;
            }
    }
    return os.str();
}

namespace {

std::string term_str(const Ring& ring, const MultiPoly::Term& t) {
    std::ostringstream os;
    os << t.second.get_num().get_str();
    if (t.second.get_den() != 1) os << "/" << t.second.get_den().get_str();
    for (int i = 0; i < t.first.nvars; ++i)
        if (auto e = t.first.exp[static_cast<size_t>(i)]) {
            os << "*" << ring.vars()[static_cast<size_t>(i)];
            if (e > 1) os << "^" << e;
        }
    return os.str();
}

}  // namespace

MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (!same_ring(a.ring(), b.ring())) throw InvalidArgumentError("exact division across rings");
    if (b.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
    const MonomialOrder order = MonomialOrder::lex(a.ring());
    MultiPoly q = MultiPoly::zero(a.ring());
    MultiPoly w = a;
    const auto [lb, cb] = b.leading_term(order);
    while (!w.is_zero()) {
        const auto [lw, cw] = w.leading_term(order);
        if (!lb.divides(lw))
            throw DivisionNotExactError("division not exact; remainder leading term: " + term_str(*a.ring(), {lw, cw}));
        MultiPoly t = MultiPoly::monomial(a.ring(), lw / lb, cw / cb);
        q = q + t;
        w = w - t * b;
    }
    return q;
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
    for (const auto& g : basis)
        if (!same_ring(f.ring(), g.ring())) throw InvalidArgumentError("reduce across rings");
    std::vector<MultiPoly::Term> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) throw ZeroPolynomialError("zero polynomial in reduction basis");
        lts.push_back(g.leading_term(order));
    }

    MultiPoly r = MultiPoly::zero(f.ring());
    MultiPoly w = f;
    while (!w.is_zero()) {
        const auto [lw, cw] = w.leading_term(order);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (lts[i].first.divides(lw)) {
                MultiPoly t = MultiPoly::monomial(f.ring(), lw / lts[i].first, cw / lts[i].second);
                w = w - t * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::monomial(f.ring(), lw, cw);
            r = r + t;
            w = w - t;
        }
    }
    return r;
}

}  // namespace stiefel
