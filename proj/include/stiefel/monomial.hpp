// Polynomial rings are a fixed ordered variable list; monomials are
// fixed-capacity exponent vectors over that list. The only term order in
// play is lexicographic with an explicit variable permutation (greatest
// first), which is what elimination needs.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stiefel/errors.hpp"

namespace stiefel {

class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty() || vars_.size() > 8) throw InvalidArgumentError("ring must have 1..8 variables");
    }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    int index_of(std::string_view name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars_[static_cast<size_t>(i)] == name) return i;
        throw InvalidArgumentError("unknown variable: " + std::string(name));
    }
    bool operator==(const Ring& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) { return std::make_shared<const Ring>(std::move(vars)); }
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Monomial {
    static constexpr int kMaxVars = 8;
    std::array<uint16_t, kMaxVars> exp{};
    int nvars = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.nvars = nvars;
        return m;
    }
    static Monomial var(int nvars, int i, uint16_t e = 1) {
        Monomial m = one(nvars);
        m.exp[static_cast<size_t>(i)] = e;
        return m;
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += exp[static_cast<size_t>(i)];
        return d;
    }
    bool is_one() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(exp[static_cast<size_t>(i)] + o.exp[static_cast<size_t>(i)]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (exp[static_cast<size_t>(i)] > o.exp[static_cast<size_t>(i)]) return false;
        return true;
    }
    // this / o; caller guarantees divisibility
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(exp[static_cast<size_t>(i)] - o.exp[static_cast<size_t>(i)]);
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.nvars; ++i)
            r.exp[static_cast<size_t>(i)] = std::max(a.exp[static_cast<size_t>(i)], b.exp[static_cast<size_t>(i)]);
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.nvars; ++i)
            r.exp[static_cast<size_t>(i)] = std::min(a.exp[static_cast<size_t>(i)], b.exp[static_cast<size_t>(i)]);
        return r;
    }
    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (exp[static_cast<size_t>(i)] && o.exp[static_cast<size_t>(i)]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return nvars == o.nvars && exp == o.exp; }
    // canonical (storage) order: plain lex on the ring's natural variable order
    auto operator<=>(const Monomial& o) const { return exp <=> o.exp; }
};

// Lexicographic order with an explicit permutation of the ring's
// variables, greatest to least. The permutation must be a bijection.
class MonomialOrder {
public:
    MonomialOrder(RingPtr ring, std::vector<int> greatest_to_least)
        : ring_(std::move(ring)), perm_(std::move(greatest_to_least)) {
        const int n = ring_->nvars();
        if (static_cast<int>(perm_.size()) != n) throw InvalidArgumentError("order permutation size mismatch");
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int i : perm_) {
            if (i < 0 || i >= n || seen[static_cast<size_t>(i)]) throw InvalidArgumentError("order permutation is not a bijection");
            seen[static_cast<size_t>(i)] = true;
        }
    }

    static MonomialOrder lex(const RingPtr& ring, const std::vector<std::string>& names_greatest_first) {
        std::vector<int> perm;
        perm.reserve(names_greatest_first.size());
        for (const auto& v : names_greatest_first) perm.push_back(ring->index_of(v));
        return MonomialOrder(ring, std::move(perm));
    }
    // natural order: first ring variable greatest
    static MonomialOrder lex(const RingPtr& ring) {
        std::vector<int> perm(static_cast<size_t>(ring->nvars()));
        for (int i = 0; i < ring->nvars(); ++i) perm[static_cast<size_t>(i)] = i;
        return MonomialOrder(ring, std::move(perm));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<int>& permutation() const { return perm_; }
    int least_variable() const { return perm_.back(); }

    // -1 if a < b, 0 if equal, +1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        for (int i : perm_) {
            const auto ea = a.exp[static_cast<size_t>(i)], eb = b.exp[static_cast<size_t>(i)];
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
    RingPtr ring_;
    std::vector<int> perm_;
};

}  // namespace stiefel
