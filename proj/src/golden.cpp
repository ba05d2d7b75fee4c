#include "stiefel/golden.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

// recursive-descent parser for the golden expression grammar
class ExprParser {
public:
    ExprParser(std::string_view s, const Int& n, const Int& p) : s_(s), n_(n), p_(p) {}

    Int parse() {
        Int v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    Int expr() {
        Int v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }
    Int term() {
        Int v = unary();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= unary();
            } else {
                return v;
            }
        }
    }
    Int unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        return power();
    }
    Int power() {
        Int base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = 0;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be an integer literal");
            while (std::isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + static_cast<unsigned long>(peek_advance() - '0');
            Int r;
            mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
            return r;
        }
        return base;
    }
    Int atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Int v = expr();
            skip_ws();
            if (peek() != ')') fail("expected )");
            ++pos_;
            return v;
        }
        if (c == 'n') {
            ++pos_;
            return n_;
        }
        if (c == 'p') {
            ++pos_;
            return p_;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return Int(std::string(s_.substr(start, pos_ - start)), 10);
        }
        fail("unexpected character");
        return Int(0);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char peek_advance() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgumentError("golden expression parse error at offset " + std::to_string(pos_) + ": " + why +
                                   " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    size_t pos_ = 0;
    Int n_, p_;
};

}  // namespace

Int eval_int_expr(std::string_view expr, const Int& n, const Int& p) { return ExprParser(expr, n, p).parse(); }

GoldenData GoldenData::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot open golden data file: " + path);
    GoldenData gd;
    std::string line;
    GoldenRecord* cur = nullptr;
    size_t expected = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (line.compare(first, 5, "poly ") == 0) {
            std::string kw, name, var;
            size_t count = 0;
            ls >> kw >> name >> var >> count;
            if (!ls || count == 0) throw InvalidArgumentError("bad golden record header: " + line);
            cur = &gd.records_[name];
            cur->name = name;
            cur->variable = var;
            cur->coeff_exprs.assign(count, "");
            expected = count;
        } else {
            if (!cur) throw InvalidArgumentError("golden coefficient before any record header");
            size_t deg = 0;
            ls >> deg;
            std::string rest;
            std::getline(ls, rest);
            if (!ls || deg >= expected) throw InvalidArgumentError("bad golden coefficient line: " + line);
            cur->coeff_exprs[deg] = rest;
        }
    }
    for (const auto& [name, rec] : gd.records_)
        for (const auto& e : rec.coeff_exprs)
            if (e.empty()) throw InvalidArgumentError("golden record " + name + " has a missing coefficient");
    return gd;
}

const GoldenData& GoldenData::builtin() {
    static const GoldenData gd = GoldenData::load(std::string(STIEFEL_GOLDEN_DATA_DIR) + "/golden_polys.txt");
    return gd;
}

const GoldenRecord& GoldenData::record(const std::string& name) const {
    auto it = records_.find(name);
    if (it == records_.end()) throw InvalidArgumentError("no golden record named " + name);
    return it->second;
}

UniPoly GoldenData::specialize(const std::string& name, int n, int p) const {
    const GoldenRecord& rec = record(name);
    std::vector<Rational> c;
    c.reserve(rec.coeff_exprs.size());
    for (const auto& e : rec.coeff_exprs) c.emplace_back(eval_int_expr(e, Int(n), Int(p)));
    return UniPoly(rec.variable, std::move(c));
}

UniPoly GoldenData::specialize_primitive(const std::string& name, int n, int p) const {
    return specialize(name, n, p).primitive_positive();
}

Int GoldenData::scalar(const std::string& name, int n, int p) const {
    const GoldenRecord& rec = record(name);
    if (rec.coeff_exprs.size() != 1) throw InvalidArgumentError("golden record " + name + " is not a scalar");
    return eval_int_expr(rec.coeff_exprs[0], Int(n), Int(p));
}

UniPoly golden_G(int n, int p) { return GoldenData::builtin().specialize("G", n, p); }
UniPoly golden_F(int n, int p) { return GoldenData::builtin().specialize("F", n, p); }
UniPoly jensen_quadratic(int n, int p) { return GoldenData::builtin().specialize("jensen", n, p); }
Int golden_a8(int n, int p) { return GoldenData::builtin().scalar("a8", n, p); }

Int jensen_discriminant(int n, int p) {
    return Int(4) * Int(n - 2) * Int(n - 2) - Int(8) * Int(p - 1) * Int(n - 1);
}

}  // namespace stiefel
