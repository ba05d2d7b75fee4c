#include "stiefel/rational.hpp"

#include <cctype>

#include "stiefel/errors.hpp"

namespace stiefel {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidArgumentError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow10(long e) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(t) : make_rational(1, t);
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidArgumentError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw InvalidArgumentError("bad rational literal: " + s);
        return make_rational(num, den);
    }

    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw InvalidArgumentError("bad exponent in rational literal: " + s);
        }
        s = s.substr(0, epos);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s = digits;
    }
    if (s.empty() || s == "-" || s == "+") throw InvalidArgumentError("bad rational literal: " + std::string(text));

    Int mant;
    if (mant.set_str(s, 10) != 0) throw InvalidArgumentError("bad rational literal: " + std::string(text));
    return Rational(mant) * pow10(exp10);
}

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Int num = q.get_num(), den = q.get_den();
    std::string out;
    if (sgn(num) < 0) {
        out += '-';
        num = -num;
    }
    Int ip = num / den, rem = num % den;
    out += ip.get_str();
    if (digits == 0) return out;
    out += '.';
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int frac = (rem * scale) / den;
    std::string fs = frac.get_str();
    out += std::string(static_cast<size_t>(digits) - fs.size(), '0') + fs;
    return out;
}

}  // namespace stiefel
