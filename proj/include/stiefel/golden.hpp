// Golden coefficient data: the eliminant factors G, F, the leading
// coefficient a8 of H, and the Jensen quadratic, stored as integer
// expressions in n and p and specialized on demand.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stiefel/rational.hpp"
#include "stiefel/unipoly.hpp"

namespace stiefel {

// Integer expression evaluator over symbols n and p: + - * ^ ( ),
// integer literals, unary minus. Exact (mpz) arithmetic throughout.
Int eval_int_expr(std::string_view expr, const Int& n, const Int& p);

struct GoldenRecord {
    std::string name;
    std::string variable;
    std::vector<std::string> coeff_exprs;  // degree ascending
};

class GoldenData {
public:
    static GoldenData load(const std::string& path);
    // compiled-in default: data/golden_polys.txt in the source tree
    static const GoldenData& builtin();

    bool has(const std::string& name) const { return records_.count(name) > 0; }
    const GoldenRecord& record(const std::string& name) const;

    // formula-level specialization (integer content included)
    UniPoly specialize(const std::string& name, int n, int p) const;
    // content-free, positive leading coefficient
    UniPoly specialize_primitive(const std::string& name, int n, int p) const;
    // single-coefficient records (a8)
    Int scalar(const std::string& name, int n, int p) const;

private:
    std::map<std::string, GoldenRecord> records_;
};

// convenience wrappers over the builtin table
UniPoly golden_G(int n, int p);
UniPoly golden_F(int n, int p);
UniPoly jensen_quadratic(int n, int p);
Int golden_a8(int n, int p);
// 4(n-2)^2 - 8(p-1)(n-1); positive iff the Jensen quadratic has two roots
Int jensen_discriminant(int n, int p);

}  // namespace stiefel
