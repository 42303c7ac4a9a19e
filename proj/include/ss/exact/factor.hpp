#pragma once

#include <vector>

#include "ss/exact/poly.hpp"

namespace ss {

struct Factor {
    IntPoly poly;      // irreducible, primitive, positive leading coefficient
    int multiplicity;  // >= 1
};

// Complete factorization over Z of a nonzero polynomial. The returned
// factors are irreducible, primitive, lc > 0, sorted by poly_less, and
// p = unit * content(p) * prod factor^multiplicity.
std::vector<Factor> factor(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

// Yun's algorithm: p = unit * content * prod out[i].poly^out[i].multiplicity
// with the parts squarefree and pairwise coprime, multiplicities increasing.
std::vector<Factor> squarefree_decomposition(const IntPoly& p);

IntPoly squarefree_part(const IntPoly& p);

// If p is (up to sign) the m-th cyclotomic polynomial, returns m, else 0.
// Expects p irreducible.
int cyclotomic_order(const IntPoly& p);

// Remainder of a modulo the monic polynomial m, exact over Z.
IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& m);

// x^e mod m for monic m, by binary exponentiation.
IntPoly pow_x_mod_monic(const Int& e, const IntPoly& m);

}  // namespace ss
