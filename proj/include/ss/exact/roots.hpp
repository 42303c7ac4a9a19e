#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ss/exact/interval.hpp"
#include "ss/exact/poly.hpp"

namespace ss {

// A certified enclosure of one root of an irreducible polynomial. Real
// roots carry an exact-zero imaginary interval and a Sturm-certified real
// interval; complex roots carry an interval-Newton certified rectangle that
// stays strictly off the real axis.
struct RootBox {
    IntPoly min_poly;
    QBox box;
    bool real = false;

    std::complex<double> approx() const {
        return {box.re.mid().get_d(), box.im.mid().get_d()};
    }
};

// All roots of a squarefree polynomial, pairwise disjoint enclosures,
// sorted by (re.lo, re.hi, im.lo).
struct RootSet {
    IntPoly poly;
    std::vector<RootBox> roots;
};

// Sturm chain of a squarefree polynomial, for exact real root counting.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    // Number of distinct real roots in (a, b]; a, b must not be roots.
    int count(const Rat& a, const Rat& b) const;

private:
    int variations(const Rat& x) const;
    std::vector<QPoly> chain_;
};

Rat cauchy_root_bound(const IntPoly& p);

// Isolating intervals (non-root rational endpoints, one root each) for all
// real roots of an irreducible polynomial.
std::vector<QInterval> isolate_real_roots(const IntPoly& p);

// Certified enclosures for every complex root. Accepts any squarefree
// polynomial of positive degree.
RootSet isolate_roots(const IntPoly& p);

// Shrink the enclosure until box.width() <= target.
void refine_root(RootBox& rb, const Rat& target);

// High precision approximation (re, im) at prec bits, refining as needed.
std::pair<mpf_class, mpf_class> root_mpf(RootBox& rb, int prec_bits);

enum class Cmp { LT, EQ, GT };

// Exact comparison of |root| with 1.
Cmp modulus_vs_one(RootBox& rb);

// Exact comparison of two real algebraic numbers given by root enclosures.
// Roots of distinct irreducible polynomials, or distinct roots of the same
// polynomial, always separate; identical enclosures compare equal.
Cmp compare_real_roots(RootBox& a, RootBox& b);

// Exact comparison of a real root with a rational.
Cmp compare_real_root_with(RootBox& a, const Rat& v);

}  // namespace ss
