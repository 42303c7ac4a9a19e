#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ss/exact/numbers.hpp"

namespace ss {

// Dense univariate polynomial over Z. Coefficients are stored low degree
// first and trailing zeros are trimmed, so degree() is size-1 (-1 for the
// zero polynomial). Values are immutable in spirit: all operations return
// new polynomials.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs_low_to_high);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int a);
    static IntPoly x();
    static IntPoly monomial(Int a, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& coeff(int i) const;
    const Int& lc() const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& a) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;

    // gcd of coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;
    // p / content, sign-normalized so the leading coefficient is positive.
    IntPoly primitive_part() const;

    Int eval(const Int& v) const;
    Rat eval(const Rat& v) const;
    double eval_double(double v) const;

    // x^deg * p(1/x)
    IntPoly reversed() const;
    // p(c + s*y) as a polynomial in y (s = +-1 or any integer)
    IntPoly compose_linear(const Int& c, const Int& s) const;

    Int max_abs_coeff() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Total order used wherever factor lists need a deterministic arrangement:
// by degree, then lexicographically on coefficients from the top.
bool poly_less(const IntPoly& a, const IntPoly& b);

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive, lc > 0
Int poly_resultant(const IntPoly& a, const IntPoly& b);

// Lagrange interpolation through (xs[i], ys[i]); throws InternalError if the
// result is not an integer polynomial.
IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys);

// Dense univariate polynomial over Q, used for exact division, monic gcds
// and the extended Euclid behind inversion in residue fields.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    explicit QPoly(const IntPoly& p);

    static QPoly constant(Rat a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& a) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly monic() const;
    Rat eval(const Rat& v) const;

    // lcm of denominators; p * denominator_lcm() has integer coefficients.
    Int denominator_lcm() const;
    IntPoly scaled_integer() const;  // p * denominator_lcm()

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);  // monic
// g = gcd(a,b) monic with u*a + v*b = g
QPoly qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v);

// Exact division over Z: true and sets q when b | a (b nonzero).
bool poly_try_divide(const IntPoly& a, const IntPoly& b, IntPoly& q);

}  // namespace ss
