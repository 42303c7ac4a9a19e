#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ss/exact/poly.hpp"

using namespace ss;

TEST_CASE("integer polynomial arithmetic") {
    IntPoly a{-1, -1, 1};      // x^2 - x - 1
    IntPoly b{-1, -4, 1};      // x^2 - 4x - 1
    IntPoly prod = a * b * b;
    CHECK(prod == IntPoly{-1, -9, -21, 2, 21, -9, 1});
    CHECK(prod.degree() == 6);
    CHECK(prod.lc() == 1);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
    CHECK(a.eval(Int(3)) == 5);
    CHECK(a.eval(Rat(1, 2)) == Rat(-5, 4));
}

TEST_CASE("derivative, content, primitive part") {
    IntPoly p{2, -4, 6};  // 6x^2 - 4x + 2
    CHECK(p.derivative() == IntPoly{-4, 12});
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == IntPoly{1, -2, 3});
    IntPoly neg{0, -3};  // -3x
    CHECK(neg.primitive_part() == IntPoly{0, 1});
    CHECK(IntPoly::zero().content() == 0);
}

TEST_CASE("reversal and linear composition") {
    IntPoly p{1, -4, 0, 2};  // 2x^3 - 4x + 1
    CHECK(p.reversed() == IntPoly{2, 0, -4, 1});
    IntPoly sq{0, 0, 1};
    // (1 - 2y)^2 = 4y^2 - 4y + 1
    CHECK(sq.compose_linear(Int(1), Int(-2)) == IntPoly{1, -4, 4});
    IntPoly fib{-1, -1, 1};
    CHECK(fib.compose_linear(Int(0), Int(1)) == fib);
}

TEST_CASE("polynomial gcd") {
    IntPoly a = IntPoly{-1, 0, 1} * IntPoly{-2, 0, 1};  // (x^2-1)(x^2-2)
    IntPoly b = IntPoly{-1, 0, 1} * IntPoly{-3, 0, 1};  // (x^2-1)(x^2-3)
    CHECK(poly_gcd(a, b) == IntPoly{-1, 0, 1});
    CHECK(poly_gcd(a, IntPoly::zero()) == a);
    IntPoly c{-1, 1};
    CHECK(poly_gcd(c * Int(4), c * Int(6)) == c * Int(2));
}

TEST_CASE("resultants") {
    CHECK(poly_resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
    CHECK(poly_resultant(IntPoly{1, 0, 1}, IntPoly{2, 0, 0, 1}) == 5);
    CHECK(poly_resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    // shared root forces zero
    IntPoly a = IntPoly{-1, 1} * IntPoly{-5, 1};
    IntPoly b = IntPoly{-1, 1} * IntPoly{7, 3, 1};
    CHECK(poly_resultant(a, b) == 0);
    // swap antisymmetry for odd degrees
    IntPoly f{-2, 0, 0, 1}, g{1, 1};
    CHECK(poly_resultant(f, g) == -poly_resultant(g, f));
}

TEST_CASE("integer interpolation") {
    IntPoly p{1, -2, 0, 1};  // x^3 - 2x + 1
    std::vector<Int> xs, ys;
    for (long t = -1; t <= 2; ++t) {
        xs.emplace_back(t);
        ys.push_back(p.eval(Int(t)));
    }
    CHECK(interpolate_integer(xs, ys) == p);
}

TEST_CASE("rational polynomial division and extended gcd") {
    QPoly a(IntPoly{1, 0, 1});
    QPoly b(IntPoly{1, 1});
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    CHECK(q == QPoly(IntPoly{-1, 1}));
    CHECK(r == QPoly(IntPoly{2}));

    QPoly u, v;
    QPoly g = qpoly_ext_gcd(a, b, u, v);
    CHECK(g.degree() == 0);
    CHECK(g.coeff(0) == 1);
    CHECK(u * a + v * b == g);
}

TEST_CASE("exact division over Z") {
    IntPoly f = IntPoly{-1, -1, 1} * IntPoly{-1, -4, 1};
    IntPoly q;
    CHECK(poly_try_divide(f, IntPoly{-1, -4, 1}, q));
    CHECK(q == IntPoly{-1, -1, 1});
    CHECK_FALSE(poly_try_divide(f, IntPoly{1, 1}, q));
    CHECK_FALSE(poly_try_divide(IntPoly{1, 2}, IntPoly{0, 2}, q));
}

TEST_CASE("deterministic polynomial order") {
    CHECK(poly_less(IntPoly{5, 1}, IntPoly{0, 0, 1}));
    CHECK(poly_less(IntPoly{-1, -4, 1}, IntPoly{-1, -1, 1}));
    CHECK_FALSE(poly_less(IntPoly{-1, -1, 1}, IntPoly{-1, -1, 1}));
}

TEST_CASE("printing") {
    CHECK(IntPoly{-1, -1, 1}.str() == "x^2 - x - 1");
    CHECK(IntPoly{0, 2}.str("t") == "2*t");
    CHECK(IntPoly::zero().str() == "0");
}
