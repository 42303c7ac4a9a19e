#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ss/exact/factor.hpp"

using namespace ss;

TEST_CASE("squarefree decomposition") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].poly == IntPoly{2, 1});
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].poly == IntPoly{-1, 1});
    CHECK(parts[1].multiplicity == 2);
    CHECK(squarefree_part(p) == IntPoly{2, 1} * IntPoly{-1, 1});
}

TEST_CASE("factor products of quadratics with multiplicity") {
    IntPoly p = IntPoly{-1, -1, 1} * IntPoly{-1, -4, 1} * IntPoly{-1, -4, 1};
    auto fs = factor(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == IntPoly{-1, -4, 1});
    CHECK(fs[0].multiplicity == 2);
    CHECK(fs[1].poly == IntPoly{-1, -1, 1});
    CHECK(fs[1].multiplicity == 1);
}

TEST_CASE("factor mixed-degree product") {
    IntPoly p = IntPoly{-1, -1, 0, 1} * IntPoly{1, 1, 1} * IntPoly{-2, 1};
    auto fs = factor(p);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].poly == IntPoly{-2, 1});
    CHECK(fs[1].poly == IntPoly{1, 1, 1});
    CHECK(fs[2].poly == IntPoly{-1, -1, 0, 1});
    for (const auto& f : fs) CHECK(f.multiplicity == 1);
}

TEST_CASE("factor quintic with cyclotomic part") {
    IntPoly p{-1, 0, -2, 0, -1, 1};  // x^5 - x^4 - 2x^2 - 1
    auto fs = factor(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == IntPoly{1, 1, 1});
    CHECK(fs[1].poly == IntPoly{-1, 1, -2, 1});
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(IntPoly{-1, -1, 1}));
    CHECK(is_irreducible(IntPoly{1, -2, -7, -2, 1}));   // quartic, not Pisot
    CHECK(is_irreducible(IntPoly{-1, 2, -1, -2, 1}));   // quartic unit
    CHECK_FALSE(is_irreducible(IntPoly{9, 0, -10, 0, 1}));  // (x^2-1)(x^2-9)
    CHECK(is_irreducible(IntPoly{1, 0, -10, 0, 1}));    // min poly of sqrt2 + sqrt3
    CHECK(is_irreducible(IntPoly{1, -1, -1, -1, 1}));   // Salem quartic
    CHECK_FALSE(is_irreducible(IntPoly{-1, 0, 1}));
    CHECK_FALSE(is_irreducible(IntPoly{4}));
}

TEST_CASE("powers of x are stripped first") {
    IntPoly p = IntPoly{0, 0, 1} * IntPoly{-1, -1, -1, 1};  // x^2 (x^3 - x^2 - x - 1)
    auto fs = factor(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == IntPoly::x());
    CHECK(fs[0].multiplicity == 2);
    CHECK(fs[1].poly == IntPoly{-1, -1, -1, 1});
}

TEST_CASE("non-monic input") {
    IntPoly p = (IntPoly{-1, 2} * IntPoly{1, 3}).primitive_part();  // (2x-1)(3x+1)
    auto fs = factor(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == IntPoly{-1, 2});
    CHECK(fs[1].poly == IntPoly{1, 3});
}

TEST_CASE("cyclotomic recognition") {
    CHECK(cyclotomic_order(IntPoly{-1, 1}) == 1);
    CHECK(cyclotomic_order(IntPoly{1, 1}) == 2);
    CHECK(cyclotomic_order(IntPoly{1, 1, 1}) == 3);
    CHECK(cyclotomic_order(IntPoly{1, 0, 1}) == 4);
    CHECK(cyclotomic_order(IntPoly{1, 1, 1, 1, 1}) == 5);
    CHECK(cyclotomic_order(IntPoly{1, -1, 1}) == 6);
    CHECK(cyclotomic_order(IntPoly{1, 0, 0, 0, -1, 0, 0, 0, 1}) == 24);
    CHECK(cyclotomic_order(IntPoly{-1, -1, 1}) == 0);
    CHECK(cyclotomic_order(IntPoly{-2, 1}) == 0);
    CHECK(cyclotomic_order(IntPoly{1, -1, -1, -1, 1}) == 0);  // Salem
}

TEST_CASE("modular exponentiation helper") {
    IntPoly m{1, 1, 1};  // x^2 + x + 1 divides x^3 - 1
    CHECK(pow_x_mod_monic(Int(3), m) == IntPoly{1});
    CHECK(pow_x_mod_monic(Int(4), m) == IntPoly{0, 1});
    CHECK(poly_mod_monic(IntPoly{0, 0, 0, 5}, m) == IntPoly{5});
}
