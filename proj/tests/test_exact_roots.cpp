#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ss/exact/roots.hpp"

using namespace ss;

namespace {

int count_real(const RootSet& rs) {
    int n = 0;
    for (const auto& r : rs.roots) n += r.real ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("Sturm counting and real isolation") {
    IntPoly p{-2, 0, 1};  // x^2 - 2
    SturmChain chain(p);
    CHECK(chain.count(Rat(-3), Rat(3)) == 2);
    CHECK(chain.count(Rat(0), Rat(3)) == 1);
    CHECK(chain.count(Rat(2), Rat(3)) == 0);

    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi < ivs[1].lo);

    // no real roots
    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
    // Salem quartic has two real roots
    CHECK(isolate_real_roots(IntPoly{1, -1, -1, -1, 1}).size() == 2);
}

TEST_CASE("full root isolation on a Pisot cubic") {
    IntPoly p{-1, 1, -2, 1};  // one real root near 1.7549, one complex pair
    RootSet rs = isolate_roots(p);
    REQUIRE(rs.roots.size() == 3);
    CHECK(count_real(rs) == 1);
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j)
            CHECK_FALSE(rs.roots[i].box.intersects(rs.roots[j].box));

    for (auto& r : rs.roots) {
        if (!r.real) continue;
        refine_root(r, rat_pow2(-60));
        CHECK(std::abs(r.approx().real() - 1.754877666246693) < 1e-9);
    }
}

TEST_CASE("isolation handles reducible squarefree input") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{1, 1, 1};  // x^3 - 1
    RootSet rs = isolate_roots(p);
    REQUIRE(rs.roots.size() == 3);
    CHECK(count_real(rs) == 1);
    bool found_one = false;
    for (const auto& r : rs.roots)
        if (r.real && r.box.re.contains(Rat(1)) && r.box.width() == 0) found_one = true;
    CHECK(found_one);
}

TEST_CASE("modulus comparisons") {
    // roots of unity stay on the circle
    {
        RootSet rs = isolate_roots(IntPoly{1, 1, 1});
        for (auto& r : rs.roots) CHECK(modulus_vs_one(r) == Cmp::EQ);
    }
    {
        RootSet rs = isolate_roots(IntPoly{1, 1, 1, 1, 1});
        for (auto& r : rs.roots) CHECK(modulus_vs_one(r) == Cmp::EQ);
    }
    // palindromic but real quadratic: reciprocal pair off the circle
    {
        RootSet rs = isolate_roots(IntPoly{1, -3, 1});
        REQUIRE(rs.roots.size() == 2);
        CHECK(modulus_vs_one(rs.roots[0]) == Cmp::LT);
        CHECK(modulus_vs_one(rs.roots[1]) == Cmp::GT);
    }
    // Salem quartic: reciprocal real pair plus a unit-modulus complex pair
    {
        RootSet rs = isolate_roots(IntPoly{1, -1, -1, -1, 1});
        int eq = 0, lt = 0, gt = 0;
        for (auto& r : rs.roots) {
            Cmp c = modulus_vs_one(r);
            eq += c == Cmp::EQ;
            lt += c == Cmp::LT;
            gt += c == Cmp::GT;
        }
        CHECK(eq == 2);
        CHECK(lt == 1);
        CHECK(gt == 1);
    }
    // Pisot quadratic
    {
        RootSet rs = isolate_roots(IntPoly{-1, -1, 1});
        CHECK(modulus_vs_one(rs.roots[0]) == Cmp::LT);  // -0.618...
        CHECK(modulus_vs_one(rs.roots[1]) == Cmp::GT);  // 1.618...
    }
    // non-Pisot unit quartic: moduli 2.13, 1.13, and a pair at 0.643
    {
        RootSet rs = isolate_roots(IntPoly{-1, 2, -1, -2, 1});
        int lt = 0, gt = 0;
        for (auto& r : rs.roots) {
            Cmp c = modulus_vs_one(r);
            lt += c == Cmp::LT;
            gt += c == Cmp::GT;
        }
        CHECK(lt == 2);
        CHECK(gt == 2);
    }
    // rational point roots
    {
        RootSet rs = isolate_roots(IntPoly{0, 1});
        CHECK(modulus_vs_one(rs.roots[0]) == Cmp::LT);
        RootSet rs2 = isolate_roots(IntPoly{-1, 1});
        CHECK(modulus_vs_one(rs2.roots[0]) == Cmp::EQ);
    }
}

TEST_CASE("real root comparisons") {
    RootSet sqrt2 = isolate_roots(IntPoly{-2, 0, 1});
    RootSet golden = isolate_roots(IntPoly{-1, -1, 1});
    RootBox a = sqrt2.roots[1];
    RootBox b = golden.roots[1];
    CHECK(compare_real_roots(a, b) == Cmp::LT);
    CHECK(compare_real_roots(b, a) == Cmp::GT);
    RootBox c = b;
    CHECK(compare_real_roots(b, c) == Cmp::EQ);

    CHECK(compare_real_root_with(a, Rat(1)) == Cmp::GT);
    CHECK(compare_real_root_with(a, Rat(2)) == Cmp::LT);
    RootSet one = isolate_roots(IntPoly{-1, 1});
    RootBox r1 = one.roots[0];
    CHECK(compare_real_root_with(r1, Rat(1)) == Cmp::EQ);
}

TEST_CASE("high precision values") {
    RootSet golden = isolate_roots(IntPoly{-1, -1, 1});
    RootBox phi = golden.roots[1];
    auto [re, im] = root_mpf(phi, 256);
    CHECK(im == 0);
    mpf_class err = re * re - re - 1;
    mpf_class tol(0, 300);
    mpf_set_ui(tol.get_mpf_t(), 1);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 240);
    CHECK(abs(err) < tol);
}
