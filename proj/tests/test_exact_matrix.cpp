#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ss/exact/matrix.hpp"

using namespace ss;

TEST_CASE("arithmetic and powers") {
    IntMat fib = IntMat::from_rows({{1, 1}, {1, 0}});
    IntMat f5 = fib.pow(5);
    CHECK(f5.at(0, 0) == 8);
    CHECK(f5.at(0, 1) == 5);
    CHECK(f5.at(1, 0) == 5);
    CHECK(f5.at(1, 1) == 3);
    CHECK(fib.pow(0) == IntMat::identity(2));

    std::vector<Int> v{Int(2), Int(1)};
    std::vector<Int> mv = fib.apply(v);
    CHECK(mv[0] == 3);
    CHECK(mv[1] == 2);
    std::vector<Int> wm = fib.apply_left(v);
    CHECK(wm[0] == 3);
    CHECK(wm[1] == 2);
}

TEST_CASE("determinants") {
    CHECK(det(IntMat::from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(det(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(det(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})) == 624);
}

TEST_CASE("characteristic polynomials") {
    IntMat fib = IntMat::from_rows({{1, 1}, {1, 0}});
    CHECK(charpoly(fib) == IntPoly{-1, -1, 1});
    IntMat trib = IntMat::from_rows({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(charpoly(trib) == IntPoly{-1, -1, -1, 1});
    // Cayley-Hamilton
    CHECK(eval_poly_at(charpoly(trib), trib).is_zero());
}

TEST_CASE("row Hermite normal form") {
    IntMat a = IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    IntMat u;
    IntMat h = row_hnf(a, &u);
    CHECK(h == IntMat::from_rows({{2, 0, 120}, {0, 2, 20}, {0, 0, 156}}));
    CHECK(u * a == h);
    Int du = det(u);
    CHECK((du == 1 || du == -1));

    // zero rows sink to the bottom
    IntMat b = IntMat::from_rows({{0, 0}, {3, 6}});
    IntMat hb = row_hnf(b);
    CHECK(hb.at(0, 0) == 3);
    CHECK(hb.at(1, 0) == 0);
    CHECK(hb.at(1, 1) == 0);
}

TEST_CASE("integer left kernel") {
    IntMat a = IntMat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    IntMat k = integer_left_kernel(a);
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) == 2);
    CHECK(k.at(0, 1) == -1);
    CHECK(k.at(0, 2) == 0);
    // membership: k * a == 0
    std::vector<Int> w{k.at(0, 0), k.at(0, 1), k.at(0, 2)};
    for (const Int& v : a.apply_left(w)) CHECK(v == 0);

    // full-rank matrix has trivial kernel; saturation picks (1,-1), not (2,-2)
    IntMat full = IntMat::from_rows({{1, 0}, {0, 1}});
    CHECK(integer_left_kernel(full).rows() == 0);
    IntMat dup = IntMat::from_rows({{2, 4}, {2, 4}});
    IntMat kd = integer_left_kernel(dup);
    REQUIRE(kd.rows() == 1);
    CHECK(kd.at(0, 0) == 1);
    CHECK(kd.at(0, 1) == -1);
}

TEST_CASE("rational rank, kernel, solve") {
    QMat m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    CHECK(rank(m) == 1);
    auto ker = rational_right_kernel(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Rat dot = v[0] * 1 + v[1] * 2 + v[2] * 3;
        CHECK(dot == 0);
    }

    QMat s = QMat::identity(2);
    s.at(0, 1) = 1;
    std::vector<Rat> b{Rat(3), Rat(1)};
    std::vector<Rat> x;
    REQUIRE(solve(s, b, x));
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);

    QMat bad(2, 1);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 1;
    std::vector<Rat> rhs{Rat(1), Rat(2)};
    CHECK_FALSE(solve(bad, rhs, x));
}
