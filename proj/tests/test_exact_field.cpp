#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ss/exact/field.hpp"

using namespace ss;

namespace {

// Field generated by the largest real root.
FieldPtr field_from(const IntPoly& p) {
    RootSet rs = isolate_roots(p);
    const RootBox* best = nullptr;
    for (const auto& r : rs.roots)
        if (r.real) best = &r;  // sorted ascending, last real wins
    REQUIRE(best != nullptr);
    return make_field(best->min_poly, *best);
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
    FieldPtr F = field_from(IntPoly{-2, 0, 1});  // Q(sqrt2), sqrt2 > 0
    FieldElement s2 = FieldElement::generator(F);
    FieldElement one = FieldElement::from_rat(F, 1);
    CHECK((s2 * s2) == FieldElement::from_rat(F, 2));
    CHECK(((one + s2) * (one - s2)) == FieldElement::from_rat(F, -1));
    CHECK((s2.inverse() * s2) == one);
    CHECK(s2.inverse() == s2 * Rat(1, 2));
    CHECK(s2.pow(4) == FieldElement::from_rat(F, 4));
    CHECK_FALSE(s2.is_rational());
    CHECK((s2 - s2).is_zero());
    CHECK(std::abs(s2.to_complex().real() - std::sqrt(2.0)) < 1e-12);

    mpf_class v = s2.to_mpf(200);
    mpf_class err = v * v - 2;
    mpf_class tol(0, 240);
    mpf_set_ui(tol.get_mpf_t(), 1);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 180);
    CHECK(abs(err) < tol);
}

TEST_CASE("compositum of sqrt2 and sqrt3") {
    FieldPtr F2 = field_from(IntPoly{-2, 0, 1});
    FieldPtr F3 = field_from(IntPoly{-3, 0, 1});
    Embeddings e = compositum(F2, F3);
    CHECK(e.k == 1);
    CHECK(e.field->degree() == 4);
    CHECK(e.field->min_poly == IntPoly{1, 0, -10, 0, 1});
    CHECK(e.image1 * e.image1 == FieldElement::from_rat(e.field, 2));
    CHECK(e.image2 * e.image2 == FieldElement::from_rat(e.field, 3));
    FieldElement s6 = e.image1 * e.image2;
    CHECK(s6 * s6 == FieldElement::from_rat(e.field, 6));
    CHECK(std::abs(e.image1.to_complex().real() - std::sqrt(2.0)) < 1e-10);
    CHECK(std::abs(e.image2.to_complex().real() - std::sqrt(3.0)) < 1e-10);
}

TEST_CASE("compositum of the golden ratio and sqrt2") {
    FieldPtr Fphi = field_from(IntPoly{-1, -1, 1});
    FieldPtr F2 = field_from(IntPoly{-2, 0, 1});
    Embeddings e = compositum(Fphi, F2);
    CHECK(e.field->degree() == 4);
    CHECK(e.field->min_poly == IntPoly{-1, 6, -5, -2, 1});
    FieldElement phi = e.image1;
    CHECK(phi * phi == phi + FieldElement::from_rat(e.field, 1));
}

TEST_CASE("compositum collapses when the fields coincide") {
    // both roots generate the same quartic field
    IntPoly p{-1, 2, -1, -2, 1};
    RootSet rs = isolate_roots(p);
    REQUIRE(rs.roots.size() == 4);
    // reals sorted ascending: -1.132... and 2.132...
    const RootBox* neg = nullptr;
    const RootBox* pos = nullptr;
    for (const auto& r : rs.roots) {
        if (!r.real) continue;
        if (!neg) neg = &r;
        else pos = &r;
    }
    REQUIRE(pos != nullptr);
    FieldPtr Fbeta = make_field(p, *pos);
    FieldPtr Fgamma = make_field(p, *neg);
    Embeddings e = compositum(Fgamma, Fbeta);
    CHECK(e.field->degree() == 4);

    // gamma = 1 - beta inside the compositum
    CHECK(e.image1 == FieldElement::from_rat(e.field, 1) - e.image2);

    // The quartic is u^2 - 2u - 1 in u = x^2 - x, so beta^2 - beta = 1 + sqrt2.
    FieldElement b = e.image2;
    FieldElement s2 = b * b - b - FieldElement::from_rat(e.field, 1);
    CHECK(s2 * s2 == FieldElement::from_rat(e.field, 2));
}

TEST_CASE("rational field and power basis expression") {
    FieldPtr Q = rational_field();
    CHECK(Q->degree() == 1);
    FieldElement half = FieldElement::from_rat(Q, Rat(1, 2));
    CHECK((half + half).as_rational() == 1);

    FieldPtr F2 = field_from(IntPoly{-2, 0, 1});
    Embeddings e = compositum(Q, F2);
    CHECK(e.field->degree() == 2);
    CHECK(e.image1.is_zero());

    // express 3 + 5*sqrt2 in the power basis of sqrt2
    FieldElement s2 = FieldElement::generator(F2);
    FieldElement target = FieldElement::from_rat(F2, 3) + s2 * Rat(5);
    std::vector<Rat> coords;
    REQUIRE(express_in_power_basis(target, s2, 2, coords));
    CHECK(coords[0] == 3);
    CHECK(coords[1] == 5);

    // 1/sqrt2 is not a Z-combination but is a Q-combination
    std::vector<Rat> c2;
    REQUIRE(express_in_power_basis(s2.inverse(), s2, 2, c2));
    CHECK(c2[0] == 0);
    CHECK(c2[1] == Rat(1, 2));
}

TEST_CASE("printing") {
    FieldPtr F = field_from(IntPoly{-2, 0, 1});
    FieldElement e = FieldElement::from_rat(F, 3) + FieldElement::generator(F) * Rat(-1, 2);
    CHECK(e.str() == "-1/2*t + 3");
}
