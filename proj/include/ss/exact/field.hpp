#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "ss/exact/roots.hpp"

namespace ss {

// The field Q(theta) for a designated root theta of a monic irreducible
// polynomial. The enclosure pins down which root, so evaluation and
// embeddings are unambiguous.
struct LabeledField {
    IntPoly min_poly;
    RootBox root;

    int degree() const { return min_poly.degree(); }
};

using FieldPtr = std::shared_ptr<LabeledField>;

FieldPtr make_field(IntPoly min_poly, RootBox root);
FieldPtr rational_field();

// Element of Q(theta) in the power basis 1, theta, ..., theta^(d-1).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rat> coords);
    static FieldElement from_rat(const FieldPtr& field, Rat v);
    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rat& s) const;
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement pow(unsigned e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    // High precision real value; requires the field root to be real.
    mpf_class to_mpf(int prec_bits) const;

    std::string str(const std::string& var = "t") const;

private:
    FieldPtr field_;
    std::vector<Rat> c_;
};

// Compositum Q(theta) of two labeled fields with theta = root1 + k*root2
// for the smallest k >= 1 that separates all conjugate sums. image1 and
// image2 are the designated roots expressed inside the compositum.
struct Embeddings {
    FieldPtr field;
    FieldElement image1, image2;
    int k = 0;
};

Embeddings compositum(const FieldPtr& f1, const FieldPtr& f2);

// Write target as sum c_i * gen^i for i < deg, if possible.
bool express_in_power_basis(const FieldElement& target, const FieldElement& gen, int deg,
                            std::vector<Rat>& out);

}  // namespace ss
