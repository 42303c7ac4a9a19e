#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ss/exact/factor.hpp"
#include "ss/exact/field.hpp"
#include "ss/exact/matrix.hpp"
#include "ss/proprify/proprify.hpp"
#include "ss/substitution/substitution.hpp"

namespace ss {

struct PisotCheck {
    bool pisot = false;
    bool unit = false;
    RootBox perron_root;
};

// For a monic irreducible polynomial with a real root > 1: pisot iff every
// other root has modulus < 1, unit iff the constant term is +-1.
PisotCheck is_pisot_unit(const IntPoly& p);

// Product of the non-zero eigenvalues, with multiplicity, is +-1. Read off
// the lowest non-zero coefficient of the characteristic polynomial.
bool is_pseudo_unimodular(const IntMat& m);

// Some power of m is entrywise positive.
bool is_primitive_matrix(const IntMat& m);

// One certified root of modulus >= 1, with the irreducible factor it
// belongs to. Conjugate pairs are represented by the root with im >= 0.
struct ModulusGeOneRoot {
    IntPoly factor;
    int multiplicity = 1;
    RootBox root;
};

struct SpectralDecomposition {
    std::vector<Factor> char_factors;
    IntPoly perron_poly;
    FieldPtr perron;  // Q(beta), labeled by the Perron root
    std::vector<ModulusGeOneRoot> modulus_ge_one_roots;

    int perron_degree() const { return perron_poly.degree(); }
};

// Factors the characteristic polynomial, certifies the Perron root (the
// real root > 1 of maximal modulus, necessarily simple), and classifies
// every root's modulus against 1. Throws ScopeError for non-primitive m.
SpectralDecomposition spectral_decomposition(const IntMat& m);

// True when every non-Perron factor is x, cyclotomic, or the Perron factor
// itself, and the Perron root is a Pisot unit.
bool weakly_irreducible_pisot(const SpectralDecomposition& sd);

// Exact basis of ker((m - gamma I)^mult) over Q(gamma), gamma = f's root.
// The basis size equals the algebraic multiplicity of gamma.
std::vector<std::vector<FieldElement>> generalized_eigenspace(const IntMat& m,
                                                              const FieldPtr& f, int mult);

// Combines a basis so every vector has coordinate sum 0 or 1, preserving
// the span: the first vector of non-zero sum is scaled to sum 1 and
// multiples of it are subtracted from the others.
std::vector<std::vector<FieldElement>> normalize_sum_basis(
    std::vector<std::vector<FieldElement>> basis);

enum class SProvenance { kSumZero, kDifference };

// One exact membership condition on w: either w . entries = 0 for a
// sum-zero generalized eigenvector, or w . entries = 0 for the difference
// v(root) - v0 of two sum-one eigenvectors. Its rational coordinate
// components occupy columns [first_column, first_column + column_count) of
// the condition matrix.
struct SVector {
    SProvenance provenance;
    IntPoly factor;
    RootBox root;
    FieldPtr field;
    std::vector<FieldElement> entries;
    int first_column = 0;
    int column_count = 0;
};

struct SBuild {
    SpectralDecomposition spectral;
    FieldPtr field;                // Q(beta)
    std::vector<FieldElement> v0;  // sum-one Perron right eigenvector
    std::vector<SVector> s;
    IntMat ms;  // n x (#columns); integer-scaled rational components
};

// The membership conditions of the eigenvalue criterion: for every
// eigenvalue of modulus >= 1, the sum-zero generalized eigenvectors and the
// sum-one differences against v0, compiled to integer columns. Differences
// across fields are taken in the compositum. Throws ScopeError when m is
// not primitive or not pseudo-unimodular.
SBuild build_S_and_MS(const IntMat& m);

// A finitely generated subgroup of Q(beta), stored canonically: rows of
// `basis_rows` divided by `denominator` are the generator coordinates in
// the power basis of `field`, in row Hermite normal form with the overall
// content reduced.
struct CanonicalLattice {
    Int denominator = 1;
    IntMat basis_rows;

    bool operator==(const CanonicalLattice& o) const {
        return denominator == o.denominator && basis_rows == o.basis_rows;
    }
};

CanonicalLattice canonical_lattice(const std::vector<std::vector<Rat>>& generators);

// Q-rank of the generators' coordinates beyond the rational one; the number
// of rationally independent irrational generators.
int irrational_rank(const CanonicalLattice& l);

struct MatrixLattice {
    SBuild conditions;
    IntMat kernel;                     // saturated integer lattice of valid w, HNF rows
    std::vector<FieldElement> alphas;  // w . v0 per kernel row, over conditions.field
    CanonicalLattice lattice;          // Z-span of the alphas, canonical form
};

// Kernel of the condition matrix and the alpha values it generates, all on
// the level of one incidence matrix.
MatrixLattice matrix_eigenvalue_lattice(const IntMat& m);

struct EigenLattice {
    FieldPtr field;                        // Q(beta) of the input substitution
    CanonicalLattice lattice;              // alpha lattice in that field
    std::vector<FieldElement> generators;  // lattice rows / denominator

    // Data at the level the kernel was computed on: the input's incidence
    // when a left-proper power exists, otherwise the proprified xi's.
    IntMat work_matrix;
    FieldPtr work_field;
    IntMat kernel_basis;
    std::vector<FieldElement> kernel_alphas;  // over work_field
    IntMat eval_matrix;  // work_matrix^l, l the left-proper power witness

    bool proprified = false;
    int power_k = 1;  // work Perron root = beta^power_k
};

// The alpha lattice of the subshift of s. Auto-proprifies when no power of
// s is left-proper and reports the result pushed back into Q(beta) via
// beta_xi = beta^K.
EigenLattice eigenvalue_lattice(const Substitution& s);

struct HypothesisCheck {
    bool holds = false;
    std::optional<IntPoly> failing_factor;
};

// For every non-Perron irreducible factor with a root of modulus >= 1:
// (1,...,1) must be orthogonal to ker(q(m)^mult) over Q. Requires the
// Perron root to be a Pisot unit.
HypothesisCheck check_finite_extension_hypothesis(const IntMat& m);

enum class SystemKind { kWeaklyMixingPower, kFiniteExtension, kIntermediate };

std::string to_string(SystemKind k);

struct Classification {
    SystemKind kind = SystemKind::kIntermediate;
    // n with sigma^n weakly mixing, or the torus dimension d.
    int parameter = 0;
    std::string evidence;
    EigenLattice lattice;
};

Classification classify(const Substitution& s);

struct TorusFactorVectors {
    std::vector<std::vector<Int>> w;   // d integer row vectors
    std::vector<FieldElement> alpha;   // w_i . v0 over Q(beta)
    std::vector<FieldElement> v0;
};

// d = deg(beta) - 1 integer vectors orthogonal to every non-Perron
// generalized eigenspace with 1, alpha_1, ..., alpha_d rationally
// independent. Requires check_finite_extension_hypothesis to hold.
TorusFactorVectors torus_factor_vectors(const IntMat& m);

struct ConvergenceResult {
    bool converged = false;
    double residual = 0.0;
};

// max |(alpha (1,...,1) - w) m^n_max| evaluated in high-precision floating
// point (the exact cancellation is far below double noise at beta^30).
// A test oracle, never a decision procedure.
ConvergenceResult convergence_oracle(const IntMat& m, const std::vector<Int>& w,
                                     const FieldElement& alpha, int n_max, double tol);

struct PisotRankBound {
    int lattice_rank = 0;   // irrational rank of the candidate lattice
    int perron_degree = 0;  // deg(beta)
    bool bound_holds = false;
    CanonicalLattice lattice;
};

// For a primitive pseudo-unimodular matrix whose Perron root is not Pisot:
// the candidate alpha lattice has fewer independent irrational generators
// than deg(beta). Throws ScopeError when the Perron root is Pisot.
PisotRankBound pisot_rank_bound_check(const Substitution& s);

}  // namespace ss
