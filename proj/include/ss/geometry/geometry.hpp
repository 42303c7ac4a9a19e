#pragma once

#include <string>
#include <vector>

#include "ss/exact/matrix.hpp"
#include "ss/spectrum/spectrum.hpp"
#include "ss/substitution/substitution.hpp"

namespace ss {

enum class ProjectionKind { kUsual, kTorus };

// A d x |A| real matrix V mapping abelianized prefixes into R^d. The usual
// projection also carries the d x d contraction N with N V = V M and
// |det N| = 1 / beta.
struct Projection {
    ProjectionKind kind = ProjectionKind::kUsual;
    int rows = 0;
    int cols = 0;
    std::vector<double> v;            // row-major, rows x cols
    std::vector<double> contraction;  // row-major, rows x rows; usual only
    double det_abs = 0.0;

    double at(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }
    double n_at(int i, int j) const { return contraction[static_cast<size_t>(i) * rows + j]; }
};

// Rows are the real and imaginary parts of left eigenvectors of the
// incidence matrix at the conjugates of the Perron root with modulus
// below one, evaluated from root enclosures refined to width 1e-30.
// Requires the Perron root to be a Pisot unit; d = degree - 1.
Projection usual_projection(const Substitution& s);

// Rows alpha_i (1,...,1) - w_i from torus factor data; V M^n -> 0.
Projection torus_projection(const TorusFactorVectors& tf);

// The component of the torus rows inside the Perron factor's left space:
// rows are multiplied by the exact polynomial projector P(m) with
// P = 1 mod the Perron factor and P = 0 mod the rest of the
// characteristic polynomial. The result V satisfies V m^n = V' m^n for
// every n past the nilpotent range, which makes projection pairs
// comparable point by point.
Projection contracting_component(const IntMat& m, const TorusFactorVectors& tf);

// max |N V - V M| over entries; the projection must be usual.
double projection_defect(const Projection& proj, const IntMat& m);

struct PointCloud {
    int dim = 0;
    std::vector<double> coords;  // point-major, size() x dim
    std::vector<int> tags;       // letter of the fixed point at each position

    int size() const { return static_cast<int>(tags.size()); }
    const double* point(int k) const { return coords.data() + static_cast<size_t>(k) * dim; }
};

// First n_points values V ab(u_[0,n)) of the one-sided fixed point u,
// point n tagged by u_n. Work is chunked on a fixed grid so the result is
// identical for every SUBST_SPECTRA_THREADS setting.
PointCloud rauzy_cloud(const Substitution& s, const Projection& proj, int n_points);

struct ExchangeReport {
    std::vector<std::vector<double>> translations;  // V e_a per letter
    double diameter = 0.0;                          // bounding box diagonal
    double max_step_defect = 0.0;  // max |p_{n+1} - p_n - V e_{u_n}|
    double tolerance = 0.0;
    double containment_ratio = 0.0;  // translated points near some cloud point
    double grid_h = 0.0;
    double overlap_fraction = 0.0;  // occupied cells holding >= 2 letters
};

// Domain exchange sampling: each point moved by its letter's translation
// should land near another cloud point, and the letter pieces should
// barely overlap on a grid of side grid_h. tol <= 0 defaults to
// diameter/1000, grid_h <= 0 to diameter/200.
ExchangeReport exchange_check(const PointCloud& cloud, const Projection& proj,
                              double tol = 0.0, double grid_h = 0.0);

struct IfsReport {
    int depth = 0;
    std::vector<double> max_residual;   // per letter
    std::vector<double> mean_residual;  // per letter
    double overall_max = 0.0;
};

// Distance from sampled points of each piece R_a to the union of
// N R_b + V ab(p) over image factorizations sigma(b) = p a s, iterated
// `depth` times. Depth 0 compares the cloud with itself.
IfsReport ifs_residual(const Substitution& s, const Projection& proj, const PointCloud& cloud,
                       int depth, int sample);

struct SeparationReport {
    int n_max = 0;
    int alphabet = 0;
    // min_by_n[n-1]: smallest pairwise distance within any digit set
    // D^n_{a,b}; +infinity when every set has fewer than two elements.
    std::vector<double> min_by_n;
    // path_counts[n-1][a * alphabet + b] = |D^n_{a,b}|, the number of
    // length-n automaton paths from b to a.
    std::vector<std::vector<long>> path_counts;
    double overall_min = 0.0;
};

// Digit sets D^n_{a,b} = { sum_i N^{-i} V t_i } over automaton paths
// b -> a of length n <= n_max (n_max <= 8), with pairwise separation.
// Throws InternalError when the path budget is exceeded.
SeparationReport epsilon_separation(const Substitution& s, const Projection& proj, int n_max);

struct PsiGraph {
    int dim_v = 0;
    int dim_vp = 0;
    int alphabet = 0;
    std::vector<double> v_coords;   // n x dim_v
    std::vector<double> vp_coords;  // n x dim_vp
    std::vector<int> tags;
    std::vector<int> first_digit;  // n x alphabet letter counts of digit 0

    // When the two projections have equal dimension: the largest
    // deviation of phi_V'(x) - phi_V(x) from (V' - V) t_0(x). Small values
    // certify that the pairing acts as a translation on each first-digit
    // piece; meaningless (-1) when dimensions differ.
    double translation_defect = -1.0;

    int size() const { return static_cast<int>(tags.size()); }
};

// Paired projections (phi_V(x), phi_V'(x)) over fixed point positions,
// with the abelianized first digit of each position's expansion.
PsiGraph psi_graph(const Substitution& s, const Projection& v, const Projection& vp,
                   int n_points);

struct RenderConfig {
    int size = 800;          // canvas edge, px
    double radius = 1.2;     // dot radius, px
    bool torus_mod = false;  // reduce coordinates mod 1 before drawing
};

// Deterministic standalone SVG scatter, one dot per point, one color per
// letter, legend included. Clouds of dimension one are drawn against the
// point index; higher dimensions use the first two coordinates.
std::string render_svg(const PointCloud& cloud, const std::vector<std::string>& letters,
                       const RenderConfig& cfg = {});

// Scatter of (phi_V, phi_V') pairs, first coordinate of each side.
std::string render_svg_pairs(const PsiGraph& g, const std::vector<std::string>& letters,
                             const RenderConfig& cfg = {});

std::string cloud_csv(const PointCloud& cloud, const std::vector<std::string>& letters);

}  // namespace ss
