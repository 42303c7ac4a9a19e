#include "ss/spectrum/spectrum.hpp"

#include <algorithm>
#include <utility>

#include "ss/error.hpp"

namespace ss {

namespace {

// Right kernel of a square matrix over Q(theta) by Gaussian elimination.
// Each basis vector carries a 1 in its own free coordinate and 0 in the
// free coordinates of the others, so specializing theta keeps them
// independent.
std::vector<std::vector<FieldElement>> field_right_kernel(std::vector<std::vector<FieldElement>> a,
                                                          const FieldPtr& f) {
    const int nr = static_cast<int>(a.size());
    const int nc = nr ? static_cast<int>(a[0].size()) : 0;
    const FieldElement zero = FieldElement::from_rat(f, Rat(0));
    const FieldElement one = FieldElement::from_rat(f, Rat(1));

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        FieldElement inv = a[r][c].inverse();
        for (int j = c; j < nc; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            FieldElement fac = a[i][c];
            for (int j = c; j < nc; ++j) a[i][j] = a[i][j] - fac * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<int> pivot_of(nc, -1);
    for (int i = 0; i < r; ++i) pivot_of[pivot_col[i]] = i;

    std::vector<std::vector<FieldElement>> basis;
    for (int c = 0; c < nc; ++c) {
        if (pivot_of[c] >= 0) continue;
        std::vector<FieldElement> v(nc, zero);
        v[c] = one;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement coord_sum(const std::vector<FieldElement>& v, const FieldPtr& f) {
    FieldElement s = FieldElement::from_rat(f, Rat(0));
    for (const auto& e : v) s = s + e;
    return s;
}

}  // namespace

PisotCheck is_pisot_unit(const IntPoly& p) {
    if (p.degree() < 1 || p.lc() != 1) throw InputError("pisot check needs a monic polynomial of positive degree");
    if (!is_irreducible(p)) throw InputError("pisot check needs an irreducible polynomial");

    RootSet rs = isolate_roots(p);
    int big = -1;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (!rs.roots[i].real) continue;
        if (compare_real_root_with(rs.roots[i], Rat(1)) != Cmp::GT) continue;
        if (big < 0 || compare_real_roots(rs.roots[i], rs.roots[static_cast<size_t>(big)]) == Cmp::GT)
            big = static_cast<int>(i);
    }
    if (big < 0) throw InputError("no real root exceeds 1 in " + p.str());

    PisotCheck out;
    out.perron_root = rs.roots[static_cast<size_t>(big)];
    out.pisot = true;
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (static_cast<int>(i) == big) continue;
        if (modulus_vs_one(rs.roots[i]) != Cmp::LT) {
            out.pisot = false;
            break;
        }
    }
    out.unit = p.coeff(0) == 1 || p.coeff(0) == -1;
    return out;
}

bool is_pseudo_unimodular(const IntMat& m) {
    require(m.rows() == m.cols() && m.rows() > 0, "pseudo-unimodularity needs a square matrix");
    IntPoly cp = charpoly(m);
    int i = 0;
    while (cp.coeff(i) == 0) ++i;
    return cp.coeff(i) == 1 || cp.coeff(i) == -1;
}

bool is_primitive_matrix(const IntMat& m) {
    const int n = m.rows();
    if (n == 0 || m.cols() != n) return false;
    std::vector<char> b(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) < 0) return false;
            b[static_cast<size_t>(i) * n + j] = m.at(i, j) > 0 ? 1 : 0;
        }

    auto mul = [n](const std::vector<char>& x, const std::vector<char>& y) {
        std::vector<char> z(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!x[static_cast<size_t>(i) * n + k]) continue;
                const char* yr = &y[static_cast<size_t>(k) * n];
                char* zr = &z[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j) zr[j] |= yr[j];
            }
        return z;
    };

    // A primitive matrix is positive at the Wielandt exponent (n-1)^2 + 1,
    // and stays positive afterwards, so one check at e >= that bound works.
    unsigned target = static_cast<unsigned>(n - 1) * static_cast<unsigned>(n - 1) + 1;
    std::vector<char> acc = b;
    unsigned e = 1;
    while (e < target) {
        acc = mul(acc, acc);
        e *= 2;
    }
    return std::all_of(acc.begin(), acc.end(), [](char c) { return c != 0; });
}

SpectralDecomposition spectral_decomposition(const IntMat& m) {
    if (!is_primitive_matrix(m)) throw ScopeError("matrix is not primitive");

    SpectralDecomposition sd;
    sd.char_factors = factor(charpoly(m));

    int perron_mult = 0;
    bool have_perron = false;
    RootBox perron_box;
    for (const auto& fac : sd.char_factors) {
        if (fac.poly == IntPoly::x()) continue;
        RootSet rs = isolate_roots(fac.poly);
        for (auto& rb : rs.roots) {
            if (!rb.real && !(rb.box.im.lo > 0)) continue;  // one root per conjugate pair
            if (modulus_vs_one(rb) == Cmp::LT) continue;
            sd.modulus_ge_one_roots.push_back({fac.poly, fac.multiplicity, rb});
            if (rb.real && compare_real_root_with(rb, Rat(1)) == Cmp::GT) {
                if (!have_perron || compare_real_roots(rb, perron_box) == Cmp::GT) {
                    have_perron = true;
                    perron_box = rb;
                    sd.perron_poly = fac.poly;
                    perron_mult = fac.multiplicity;
                }
            }
        }
    }
    if (!have_perron) throw ScopeError("no eigenvalue exceeds 1");
    require(perron_mult == 1, "Perron root of a primitive matrix must be simple");
    sd.perron = make_field(sd.perron_poly, perron_box);
    return sd;
}

bool weakly_irreducible_pisot(const SpectralDecomposition& sd) {
    PisotCheck pc = is_pisot_unit(sd.perron_poly);
    if (!pc.pisot || !pc.unit) return false;
    for (const auto& fac : sd.char_factors) {
        if (fac.poly == sd.perron_poly || fac.poly == IntPoly::x()) continue;
        if (cyclotomic_order(fac.poly) == 0) return false;
    }
    return true;
}

std::vector<std::vector<FieldElement>> generalized_eigenspace(const IntMat& m, const FieldPtr& f,
                                                              int mult) {
    const int n = m.rows();
    require(n == m.cols() && n > 0, "generalized eigenspace needs a square matrix");
    require(mult >= 1, "multiplicity must be positive");

    IntPoly rem = charpoly(m);
    for (int i = 0; i < mult; ++i) {
        IntPoly q;
        if (!poly_try_divide(rem, f->min_poly, q))
            throw InputError("field polynomial to the requested multiplicity does not divide the characteristic polynomial");
        rem = q;
    }

    const FieldElement gamma = FieldElement::generator(f);
    std::vector<std::vector<FieldElement>> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i)].reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            FieldElement e = FieldElement::from_rat(f, Rat(m.at(i, j)));
            if (i == j) e = e - gamma;
            a[static_cast<size_t>(i)].push_back(std::move(e));
        }
    }

    std::vector<std::vector<FieldElement>> p = a;
    for (int k = 1; k < mult; ++k) {
        std::vector<std::vector<FieldElement>> next(
            static_cast<size_t>(n),
            std::vector<FieldElement>(static_cast<size_t>(n), FieldElement::from_rat(f, Rat(0))));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (p[static_cast<size_t>(i)][static_cast<size_t>(t)].is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        next[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                        p[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                            a[static_cast<size_t>(t)][static_cast<size_t>(j)];
            }
        p = std::move(next);
    }

    auto basis = field_right_kernel(std::move(p), f);
    require(static_cast<int>(basis.size()) == mult,
            "generalized eigenspace dimension does not match the algebraic multiplicity");
    return basis;
}

std::vector<std::vector<FieldElement>> normalize_sum_basis(
    std::vector<std::vector<FieldElement>> basis) {
    if (basis.empty()) return basis;
    const FieldPtr f = basis[0][0].field();

    std::vector<FieldElement> sums;
    sums.reserve(basis.size());
    for (const auto& v : basis) sums.push_back(coord_sum(v, f));

    int piv = -1;
    for (size_t i = 0; i < sums.size(); ++i)
        if (!sums[i].is_zero()) {
            piv = static_cast<int>(i);
            break;
        }
    if (piv < 0) return basis;

    const FieldElement inv = sums[static_cast<size_t>(piv)].inverse();
    auto& vstar = basis[static_cast<size_t>(piv)];
    for (auto& e : vstar) e = e * inv;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (static_cast<int>(i) == piv || sums[i].is_zero()) continue;
        for (size_t j = 0; j < basis[i].size(); ++j)
            basis[i][j] = basis[i][j] - vstar[j] * sums[i];
    }
    return basis;
}

}  // namespace ss
