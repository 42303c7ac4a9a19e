#include "ss/spectrum/spectrum.hpp"

#include <algorithm>
#include <utility>

#include "ss/error.hpp"

namespace ss {

namespace {

// Horner evaluation of power-basis coordinates at an element of another
// field: coords over Q[t]/q become the image of the element under t -> x.
FieldElement eval_coords_at(const std::vector<Rat>& coords, const FieldElement& x) {
    const FieldPtr& f = x.field();
    FieldElement acc = FieldElement::from_rat(f, Rat(0));
    for (size_t i = coords.size(); i-- > 0;) {
        acc = acc * x + FieldElement::from_rat(f, coords[i]);
    }
    return acc;
}

FieldElement eval_int_poly_at(const IntPoly& p, const FieldElement& x) {
    std::vector<Rat> coords;
    coords.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coords.emplace_back(c);
    return eval_coords_at(coords, x);
}

FieldElement coord_sum(const std::vector<FieldElement>& v, const FieldPtr& f) {
    FieldElement s = FieldElement::from_rat(f, Rat(0));
    for (const auto& e : v) s = s + e;
    return s;
}

// Appends the non-zero rational coordinate components of the condition
// vector as primitive integer columns and records the column range.
void push_condition(SVector sv, std::vector<std::vector<Int>>& cols, std::vector<SVector>& s) {
    const int n = static_cast<int>(sv.entries.size());
    const int d = sv.field->degree();
    sv.first_column = static_cast<int>(cols.size());
    int added = 0;
    for (int j = 0; j < d; ++j) {
        Int den(1);
        for (int i = 0; i < n; ++i) {
            const auto& cc = sv.entries[static_cast<size_t>(i)].coords();
            if (j < static_cast<int>(cc.size())) den = int_lcm(den, Int(cc[static_cast<size_t>(j)].get_den()));
        }
        std::vector<Int> col(static_cast<size_t>(n), Int(0));
        Int g(0);
        for (int i = 0; i < n; ++i) {
            const auto& cc = sv.entries[static_cast<size_t>(i)].coords();
            if (j < static_cast<int>(cc.size())) {
                const Rat& v = cc[static_cast<size_t>(j)];
                col[static_cast<size_t>(i)] = Int(v.get_num()) * (den / Int(v.get_den()));
            }
            g = int_gcd(g, col[static_cast<size_t>(i)]);
        }
        if (g == 0) continue;  // zero component carries no condition
        for (auto& e : col) e /= g;
        cols.push_back(std::move(col));
        ++added;
    }
    sv.column_count = added;
    s.push_back(std::move(sv));
}

std::vector<Rat> scaled_row(const IntMat& m, int i, const Int& den) {
    std::vector<Rat> row(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) row[static_cast<size_t>(j)] = Rat(m.at(i, j)) / Rat(den);
    return row;
}

void fill_generators(EigenLattice& out) {
    out.generators.clear();
    for (int i = 0; i < out.lattice.basis_rows.rows(); ++i)
        out.generators.emplace_back(out.field, scaled_row(out.lattice.basis_rows, i, out.lattice.denominator));
}

EigenLattice from_matrix_level(MatrixLattice ml, const IntMat& eval_matrix) {
    EigenLattice out;
    out.field = ml.conditions.field;
    out.lattice = ml.lattice;
    out.work_field = out.field;
    out.kernel_basis = ml.kernel;
    out.kernel_alphas = std::move(ml.alphas);
    out.eval_matrix = eval_matrix;
    out.proprified = false;
    out.power_k = 1;
    fill_generators(out);
    return out;
}

}  // namespace

SBuild build_S_and_MS(const IntMat& m) {
    if (!is_primitive_matrix(m)) throw ScopeError("matrix is not primitive");
    if (!is_pseudo_unimodular(m)) throw ScopeError("matrix is not pseudo-unimodular");

    SBuild b;
    b.spectral = spectral_decomposition(m);
    b.field = b.spectral.perron;
    const int n = m.rows();

    auto pb = normalize_sum_basis(generalized_eigenspace(m, b.field, 1));
    require(pb.size() == 1, "Perron eigenspace must be one-dimensional");
    require(coord_sum(pb[0], b.field) == FieldElement::from_rat(b.field, Rat(1)),
            "Perron eigenvector must normalize to coordinate sum one");
    b.v0 = std::move(pb[0]);

    std::vector<std::vector<Int>> cols;

    for (const auto& fac : b.spectral.char_factors) {
        if (fac.poly == IntPoly::x()) continue;

        std::vector<RootBox> reps;
        for (const auto& r : b.spectral.modulus_ge_one_roots)
            if (r.factor == fac.poly) reps.push_back(r.root);
        if (reps.empty()) continue;

        // The abstract generalized eigenspace over Q[t]/q; for the Perron
        // factor it is spanned by v0 itself.
        std::vector<std::vector<FieldElement>> basis;
        FieldPtr fq;
        if (fac.poly == b.spectral.perron_poly) {
            fq = b.field;
            basis = {b.v0};
        } else {
            fq = make_field(fac.poly, reps[0]);
            basis = normalize_sum_basis(generalized_eigenspace(m, fq, fac.multiplicity));
        }

        int piv = -1;
        for (size_t i = 0; i < basis.size(); ++i) {
            FieldElement s = coord_sum(basis[i], fq);
            if (s.is_zero()) {
                push_condition({SProvenance::kSumZero, fac.poly, reps[0], fq, basis[i], 0, 0}, cols,
                               b.s);
            } else {
                require(piv < 0, "normalized basis has more than one non-zero sum");
                piv = static_cast<int>(i);
            }
        }
        if (piv < 0) continue;
        const auto& vstar = basis[static_cast<size_t>(piv)];

        // One difference condition v*(gamma) - v0(beta) per designated root,
        // taken in the compositum of Q(gamma) and Q(beta). The Perron root
        // itself contributes nothing.
        for (const auto& rep : reps) {
            if (fac.poly == b.spectral.perron_poly) {
                RootBox a = rep, c = b.field->root;
                if (a.real && compare_real_roots(a, c) == Cmp::EQ) continue;
            }
            Embeddings e = compositum(make_field(fac.poly, rep), b.field);
            std::vector<FieldElement> diff(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                diff[static_cast<size_t>(i)] =
                    eval_coords_at(vstar[static_cast<size_t>(i)].coords(), e.image1) -
                    eval_coords_at(b.v0[static_cast<size_t>(i)].coords(), e.image2);
            push_condition({SProvenance::kDifference, fac.poly, rep, e.field, std::move(diff), 0, 0},
                           cols, b.s);
        }
    }

    b.ms = IntMat(n, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i < n; ++i) b.ms.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return b;
}

CanonicalLattice canonical_lattice(const std::vector<std::vector<Rat>>& generators) {
    CanonicalLattice out;
    if (generators.empty()) {
        out.basis_rows = IntMat(0, 0);
        return out;
    }
    const int d = static_cast<int>(generators[0].size());

    Int den(1);
    for (const auto& row : generators) {
        require(static_cast<int>(row.size()) == d, "lattice generators must have equal length");
        for (const auto& v : row) den = int_lcm(den, Int(v.get_den()));
    }
    IntMat a(static_cast<int>(generators.size()), d);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < d; ++j) {
            const Rat& v = generators[static_cast<size_t>(i)][static_cast<size_t>(j)];
            a.at(i, j) = Int(v.get_num()) * (den / Int(v.get_den()));
        }

    IntMat h = row_hnf(a);
    int r = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < d; ++j)
            if (h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) r = i + 1;
    }
    if (r == 0) {
        out.denominator = 1;
        out.basis_rows = IntMat(0, d);
        return out;
    }

    Int g = den;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d; ++j) g = int_gcd(g, h.at(i, j));
    out.denominator = den / g;
    out.basis_rows = IntMat(r, d);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d; ++j) out.basis_rows.at(i, j) = h.at(i, j) / g;
    return out;
}

int irrational_rank(const CanonicalLattice& l) {
    const int rows = l.basis_rows.rows();
    const int d = l.basis_rows.cols();
    if (rows == 0 || d <= 1) return 0;
    QMat tails(rows, d - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 1; j < d; ++j) tails.at(i, j - 1) = Rat(l.basis_rows.at(i, j));
    return rank(tails);
}

MatrixLattice matrix_eigenvalue_lattice(const IntMat& m) {
    MatrixLattice r;
    r.conditions = build_S_and_MS(m);
    r.kernel = integer_left_kernel(r.conditions.ms);

    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < r.kernel.rows(); ++i) {
        FieldElement a = FieldElement::from_rat(r.conditions.field, Rat(0));
        for (int j = 0; j < r.kernel.cols(); ++j)
            a = a + r.conditions.v0[static_cast<size_t>(j)] * Rat(r.kernel.at(i, j));
        rows.push_back(a.coords());
        r.alphas.push_back(std::move(a));
    }
    r.lattice = canonical_lattice(rows);
    return r;
}

EigenLattice eigenvalue_lattice(const Substitution& s) {
    if (!primitivity(s).primitive) throw ScopeError("substitution is not primitive");
    IntMat m = s.incidence();
    if (!is_pseudo_unimodular(m)) throw ScopeError("incidence matrix is not pseudo-unimodular");

    if (auto lp = left_proper_power(s)) {
        EigenLattice out = from_matrix_level(matrix_eigenvalue_lattice(m), m.pow(static_cast<unsigned>(*lp)));
        out.work_matrix = m;
        return out;
    }

    // No power is left proper: pass to the return-word recoding, whose
    // subshift is conjugate, and report in the original field via
    // beta_xi = beta^K.
    Proprification p = proprify(s);
    IntMat mx = p.xi.incidence();
    MatrixLattice ml = matrix_eigenvalue_lattice(mx);

    EigenLattice out;
    out.field = spectral_decomposition(m).perron;
    out.work_matrix = mx;
    out.work_field = ml.conditions.field;
    out.kernel_basis = ml.kernel;
    out.eval_matrix = mx.pow(static_cast<unsigned>(p.left_proper_power));
    out.proprified = true;
    out.power_k = p.power_k;

    FieldElement gk = FieldElement::generator(out.field).pow(static_cast<unsigned>(p.power_k));
    require(eval_int_poly_at(out.work_field->min_poly, gk).is_zero(),
            "recoded Perron root is not the expected power of the base root");

    std::vector<std::vector<Rat>> pushed;
    for (auto& a : ml.alphas) {
        pushed.push_back(eval_coords_at(a.coords(), gk).coords());
        out.kernel_alphas.push_back(std::move(a));
    }
    out.lattice = canonical_lattice(pushed);
    fill_generators(out);
    return out;
}

TorusFactorVectors torus_factor_vectors(const IntMat& m) {
    HypothesisCheck h = check_finite_extension_hypothesis(m);
    if (!h.holds)
        throw ScopeError("finite extension hypothesis fails for factor " + h.failing_factor->str());

    SBuild b = build_S_and_MS(m);
    const int n = m.rows();
    const int degb = b.spectral.perron_degree();
    const int d = degb - 1;

    // Integer vectors orthogonal to every non-Perron generalized eigenspace:
    // the saturated left kernel of a column basis of ker(Q(M)), where Q is
    // the characteristic polynomial without the Perron factor.
    IntPoly qpoly;
    require(poly_try_divide(charpoly(m), b.spectral.perron_poly, qpoly),
            "Perron factor must divide the characteristic polynomial");
    IntMat orth;
    if (qpoly.degree() == 0) {
        orth = IntMat::identity(n);
    } else {
        auto cols = rational_right_kernel(QMat(eval_poly_at(qpoly, m)));
        IntMat c(n, static_cast<int>(cols.size()));
        for (int j = 0; j < c.cols(); ++j) {
            Int den(1);
            for (const auto& v : cols[static_cast<size_t>(j)]) den = int_lcm(den, Int(v.get_den()));
            for (int i = 0; i < n; ++i) {
                const Rat& v = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
                c.at(i, j) = Int(v.get_num()) * (den / Int(v.get_den()));
            }
        }
        orth = integer_left_kernel(c);
    }
    require(orth.rows() == degb, "orthogonal complement of the contracting part has wrong rank");

    // Greedily keep rows whose alpha = w . v0 extends the rational
    // independence of {1, alpha_1, ..., alpha_k}. Each of the deg(beta)
    // candidate alphas is distinct, so d picks always exist.
    TorusFactorVectors out;
    out.v0 = b.v0;
    std::vector<std::vector<Rat>> picked;
    {
        std::vector<Rat> one(static_cast<size_t>(degb), Rat(0));
        one[0] = 1;
        picked.push_back(std::move(one));
    }
    for (int i = 0; i < orth.rows() && static_cast<int>(out.w.size()) < d; ++i) {
        FieldElement a = FieldElement::from_rat(b.field, Rat(0));
        for (int j = 0; j < n; ++j) a = a + b.v0[static_cast<size_t>(j)] * Rat(orth.at(i, j));
        QMat t(static_cast<int>(picked.size()) + 1, degb);
        for (int r = 0; r < static_cast<int>(picked.size()); ++r)
            for (int j = 0; j < degb; ++j) t.at(r, j) = picked[static_cast<size_t>(r)][static_cast<size_t>(j)];
        for (int j = 0; j < degb; ++j) t.at(t.rows() - 1, j) = a.coords()[static_cast<size_t>(j)];
        if (rank(t) != t.rows()) continue;
        picked.push_back(a.coords());
        std::vector<Int> w(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = orth.at(i, j);
        out.w.push_back(std::move(w));
        out.alpha.push_back(std::move(a));
    }
    require(static_cast<int>(out.w.size()) == d,
            "could not pick deg(beta)-1 rationally independent eigenvalues");
    return out;
}

ConvergenceResult convergence_oracle(const IntMat& m, const std::vector<Int>& w,
                                     const FieldElement& alpha, int n_max, double tol) {
    const int n = m.rows();
    require(n == m.cols() && static_cast<int>(w.size()) == n, "row vector length must match the matrix");
    require(n_max >= 0, "n_max must be non-negative");

    // The entries of m^30 reach beta^30, far beyond double precision, so the
    // cancellation is measured with wide mantissas instead.
    const int prec = 256;
    mpf_class aval = alpha.to_mpf(prec);
    std::vector<mpf_class> row(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        row[static_cast<size_t>(i)] = mpf_class(0, prec);
        row[static_cast<size_t>(i)] = aval - mpf_class(w[static_cast<size_t>(i)], prec);
    }

    std::vector<mpf_class> me(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) me[static_cast<size_t>(i) * n + j] = mpf_class(m.at(i, j), prec);

    for (int step = 0; step < n_max; ++step) {
        std::vector<mpf_class> next(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            mpf_class acc(0, prec);
            for (int i = 0; i < n; ++i) acc += row[static_cast<size_t>(i)] * me[static_cast<size_t>(i) * n + j];
            next[static_cast<size_t>(j)] = std::move(acc);
        }
        row = std::move(next);
    }

    mpf_class worst(0, prec);
    for (const auto& v : row) {
        mpf_class a = abs(v);
        if (a > worst) worst = a;
    }
    ConvergenceResult out;
    out.residual = worst.get_d();
    out.converged = out.residual < tol;
    return out;
}

PisotRankBound pisot_rank_bound_check(const Substitution& s) {
    if (!primitivity(s).primitive) throw ScopeError("substitution is not primitive");
    IntMat m = s.incidence();
    SpectralDecomposition sd = spectral_decomposition(m);
    PisotCheck pc = is_pisot_unit(sd.perron_poly);
    if (pc.pisot) throw ScopeError("Perron root is a Pisot number; the rank bound addresses the non-Pisot case");

    MatrixLattice ml = matrix_eigenvalue_lattice(m);
    PisotRankBound out;
    out.lattice_rank = irrational_rank(ml.lattice);
    out.perron_degree = sd.perron_degree();
    out.bound_holds = out.lattice_rank < out.perron_degree;
    out.lattice = ml.lattice;
    return out;
}

}  // namespace ss
