#include <cmath>
#include <complex>

#include "ss/error.hpp"
#include "ss/geometry/geometry.hpp"

namespace ss {

namespace {

Rat box_refinement_target() {
    Int den(1);
    for (int i = 0; i < 30; ++i) den *= 10;
    return Rat(Int(1), den);
}

}  // namespace

Projection usual_projection(const Substitution& s) {
    IntMat m = s.incidence();
    SpectralDecomposition sd = spectral_decomposition(m);
    PisotCheck pc = is_pisot_unit(sd.perron_poly);
    if (!pc.pisot || !pc.unit)
        throw ScopeError("the Perron root " + sd.perron_poly.str() +
                         " is not a Pisot unit, so there is no contracting projection");

    int a = m.rows();
    int d = sd.perron_degree() - 1;
    Projection out;
    out.kind = ProjectionKind::kUsual;
    out.rows = d;
    out.cols = a;
    out.v.assign(static_cast<size_t>(d) * a, 0.0);
    out.contraction.assign(static_cast<size_t>(d) * d, 0.0);
    out.det_abs = 1.0;

    IntMat mt = m.transpose();
    Rat target = box_refinement_target();
    RootSet rs = isolate_roots(sd.perron_poly);
    int row = 0;
    for (const RootBox& rb : rs.roots) {
        RootBox box = rb;
        if (box.real && compare_real_root_with(box, Rat(1)) == Cmp::GT) continue;
        if (!box.real && !(box.box.im.lo > 0)) continue;
        refine_root(box, target);
        FieldPtr fq = make_field(sd.perron_poly, box);
        std::vector<std::vector<FieldElement>> basis = generalized_eigenspace(mt, fq, 1);
        require(basis.size() == 1, "contracting eigenvector is not one dimensional");
        std::complex<double> gamma = box.approx();
        if (box.real) {
            for (int j = 0; j < a; ++j) out.v[static_cast<size_t>(row) * a + j] = basis[0][j].to_complex().real();
            out.contraction[static_cast<size_t>(row) * d + row] = gamma.real();
            out.det_abs *= std::abs(gamma.real());
            row += 1;
        } else {
            for (int j = 0; j < a; ++j) {
                std::complex<double> val = basis[0][j].to_complex();
                out.v[static_cast<size_t>(row) * a + j] = val.real();
                out.v[static_cast<size_t>(row + 1) * a + j] = val.imag();
            }
            out.contraction[static_cast<size_t>(row) * d + row] = gamma.real();
            out.contraction[static_cast<size_t>(row) * d + row + 1] = -gamma.imag();
            out.contraction[static_cast<size_t>(row + 1) * d + row] = gamma.imag();
            out.contraction[static_cast<size_t>(row + 1) * d + row + 1] = gamma.real();
            out.det_abs *= std::norm(gamma);
            row += 2;
        }
    }
    require(row == d, "contracting row count does not match the Perron degree");
    return out;
}

Projection torus_projection(const TorusFactorVectors& tf) {
    if (tf.w.empty()) throw InputError("torus projection needs at least one vector");
    int d = static_cast<int>(tf.w.size());
    int a = static_cast<int>(tf.w[0].size());
    Projection out;
    out.kind = ProjectionKind::kTorus;
    out.rows = d;
    out.cols = a;
    out.v.assign(static_cast<size_t>(d) * a, 0.0);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(tf.w[i].size()) != a)
            throw InputError("torus projection vectors have mixed lengths");
        double alpha = mpf_class(tf.alpha[i].to_mpf(128)).get_d();
        for (int j = 0; j < a; ++j)
            out.v[static_cast<size_t>(i) * a + j] = alpha - tf.w[i][j].get_d();
    }
    return out;
}

Projection contracting_component(const IntMat& m, const TorusFactorVectors& tf) {
    if (tf.w.empty()) throw InputError("component extraction needs at least one vector");
    int a = m.rows();
    SpectralDecomposition sd = spectral_decomposition(m);

    QPoly charpoly = QPoly::constant(Rat(1));
    for (const Factor& f : sd.char_factors) {
        QPoly fq(f.poly);
        for (int i = 0; i < f.multiplicity; ++i) charpoly = charpoly * fq;
    }
    QPoly perron(sd.perron_poly);
    QPoly rest, rem;
    qpoly_divmod(charpoly, perron, rest, rem);
    require(rem.is_zero(), "Perron factor does not divide the characteristic polynomial");

    // P = 1 mod the Perron factor, 0 mod the complement.
    QPoly projector = QPoly::constant(Rat(1));
    if (rest.degree() >= 1) {
        QPoly u, v;
        QPoly g = qpoly_ext_gcd(perron, rest, u, v);
        require(g.degree() == 0, "Perron factor is not coprime to the complement");
        projector = v * rest * (Rat(1) / g.coeff(0));
    }

    QMat acc(a, a);
    QMat mq(m);
    for (int i = projector.degree(); i >= 0; --i) {
        acc = acc * mq;
        for (int j = 0; j < a; ++j) acc.at(j, j) += projector.coeff(i);
    }

    Projection out;
    out.kind = ProjectionKind::kUsual;
    out.rows = static_cast<int>(tf.w.size());
    out.cols = a;
    out.v.assign(static_cast<size_t>(out.rows) * a, 0.0);
    for (int i = 0; i < out.rows; ++i) {
        if (static_cast<int>(tf.w[i].size()) != a)
            throw InputError("vector length does not match the matrix");
        const FieldPtr& field = tf.alpha[i].field();
        std::vector<FieldElement> row(a);
        for (int j = 0; j < a; ++j)
            row[j] = tf.alpha[i] - FieldElement::from_rat(field, Rat(tf.w[i][j]));
        for (int c = 0; c < a; ++c) {
            FieldElement entry = FieldElement::from_rat(field, Rat(0));
            for (int j = 0; j < a; ++j) entry = entry + row[j] * acc.at(j, c);
            out.v[static_cast<size_t>(i) * a + c] = mpf_class(entry.to_mpf(160)).get_d();
        }
    }
    return out;
}

double projection_defect(const Projection& proj, const IntMat& m) {
    if (proj.kind != ProjectionKind::kUsual)
        throw InputError("the contraction defect is defined for the usual projection");
    if (m.rows() != proj.cols || m.cols() != proj.cols)
        throw InputError("matrix size does not match the projection");
    int d = proj.rows;
    int a = proj.cols;
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int c = 0; c < a; ++c) {
            double nv = 0.0;
            for (int k = 0; k < d; ++k) nv += proj.n_at(i, k) * proj.at(k, c);
            double vm = 0.0;
            for (int j = 0; j < a; ++j) vm += proj.at(i, j) * m.at(j, c).get_d();
            worst = std::max(worst, std::abs(nv - vm));
        }
    }
    return worst;
}

}  // namespace ss
