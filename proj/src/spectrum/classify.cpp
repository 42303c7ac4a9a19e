#include "ss/spectrum/spectrum.hpp"

#include <sstream>
#include <utility>

#include "ss/error.hpp"

namespace ss {

namespace {

int small_int(const Int& v) {
    require(v.fits_sint_p(), "value exceeds the machine integer range");
    return static_cast<int>(v.get_si());
}

std::vector<FieldElement> lattice_generators(const FieldPtr& f, const CanonicalLattice& l) {
    std::vector<FieldElement> gens;
    for (int i = 0; i < l.basis_rows.rows(); ++i) {
        std::vector<Rat> coords(static_cast<size_t>(l.basis_rows.cols()));
        for (int j = 0; j < l.basis_rows.cols(); ++j)
            coords[static_cast<size_t>(j)] = Rat(l.basis_rows.at(i, j)) / Rat(l.denominator);
        gens.emplace_back(f, std::move(coords));
    }
    return gens;
}

}  // namespace

std::string to_string(SystemKind k) {
    switch (k) {
        case SystemKind::kWeaklyMixingPower: return "WEAKLY_MIXING_POWER";
        case SystemKind::kFiniteExtension: return "FINITE_EXTENSION";
        case SystemKind::kIntermediate: return "INTERMEDIATE";
    }
    throw InternalError("unknown system kind");
}

HypothesisCheck check_finite_extension_hypothesis(const IntMat& m) {
    SpectralDecomposition sd = spectral_decomposition(m);
    PisotCheck pc = is_pisot_unit(sd.perron_poly);
    if (!pc.pisot) throw ScopeError("Perron root is not a Pisot number");

    HypothesisCheck out;
    for (const auto& fac : sd.char_factors) {
        if (fac.poly == sd.perron_poly || fac.poly == IntPoly::x()) continue;
        bool big = false;
        for (const auto& r : sd.modulus_ge_one_roots)
            if (r.factor == fac.poly) {
                big = true;
                break;
            }
        if (!big) continue;

        IntMat qm = eval_poly_at(fac.poly, m).pow(static_cast<unsigned>(fac.multiplicity));
        for (const auto& col : rational_right_kernel(QMat(qm))) {
            Rat s(0);
            for (const auto& v : col) s += v;
            if (s != 0) {
                out.holds = false;
                out.failing_factor = fac.poly;
                return out;
            }
        }
    }
    out.holds = true;
    return out;
}

Classification classify(const Substitution& s) {
    if (!primitivity(s).primitive) throw ScopeError("substitution is not primitive");
    IntMat m = s.incidence();
    if (!is_pseudo_unimodular(m)) throw ScopeError("incidence matrix is not pseudo-unimodular");

    SpectralDecomposition sd = spectral_decomposition(m);
    PisotCheck pc = is_pisot_unit(sd.perron_poly);

    Classification c;
    std::ostringstream ev;

    if (!pc.pisot) {
        // Non-Pisot Perron root: no finite extension of a torus rotation is
        // possible, and the incidence-level conditions already bound the
        // eigenvalue group, so the recoding step is unnecessary.
        MatrixLattice ml = matrix_eigenvalue_lattice(m);
        EigenLattice el;
        el.field = ml.conditions.field;
        el.lattice = ml.lattice;
        el.generators = lattice_generators(el.field, el.lattice);
        el.work_matrix = m;
        el.work_field = el.field;
        el.kernel_basis = ml.kernel;
        el.kernel_alphas = std::move(ml.alphas);
        el.eval_matrix = m;
        const int irr = irrational_rank(el.lattice);
        if (irr == 0) {
            c.kind = SystemKind::kWeaklyMixingPower;
            c.parameter = small_int(el.lattice.denominator);
            ev << "all candidate eigenvalues are rational with denominator dividing " << c.parameter;
        } else {
            c.kind = SystemKind::kIntermediate;
            c.parameter = irr;
            ev << "Perron root of " << sd.perron_poly.str()
               << " is not a Pisot number, ruling out a torus factor of full degree;"
               << " the candidate eigenvalue lattice has irrational rank " << irr << " < "
               << sd.perron_degree();
        }
        c.lattice = std::move(el);
        c.evidence = ev.str();
        return c;
    }

    EigenLattice el = eigenvalue_lattice(s);
    const int irr = irrational_rank(el.lattice);
    const int d = el.field->degree() - 1;

    if (irr == 0) {
        c.kind = SystemKind::kWeaklyMixingPower;
        c.parameter = small_int(el.lattice.denominator);
        ev << "every eigenvalue lies in (1/" << c.parameter << ")Z, so this power of the substitution is weakly mixing";
    } else {
        SpectralDecomposition wsd = spectral_decomposition(el.work_matrix);
        if (weakly_irreducible_pisot(wsd)) {
            c.kind = SystemKind::kFiniteExtension;
            c.parameter = d;
            ev << "weakly irreducible Pisot: every non-Perron eigenvalue is zero or a root of unity;"
               << " the subshift is a finite extension of a minimal rotation on T^" << d;
        } else {
            HypothesisCheck h = check_finite_extension_hypothesis(el.work_matrix);
            if (h.holds) {
                c.kind = SystemKind::kFiniteExtension;
                c.parameter = d;
                ev << "every expanding non-Perron eigenvector has coordinate sum zero;"
                   << " the subshift is a finite extension of a minimal rotation on T^" << d;
            } else {
                c.kind = SystemKind::kIntermediate;
                c.parameter = irr;
                ev << "factor " << h.failing_factor->str()
                   << " contributes an expanding eigenvector with non-zero coordinate sum;"
                   << " the eigenvalue lattice has irrational rank " << irr << " of a possible " << d;
            }
        }
    }
    c.lattice = std::move(el);
    c.evidence = ev.str();
    return c;
}

}  // namespace ss
