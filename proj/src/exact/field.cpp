#include "ss/exact/field.hpp"

#include <algorithm>
#include <sstream>

#include "ss/error.hpp"
#include "ss/exact/factor.hpp"
#include "ss/exact/matrix.hpp"

namespace ss {

FieldPtr make_field(IntPoly min_poly, RootBox root) {
    require(!min_poly.is_zero() && min_poly.lc() == 1, "field polynomial must be monic");
    auto f = std::make_shared<LabeledField>();
    f->min_poly = std::move(min_poly);
    f->root = std::move(root);
    return f;
}

FieldPtr rational_field() {
    RootBox rb;
    rb.min_poly = IntPoly::x();
    rb.box = box_point(Rat(0), Rat(0));
    rb.real = true;
    return make_field(IntPoly::x(), rb);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    require(field_ != nullptr, "field element without a field");
    c_.resize(static_cast<size_t>(field_->degree()), Rat(0));
}

FieldElement FieldElement::from_rat(const FieldPtr& field, Rat v) {
    std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
    c[0] = std::move(v);
    return FieldElement(field, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        Rat r = Rat(-field->min_poly.coeff(0)) / Rat(field->min_poly.coeff(1));
        return from_rat(field, r);
    }
    std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
    c[1] = 1;
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat FieldElement::as_rational() const {
    require(is_rational(), "field element is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require(field_ == o.field_, "field mismatch");
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require(field_ == o.field_, "field mismatch");
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
    return FieldElement(field_, std::move(c));
}

namespace {

// Reduce a rational coefficient vector modulo the monic field polynomial.
std::vector<Rat> reduce_mod_field(std::vector<Rat> v, const IntPoly& m) {
    int d = m.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rat c = v[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j < d; ++j)
            v[static_cast<size_t>(i - d + j)] -= c * Rat(m.coeff(j));
        v[static_cast<size_t>(i)] = 0;
    }
    v.resize(static_cast<size_t>(d), Rat(0));
    return v;
}

}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require(field_ == o.field_, "field mismatch");
    size_t n = c_.size();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    return FieldElement(field_, reduce_mod_field(std::move(prod), field_->min_poly));
}

FieldElement FieldElement::operator*(const Rat& s) const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    require(!is_zero(), "division by zero field element");
    QPoly a{std::vector<Rat>(c_.begin(), c_.end())};
    QPoly m(field_->min_poly);
    QPoly u, v;
    QPoly g = qpoly_ext_gcd(a, m, u, v);
    require(g.degree() == 0, "element not invertible; field polynomial reducible?");
    // g is monic 1, so u*a = 1 (mod m)
    std::vector<Rat> c(u.coeffs());
    return FieldElement(field_, reduce_mod_field(std::move(c), field_->min_poly));
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement acc = from_rat(field_, 1);
    FieldElement b = *this;
    while (e) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

std::complex<double> FieldElement::to_complex() const {
    std::complex<double> t = field_->root.approx();
    std::complex<double> acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
    return acc;
}

mpf_class FieldElement::to_mpf(int prec_bits) const {
    require(field_->root.real, "high precision value of a non-real field root");
    auto [re, im] = root_mpf(field_->root, prec_bits);
    (void)im;
    mpf_class acc(0, prec_bits + 16);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * re;
        mpf_class term(0, prec_bits + 16);
        mpf_set_q(term.get_mpf_t(), c_[i].get_mpq_t());
        acc += term;
    }
    return acc;
}

std::string FieldElement::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rat m = rat_abs(a);
        if (m != 1 || i == 0) os << to_string(m);
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Polynomials with field coefficients, for the gcd that extracts embeddings.
using KPoly = std::vector<FieldElement>;

void ktrim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kmul(const KPoly& a, const KPoly& b, const FieldPtr& F) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, FieldElement::from_rat(F, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    ktrim(r);
    return r;
}

KPoly kmod(KPoly a, const KPoly& b) {
    FieldElement inv_lb = b.back().inverse();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        FieldElement c = a.back() * inv_lb;
        int k = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(k + j);
            a[idx] = a[idx] - c * b[static_cast<size_t>(j)];
        }
        ktrim(a);
    }
    return a;
}

KPoly kgcd(KPoly a, KPoly b) {
    while (!b.empty()) {
        KPoly r = kmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement inv = a.back().inverse();
        for (FieldElement& v : a) v = v * inv;
    }
    return a;
}

// f with integer coefficients evaluated at (c + s*y) over the field of c.
KPoly compose_linear_field(const IntPoly& f, const FieldElement& c, const Rat& s) {
    const FieldPtr& F = c.field();
    KPoly arg{c, FieldElement::from_rat(F, s)};
    KPoly acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = kmul(acc, arg, F);
        if (acc.empty()) acc.push_back(FieldElement::from_rat(F, 0));
        acc[0] = acc[0] + FieldElement::from_rat(F, Rat(f.coeff(i)));
        ktrim(acc);
    }
    return acc;
}

KPoly kfrom_int(const IntPoly& f, const FieldPtr& F) {
    KPoly r;
    r.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) r.push_back(FieldElement::from_rat(F, Rat(v)));
    ktrim(r);
    return r;
}

FieldElement eval_kpoly_int(const IntPoly& f, const FieldElement& x) {
    FieldElement acc = FieldElement::from_rat(x.field(), 0);
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + FieldElement::from_rat(x.field(), Rat(f.coeff(i)));
    return acc;
}

}  // namespace

Embeddings compositum(const FieldPtr& f1, const FieldPtr& f2) {
    const IntPoly& p1 = f1->min_poly;
    const IntPoly& p2 = f2->min_poly;
    int d1 = p1.degree(), d2 = p2.degree();

    for (int k = 1; k <= 60; ++k) {
        // R(x) = Res_y(p2(y), p1(x - k*y)) = prod over p2-roots b of p1(x - k*b),
        // monic of degree d1*d2, sampled and interpolated exactly.
        int dr = d1 * d2;
        std::vector<Int> xs, ys;
        xs.reserve(static_cast<size_t>(dr) + 1);
        ys.reserve(static_cast<size_t>(dr) + 1);
        bool ok = true;
        for (int t = 0; t <= dr; ++t) {
            IntPoly in_y = p1.compose_linear(Int(t), Int(-k));
            if (in_y.degree() != d1) { ok = false; break; }
            xs.emplace_back(t);
            ys.push_back(poly_resultant(p2, in_y));
        }
        if (!ok) continue;
        IntPoly R = interpolate_integer(xs, ys);
        if (poly_gcd(R, R.derivative()).degree() != 0) continue;

        // theta = root1 + k*root2; find the irreducible factor that owns it.
        RootSet rs = isolate_roots(R);
        const RootBox* owner = nullptr;
        int guard = 0;
        while (true) {
            QBox kb{QInterval::point(Rat(k)), QInterval::point(Rat(0))};
            QBox theta = f1->root.box + f2->root.box * kb;
            int hits = 0;
            for (const RootBox& cand : rs.roots)
                if (cand.box.intersects(theta)) {
                    ++hits;
                    owner = &cand;
                }
            if (hits == 1) break;
            Rat w1 = f1->root.box.width(), w2 = f2->root.box.width();
            refine_root(f1->root, w1 > 0 ? w1 / 2 : rat_pow2(-60));
            refine_root(f2->root, w2 > 0 ? w2 / 2 : rat_pow2(-60));
            require(++guard < 2000, "compositum root matching did not converge");
        }

        Embeddings out;
        out.k = k;
        out.field = make_field(owner->min_poly, *owner);

        // p2(y) and p1(theta - k*y) share the single root y = root2.
        FieldElement theta = FieldElement::generator(out.field);
        KPoly a = kfrom_int(p2, out.field);
        KPoly b = compose_linear_field(p1, theta, Rat(-k));
        KPoly g = kgcd(a, b);
        require(g.size() == 2, "embedding gcd is not linear");
        out.image2 = -(g[0] * g[1].inverse());
        out.image1 = theta - out.image2 * Rat(k);
        require(eval_kpoly_int(p1, out.image1).is_zero(), "embedded root fails its polynomial");
        require(eval_kpoly_int(p2, out.image2).is_zero(), "embedded root fails its polynomial");
        return out;
    }
    throw InternalError("no separating compositum parameter found");
}

bool express_in_power_basis(const FieldElement& target, const FieldElement& gen, int deg,
                            std::vector<Rat>& out) {
    require(target.field() == gen.field(), "field mismatch");
    int D = target.field()->degree();
    QMat m(D, deg);
    FieldElement p = FieldElement::from_rat(gen.field(), 1);
    for (int j = 0; j < deg; ++j) {
        for (int i = 0; i < D; ++i) m.at(i, j) = p.coords()[static_cast<size_t>(i)];
        p = p * gen;
    }
    std::vector<Rat> rhs(target.coords());
    return solve(m, rhs, out);
}

}  // namespace ss
