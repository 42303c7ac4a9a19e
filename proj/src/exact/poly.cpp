#include "ss/exact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ss/error.hpp"

namespace ss {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs_low_to_high) {
    c_.reserve(coeffs_low_to_high.size());
    for (long v : coeffs_low_to_high) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(Int a) {
    IntPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(Int a, int deg) {
    IntPoly p;
    if (a != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
        p.c_.back() = std::move(a);
    }
    return p;
}

const Int& IntPoly::coeff(int i) const {
    static const Int kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::lc() const {
    require(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& v : c_) r.c_.push_back(-v);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& a) const {
    if (a == 0) return IntPoly();
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& v : c_) r.c_.push_back(v * a);
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly{1};
    IntPoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& v : c_) g = int_gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const Int& v : c_) r.c_.push_back(v / g);
    return r;
}

Int IntPoly::eval(const Int& v) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& v) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + Rat(c_[i]);
    return acc;
}

double IntPoly::eval_double(double v) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i].get_d();
    return acc;
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_linear(const Int& c, const Int& s) const {
    // Horner in the argument c + s*y.
    IntPoly arg({c, s});
    IntPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * arg + constant(c_[i]);
    return acc;
}

Int IntPoly::max_abs_coeff() const {
    Int m = 0;
    for (const Int& v : c_) {
        Int a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Int m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    const Int& lb = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        IntPoly t = IntPoly::monomial(a.lc(), k) * b;
        a = a * lb - t;
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    Int cont = int_gcd(a.content(), b.content());
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g).primitive_part();
        f = g;
        g = r;
    }
    return f.primitive_part() * cont;
}

Int poly_resultant(const IntPoly& a, const IntPoly& b) {
    // Euclidean recursion over Q with per-step content stripping:
    //   res(f,g) = (-1)^(df*dg) * lc(g)^(df-dr) * s^dg * res(g,R)
    // where f mod g = s*R with R integral and primitive. Degrees here stay
    // small, so rational growth is a non-issue and correctness is plain.
    if (a.is_zero() || b.is_zero()) return 0;
    IntPoly f = a, g = b;
    Rat acc = 1;
    if (f.degree() < g.degree()) {
        std::swap(f, g);
        if ((f.degree() & 1) && (g.degree() & 1)) acc = -acc;
    }
    while (g.degree() > 0) {
        QPoly q, r;
        qpoly_divmod(QPoly(f), QPoly(g), q, r);
        if (r.is_zero()) return 0;
        Int den = r.denominator_lcm();
        IntPoly r_int = r.scaled_integer();
        Int cont = r_int.content();
        std::vector<Int> cs(r_int.coeffs());
        for (Int& v : cs) v /= cont;
        IntPoly R(std::move(cs));
        Rat s = Rat(cont) / Rat(den);
        if ((f.degree() & 1) && (g.degree() & 1)) acc = -acc;
        acc *= rat_pow(Rat(g.lc()), f.degree() - R.degree());
        acc *= rat_pow(s, g.degree());
        f = g;
        g = R;
    }
    acc *= rat_pow(Rat(g.lc()), f.degree());
    require(rat_den(acc) == 1, "resultant accumulated a non-integer value");
    return rat_num(acc);
}

IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    require(xs.size() == ys.size() && !xs.empty(), "interpolation needs matching nonempty data");
    size_t n = xs.size();
    // Newton's divided differences over Q, then expand.
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rat denom = Rat(xs[i] - xs[i - level]);
            dd[i] = (dd[i] - dd[i - 1]) / denom;
            if (i == level) break;
        }
    }
    QPoly acc = QPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        QPoly lin(IntPoly({-xs[i], Int(1)}));
        acc = acc * lin + QPoly::constant(dd[i]);
    }
    require(acc.denominator_lcm() == 1, "interpolated polynomial is not integral");
    return acc.scaled_integer();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c_.emplace_back(v);
    trim();
}

QPoly QPoly::constant(Rat a) {
    QPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

const Rat& QPoly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rat& QPoly::lc() const {
    require(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r;
    r.c_.reserve(c_.size());
    for (const Rat& v : c_) r.c_.push_back(-v);
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& a) const {
    if (a == 0) return QPoly();
    QPoly r;
    r.c_.reserve(c_.size());
    for (const Rat& v : c_) r.c_.push_back(v * a);
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    return *this * (Rat(1) / lc());
}

Rat QPoly::eval(const Rat& v) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

Int QPoly::denominator_lcm() const {
    Int l = 1;
    for (const Rat& v : c_) l = int_lcm(l, rat_den(v));
    return l;
}

IntPoly QPoly::scaled_integer() const {
    Int l = denominator_lcm();
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const Rat& v : c_) {
        Rat s = v * Rat(l);
        require(rat_den(s) == 1, "scaled coefficient not integral");
        r.push_back(rat_num(s));
    }
    return IntPoly(std::move(r));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Rat m = rat_abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) {
        q = QPoly();
        r = QPoly(std::move(rem));
        return;
    }
    std::vector<Rat> quot(static_cast<size_t>(da - db) + 1, Rat(0));
    Rat inv_lb = Rat(1) / b.lc();
    for (int i = da; i >= db; --i) {
        Rat c = rem[static_cast<size_t>(i)] * inv_lb;
        if (c == 0) continue;
        quot[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly q, r;
        qpoly_divmod(f, g, q, r);
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

QPoly qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = QPoly::constant(1), u1;
    QPoly v0, v1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly u2 = u0 - q * u1;
        QPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) {
        u = QPoly();
        v = QPoly();
        return QPoly();
    }
    Rat s = Rat(1) / r0.lc();
    u = u0 * s;
    v = v0 * s;
    return r0 * s;
}

bool poly_try_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    require(!b.is_zero(), "polynomial division by zero");
    if (a.is_zero()) {
        q = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    QPoly qq, rr;
    qpoly_divmod(QPoly(a), QPoly(b), qq, rr);
    if (!rr.is_zero()) return false;
    if (qq.denominator_lcm() != 1) return false;
    q = qq.scaled_integer();
    return true;
}

}  // namespace ss
