#include "ss/exact/roots.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "ss/error.hpp"
#include "ss/exact/factor.hpp"

namespace ss {

namespace {

int sgn(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact evaluation of p at a complex rational point.
std::pair<Rat, Rat> eval_complex(const IntPoly& p, const Rat& re, const Rat& im) {
    Rat ar(0), ai(0);
    for (int i = p.degree(); i >= 0; --i) {
        Rat nr = ar * re - ai * im + Rat(p.coeff(i));
        Rat ni = ar * im + ai * re;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

QBox intersect(const QBox& a, const QBox& b) {
    require(a.intersects(b), "empty box intersection");
    return {QInterval(std::max(a.re.lo, b.re.lo), std::min(a.re.hi, b.re.hi)),
            QInterval(std::max(a.im.lo, b.im.lo), std::min(a.im.hi, b.im.hi))};
}

// Interval Newton operator K(B) = mid - p(mid)/p'(B). When it lands strictly
// inside B, the box contains exactly one root of p.
bool newton_operator(const IntPoly& p, const IntPoly& dp, const QBox& B, QBox& K) {
    QBox d = box_eval(dp, B);
    if (!(d.norm2().lo > 0)) return false;
    Rat cr = B.re.mid(), ci = B.im.mid();
    auto [pr, pi] = eval_complex(p, cr, ci);
    K = box_point(cr, ci) - box_point(pr, pi) * d.inv();
    return true;
}

bool certify(const IntPoly& p, const IntPoly& dp, const QBox& B) {
    QBox K;
    return newton_operator(p, dp, B, K) && B.strictly_contains(K);
}

// One contraction step; falls back to halving toward the Newton image.
void contract_complex(const IntPoly& p, const IntPoly& dp, QBox& B) {
    QBox K;
    if (newton_operator(p, dp, B, K) && K.intersects(B)) {
        QBox next = intersect(K, B);
        if (next.width() < B.width()) {
            B = next;
            return;
        }
    }
    throw InternalError("complex root refinement stalled");
}

void refine_complex(const IntPoly& p, QBox& B, const Rat& target) {
    IntPoly dp = p.derivative();
    int guard = 0;
    while (B.width() > target) {
        contract_complex(p, dp, B);
        require(++guard < 20000, "complex refinement did not converge");
    }
}

// Sign-change bisection for a real isolating interval.
void refine_real(const IntPoly& p, QInterval& iv, const Rat& target) {
    if (iv.width() == 0) return;
    int slo = sgn(p.eval(iv.lo));
    require(slo != 0 && sgn(p.eval(iv.hi)) == -slo, "real interval lost its sign change");
    while (iv.width() > target) {
        Rat m = iv.mid();
        int sm = sgn(p.eval(m));
        require(sm != 0, "unexpected rational root during bisection");
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

// --- double precision seeding -------------------------------------------

std::vector<std::complex<double>> aberth(const IntPoly& f) {
    int n = f.degree();
    std::vector<double> c(static_cast<size_t>(n) + 1);
    double lc = f.lc().get_d();
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = f.coeff(i).get_d() / lc;
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<size_t>(i)]));
    double radius = 1.0 + bound;

    constexpr double kTau = 6.283185307179586;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = kTau * (k + 0.25) / n + 0.43;
        z[static_cast<size_t>(k)] = 0.7 * radius * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    auto horner = [&](std::complex<double> x, std::complex<double>& pv, std::complex<double>& dv) {
        pv = 0;
        dv = 0;
        for (int i = n; i >= 0; --i) {
            dv = dv * x + pv;
            pv = pv * x + c[static_cast<size_t>(i)];
        }
    };
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> pv, dv;
            horner(z[static_cast<size_t>(i)], pv, dv);
            if (dv == std::complex<double>(0, 0)) {
                z[static_cast<size_t>(i)] += 1e-6;
                worst = 1;
                continue;
            }
            std::complex<double> w = pv / dv;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> corr = w / (1.0 - w * s);
            z[static_cast<size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

struct MpfC {
    mpf_class re, im;
};

MpfC mpfc_mul(const MpfC& a, const MpfC& b) {
    return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}

MpfC mpfc_div(const MpfC& a, const MpfC& b) {
    mpf_class n2 = b.re * b.re + b.im * b.im;
    return {mpf_class((a.re * b.re + a.im * b.im) / n2),
            mpf_class((a.im * b.re - a.re * b.im) / n2)};
}

MpfC newton_polish(const IntPoly& f, std::complex<double> z0, int prec) {
    std::vector<mpf_class> c;
    c.reserve(f.coeffs().size());
    for (const Int& v : f.coeffs()) c.emplace_back(v, prec);
    MpfC z{mpf_class(z0.real(), prec), mpf_class(z0.imag(), prec)};
    for (int it = 0; it < 80; ++it) {
        MpfC pv{mpf_class(0, prec), mpf_class(0, prec)};
        MpfC dv{mpf_class(0, prec), mpf_class(0, prec)};
        for (size_t i = c.size(); i-- > 0;) {
            dv = mpfc_mul(dv, z);
            dv.re += pv.re;
            dv.im += pv.im;
            pv = mpfc_mul(pv, z);
            pv.re += c[i];
        }
        if (dv.re == 0 && dv.im == 0) break;
        MpfC step = mpfc_div(pv, dv);
        z.re -= step.re;
        z.im -= step.im;
    }
    return z;
}

Rat mpf_to_rat(const mpf_class& v) {
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), v.get_mpf_t());
    return q;
}

// Certify a complex candidate center with a sweep of box half-widths.
bool certify_center(const IntPoly& p, const IntPoly& dp, const Rat& cr, const Rat& ci, QBox& out) {
    for (long e : {30L, 42L, 56L, 80L, 110L, 150L}) {
        Rat h = rat_pow2(-e);
        QBox B{QInterval(cr - h, cr + h), QInterval(ci - h, ci + h)};
        if (certify(p, dp, B)) {
            out = B;
            return true;
        }
    }
    return false;
}

bool boxes_disjoint(const RootBox& a, const RootBox& b) { return !a.box.intersects(b.box); }

void refine_half(RootBox& rb) {
    Rat w = rb.box.width();
    if (w == 0) return;
    refine_root(rb, w / 2);
}

std::vector<RootBox> isolate_irreducible(const IntPoly& f) {
    int n = f.degree();
    require(n >= 1, "cannot isolate roots of a constant");
    std::vector<RootBox> out;
    if (n == 1) {
        Rat r = Rat(-f.coeff(0)) / Rat(f.coeff(1));
        RootBox rb;
        rb.min_poly = f;
        rb.box = box_point(r, Rat(0));
        rb.real = true;
        out.push_back(std::move(rb));
        return out;
    }

    std::vector<QInterval> real_ivs = isolate_real_roots(f);
    Rat w40 = rat_pow2(-40);
    for (QInterval& iv : real_ivs) {
        refine_real(f, iv, w40);
        RootBox rb;
        rb.min_poly = f;
        rb.box = QBox{iv, QInterval::point(Rat(0))};
        rb.real = true;
        out.push_back(std::move(rb));
    }

    int r = static_cast<int>(real_ivs.size());
    require((n - r) % 2 == 0, "complex roots must come in conjugate pairs");
    int pairs = (n - r) / 2;
    if (pairs > 0) {
        IntPoly dp = f.derivative();
        std::vector<std::complex<double>> seeds = aberth(f);
        std::sort(seeds.begin(), seeds.end(),
                  [](const std::complex<double>& a, const std::complex<double>& b) {
                      return a.imag() > b.imag();
                  });
        int made = 0;
        for (const std::complex<double>& s : seeds) {
            if (made == pairs) break;
            if (s.imag() <= 0) break;
            MpfC z = newton_polish(f, s, 320);
            Rat cr = mpf_to_rat(z.re), ci = mpf_to_rat(z.im);
            QBox B;
            if (!certify_center(f, dp, cr, ci, B)) continue;
            if (!(B.im.lo > 0)) continue;
            bool dup = false;
            for (const RootBox& prev : out)
                if (!prev.real && prev.box.im.lo > 0 && prev.box.intersects(B)) dup = true;
            if (dup) continue;
            RootBox up;
            up.min_poly = f;
            up.box = B;
            up.real = false;
            RootBox down = up;
            down.box.im = QInterval(-B.im.hi, -B.im.lo);
            out.push_back(std::move(up));
            out.push_back(std::move(down));
            ++made;
        }
        require(made == pairs, "failed to certify every conjugate pair");
    }

    // Separate any touching enclosures, then order canonically.
    bool again = true;
    int guard = 0;
    while (again) {
        again = false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j) {
                if (boxes_disjoint(out[i], out[j])) continue;
                refine_half(out[i]);
                refine_half(out[j]);
                again = true;
            }
        require(++guard < 300, "root enclosures failed to separate");
    }
    return out;
}

void sort_roots(std::vector<RootBox>& roots) {
    std::sort(roots.begin(), roots.end(), [](const RootBox& a, const RootBox& b) {
        if (a.box.re.lo != b.box.re.lo) return a.box.re.lo < b.box.re.lo;
        if (a.box.re.hi != b.box.re.hi) return a.box.re.hi < b.box.re.hi;
        return a.box.im.lo < b.box.im.lo;
    });
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
    QPoly f(p);
    QPoly g(p.derivative());
    chain_.push_back(f);
    while (!g.is_zero()) {
        chain_.push_back(g);
        QPoly q, r;
        qpoly_divmod(f, g, q, r);
        f = g;
        g = -r;
    }
    require(chain_.back().degree() == 0, "Sturm chain of a non-squarefree polynomial");
}

int SturmChain::variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const QPoly& s : chain_) {
        int sg = sgn(s.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

int SturmChain::count(const Rat& a, const Rat& b) const {
    require(a <= b, "interval endpoints out of order");
    return variations(a) - variations(b);
}

Rat cauchy_root_bound(const IntPoly& p) {
    require(p.degree() >= 1, "root bound needs positive degree");
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = rat_abs(Rat(p.coeff(i)) / Rat(p.lc()));
        if (v > m) m = v;
    }
    return m + 1;
}

std::vector<QInterval> isolate_real_roots(const IntPoly& p) {
    require(p.degree() >= 1, "cannot isolate roots of a constant");
    SturmChain chain(p);
    Rat bound = cauchy_root_bound(p);
    std::vector<QInterval> out;
    std::vector<QInterval> todo;
    int total = chain.count(-bound, bound);
    if (total == 0) return out;
    todo.emplace_back(-bound, bound);
    int guard = 0;
    while (!todo.empty()) {
        require(++guard < 100000, "real root isolation did not terminate");
        QInterval iv = todo.back();
        todo.pop_back();
        int c = chain.count(iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        Rat m = iv.mid();
        if (p.eval(m) == 0) {
            // Rational root exactly at the midpoint: shave off a point
            // interval and keep counting on both sides.
            Rat d = iv.width() / 64;
            while (chain.count(m - d, m + d) != 1) d /= 2;
            out.push_back(QInterval::point(m));
            todo.emplace_back(iv.lo, m - d);
            todo.emplace_back(m + d, iv.hi);
            continue;
        }
        todo.emplace_back(iv.lo, m);
        todo.emplace_back(m, iv.hi);
    }
    require(static_cast<int>(out.size()) == total, "real root isolation lost roots");
    std::sort(out.begin(), out.end(), [](const QInterval& a, const QInterval& b) { return a.lo < b.lo; });
    // Bisection can leave neighbours sharing an endpoint; shrink until the
    // enclosures are strictly disjoint as closed intervals.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        QInterval& left = out[i];
        QInterval& right = out[i + 1];
        if (left.hi < right.lo) continue;
        Rat t = left.hi;
        require(right.lo == t, "isolating intervals overlap");
        if (p.eval(t) == 0) left = QInterval::point(t);
        int inner = 0;
        while (right.lo == t) {
            require(++inner < 100000, "interval separation did not terminate");
            Rat m = right.mid();
            if (chain.count(right.lo, m) == 1) right.hi = m;
            else right.lo = m;
        }
        require(left.hi < right.lo, "interval separation failed");
    }
    return out;
}

RootSet isolate_roots(const IntPoly& p) {
    require(p.degree() >= 1, "cannot isolate roots of a constant");
    RootSet rs;
    rs.poly = p.primitive_part();
    std::vector<Factor> fs = factor(rs.poly);
    std::vector<RootBox> all;
    for (const Factor& f : fs) {
        require(f.multiplicity == 1, "root isolation needs a squarefree polynomial");
        std::vector<RootBox> part = isolate_irreducible(f.poly);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    // Roots of distinct irreducible factors are distinct; separate enclosures.
    bool again = true;
    int guard = 0;
    while (again) {
        again = false;
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) {
                if (boxes_disjoint(all[i], all[j])) continue;
                refine_half(all[i]);
                refine_half(all[j]);
                again = true;
            }
        require(++guard < 300, "root enclosures failed to separate");
    }
    sort_roots(all);
    rs.roots = std::move(all);
    return rs;
}

void refine_root(RootBox& rb, const Rat& target) {
    if (rb.box.width() <= target) return;
    if (rb.real) {
        QInterval iv = rb.box.re;
        refine_real(rb.min_poly, iv, target);
        rb.box.re = iv;
    } else {
        refine_complex(rb.min_poly, rb.box, target);
    }
}

std::pair<mpf_class, mpf_class> root_mpf(RootBox& rb, int prec_bits) {
    refine_root(rb, rat_pow2(-(prec_bits + 8)));
    mpf_class re(0, prec_bits + 16), im(0, prec_bits + 16);
    mpf_set_q(re.get_mpf_t(), Rat(rb.box.re.mid()).get_mpq_t());
    mpf_set_q(im.get_mpf_t(), Rat(rb.box.im.mid()).get_mpq_t());
    return {re, im};
}

namespace {

// Decide |root| vs 1 by norm refinement; valid only when they differ.
Cmp decide_off_circle(RootBox& rb) {
    int guard = 0;
    while (true) {
        QInterval n2 = rb.box.norm2();
        if (n2.hi < 1) return Cmp::LT;
        if (n2.lo > 1) return Cmp::GT;
        refine_half(rb);
        require(++guard < 2000, "modulus comparison did not separate from 1");
    }
}

bool is_palindromic(const IntPoly& p) { return p == p.reversed(); }

// For palindromic p of even degree 2d, the polynomial q of degree d with
// p(x) = x^d q(x + 1/x), built from x^k + x^-k = T_k(x + 1/x).
IntPoly half_trace_poly(const IntPoly& p) {
    int d = p.degree() / 2;
    IntPoly q = IntPoly::constant(p.coeff(d));
    IntPoly t_prev{2};
    IntPoly t_cur = IntPoly::x();
    for (int k = 1; k <= d; ++k) {
        q = q + t_cur * p.coeff(d + k);
        IntPoly t_next = IntPoly::x() * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return q;
}

}  // namespace

Cmp modulus_vs_one(RootBox& rb) {
    const IntPoly& p = rb.min_poly;
    if (p == IntPoly{-1, 1} || p == IntPoly{1, 1}) return Cmp::EQ;
    if (p.degree() == 1) {
        // root = -c0/c1 rational
        Rat r = rat_abs(Rat(-p.coeff(0)) / Rat(p.coeff(1)));
        return r < 1 ? Cmp::LT : (r > 1 ? Cmp::GT : Cmp::EQ);
    }
    if (!is_palindromic(p)) return decide_off_circle(rb);

    require(p.degree() % 2 == 0, "irreducible palindromic polynomial of odd degree");
    IntPoly q = half_trace_poly(p);
    RootSet qs = isolate_roots(q);

    // y = root + 1/root is a root of q; match it to exactly one enclosure.
    int guard = 0;
    while (true) {
        require(++guard < 2000, "trace matching did not converge");
        if (rb.box.norm2().lo == 0) {
            refine_half(rb);
            continue;
        }
        QBox y = rb.box + rb.box.inv();
        int hits = 0;
        RootBox* hit = nullptr;
        for (RootBox& cand : qs.roots) {
            if (cand.box.intersects(y)) {
                ++hits;
                hit = &cand;
            }
        }
        require(hits >= 1, "trace image missed all enclosures");
        if (hits > 1) {
            refine_half(rb);
            continue;
        }
        if (!hit->real) return decide_off_circle(rb);
        // |root| = 1 iff the trace is real in (-2, 2); q(+-2) != 0 since
        // p(+-1) != 0 for irreducible p of degree >= 2.
        QInterval iv = hit->box.re;
        int g2 = 0;
        while (true) {
            if (iv.lo > -2 && iv.hi < 2) return Cmp::EQ;
            if (iv.hi < -2 || iv.lo > 2) return decide_off_circle(rb);
            refine_real(hit->min_poly, iv, iv.width() / 2);
            require(++g2 < 2000, "trace interval did not separate from +-2");
        }
    }
}

Cmp compare_real_roots(RootBox& a, RootBox& b) {
    require(a.real && b.real, "real comparison needs real roots");
    if (a.min_poly == b.min_poly && a.box.re.lo == b.box.re.lo && a.box.re.hi == b.box.re.hi)
        return Cmp::EQ;
    int guard = 0;
    while (true) {
        if (a.box.re.hi < b.box.re.lo) return Cmp::LT;
        if (b.box.re.hi < a.box.re.lo) return Cmp::GT;
        refine_half(a);
        refine_half(b);
        require(++guard < 2000, "real roots did not separate");
    }
}

Cmp compare_real_root_with(RootBox& a, const Rat& v) {
    require(a.real, "real comparison needs a real root");
    if (a.box.width() == 0)
        return a.box.re.lo < v ? Cmp::LT : (a.box.re.lo > v ? Cmp::GT : Cmp::EQ);
    if (a.min_poly.eval(v) == 0 && a.box.re.contains(v)) return Cmp::EQ;
    int guard = 0;
    while (true) {
        if (a.box.re.hi < v) return Cmp::LT;
        if (a.box.re.lo > v) return Cmp::GT;
        refine_half(a);
        require(++guard < 2000, "real root did not separate from the rational");
    }
}

}  // namespace ss
