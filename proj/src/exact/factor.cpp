#include "ss/exact/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ss/error.hpp"

namespace ss {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for small primes, dense int64 coefficients in [0, p).

using PPoly = std::vector<int64_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

int64_t pinv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "not invertible mod p");
    return ((t % p) + p) % p;
}

PPoly pmul(const PPoly& a, const PPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

PPoly psub(PPoly a, const PPoly& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    ptrim(a);
    return a;
}

// Remainder of a mod b, b nonzero.
PPoly pmod(PPoly a, const PPoly& b, int64_t p) {
    int db = pdeg(b);
    int64_t inv_lb = pinv(b.back(), p);
    while (pdeg(a) >= db) {
        int64_t c = a.back() * inv_lb % p;
        int k = pdeg(a) - db;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(k + j);
            a[idx] = ((a[idx] - c * b[static_cast<size_t>(j)]) % p + p) % p;
        }
        ptrim(a);
    }
    return a;
}

PPoly pdivexact(PPoly a, const PPoly& b, int64_t p) {
    int db = pdeg(b);
    int64_t inv_lb = pinv(b.back(), p);
    PPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (pdeg(a) >= db) {
        int64_t c = a.back() * inv_lb % p;
        int k = pdeg(a) - db;
        q[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(k + j);
            a[idx] = ((a[idx] - c * b[static_cast<size_t>(j)]) % p + p) % p;
        }
        ptrim(a);
    }
    require(a.empty(), "expected exact division mod p");
    ptrim(q);
    return q;
}

PPoly pgcd(PPoly a, PPoly b, int64_t p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int64_t inv = pinv(a.back(), p);
        for (int64_t& v : a) v = v * inv % p;
    }
    return a;
}

PPoly pderiv(const PPoly& a, int64_t p) {
    if (a.size() <= 1) return {};
    PPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (static_cast<int64_t>(i) % p) % p;
    ptrim(r);
    return r;
}

PPoly reduce_mod_p(const IntPoly& f, int64_t p) {
    PPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Int m = f.coeffs()[i] % Int(static_cast<long>(p));
        long v = m.get_si();
        r[i] = ((v % p) + p) % p;
    }
    ptrim(r);
    return r;
}

PPoly ppowmod(PPoly base, Int e, const PPoly& m, int64_t p) {
    PPoly r{1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree f over F_p.
// Returns the monic irreducible factors.
std::vector<PPoly> berlekamp(const PPoly& f, int64_t p) {
    int n = pdeg(f);
    if (n <= 1) return {f};

    // Frobenius matrix: column j holds x^(jp) mod f.
    PPoly xp = ppowmod(PPoly{0, 1}, Int(static_cast<long>(p)), f, p);
    std::vector<PPoly> cols(static_cast<size_t>(n));
    cols[0] = PPoly{1};
    for (int j = 1; j < n; ++j) cols[static_cast<size_t>(j)] = pmod(pmul(cols[static_cast<size_t>(j - 1)], xp, p), f, p);

    // B = Q - I, row i, col j.
    std::vector<std::vector<int64_t>> B(static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        const PPoly& cj = cols[static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i) {
            int64_t v = i <= pdeg(cj) ? cj[static_cast<size_t>(i)] : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            B[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    }

    // Nullspace of B over F_p.
    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(static_cast<size_t>(n), false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (B[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(B[static_cast<size_t>(row)], B[static_cast<size_t>(piv)]);
        int64_t inv = pinv(B[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            B[static_cast<size_t>(row)][static_cast<size_t>(j)] =
                B[static_cast<size_t>(row)][static_cast<size_t>(j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            int64_t fct = B[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (fct == 0) continue;
            for (int j = 0; j < n; ++j) {
                int64_t& v = B[static_cast<size_t>(i)][static_cast<size_t>(j)];
                v = ((v - fct * B[static_cast<size_t>(row)][static_cast<size_t>(j)]) % p + p) % p;
            }
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[static_cast<size_t>(col)] = true;
        ++row;
    }
    std::vector<PPoly> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (col_is_pivot[static_cast<size_t>(free_col)]) continue;
        PPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2) {
            int64_t val = B[r2][static_cast<size_t>(free_col)];
            v[static_cast<size_t>(pivot_col_of_row[r2])] = ((-val) % p + p) % p;
        }
        ptrim(v);
        basis.push_back(std::move(v));
    }

    size_t r_target = basis.size();  // number of irreducible factors
    std::vector<PPoly> factors{f};
    if (r_target <= 1) return factors;
    for (const PPoly& v : basis) {
        if (pdeg(v) < 1) continue;  // the constant vector never splits
        for (int64_t c = 0; c < p && factors.size() < r_target; ++c) {
            PPoly vc = v;
            if (vc.empty()) vc = {0};
            vc[0] = ((vc[0] - c) % p + p) % p;
            ptrim(vc);
            std::vector<PPoly> next;
            for (const PPoly& u : factors) {
                if (pdeg(u) <= 1) { next.push_back(u); continue; }
                PPoly g = pgcd(u, vc, p);
                if (pdeg(g) > 0 && pdeg(g) < pdeg(u)) {
                    next.push_back(g);
                    next.push_back(pdivexact(u, g, p));
                } else {
                    next.push_back(u);
                }
            }
            factors = std::move(next);
        }
        if (factors.size() >= r_target) break;
    }
    require(factors.size() == r_target, "Berlekamp split incomplete");
    return factors;
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/M)[x] with canonical coefficients in [0, M).

using MPoly = std::vector<Int>;

void mtrim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int mreduce(const Int& v, const Int& M) {
    Int r = v % M;
    if (r < 0) r += M;
    return r;
}

MPoly mfrom(const IntPoly& f, const Int& M) {
    MPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = mreduce(f.coeffs()[i], M);
    mtrim(r);
    return r;
}

MPoly mfrom_p(const PPoly& f, const Int& M) {
    MPoly r(f.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = mreduce(Int(static_cast<long>(f[i])), M);
    mtrim(r);
    return r;
}

MPoly mreduce_poly(const MPoly& a, const Int& M) {
    MPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mreduce(a[i], M);
    mtrim(r);
    return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Int& M) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return mreduce_poly(r, M);
}

MPoly madd(MPoly a, const MPoly& b, const Int& M) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return mreduce_poly(a, M);
}

MPoly msub(MPoly a, const MPoly& b, const Int& M) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return mreduce_poly(a, M);
}

// Division by a monic divisor.
void mdivmod(const MPoly& a, const MPoly& b, const Int& M, MPoly& q, MPoly& r) {
    require(!b.empty() && b.back() == 1, "divisor must be monic");
    r = a;
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(r.size()) - 1;
    q.assign(da >= db ? static_cast<size_t>(da - db) + 1 : 0, Int(0));
    for (int i = da; i >= db; --i) {
        Int c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(i - db + j);
            r[idx] = mreduce(r[idx] - c * b[static_cast<size_t>(j)], M);
        }
    }
    mtrim(q);
    mtrim(r);
}

// Map to symmetric representatives in (-M/2, M/2].
IntPoly msymmetric(const MPoly& a, const Int& M) {
    std::vector<Int> c(a.size());
    Int half = M / 2;
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] > half ? Int(a[i] - M) : a[i];
    return IntPoly(std::move(c));
}

struct HenselPair {
    MPoly g, h, s, t;
};

// One quadratic lifting step: modulus M -> M^2 (f monic; h monic).
HenselPair hensel_step(const MPoly& f_mod, const HenselPair& in, const Int& M) {
    Int M2 = M * M;
    MPoly g = mreduce_poly(in.g, M2), h = mreduce_poly(in.h, M2);
    MPoly s = mreduce_poly(in.s, M2), t = mreduce_poly(in.t, M2);
    MPoly e = msub(f_mod, mmul(g, h, M2), M2);
    MPoly q, r;
    mdivmod(mmul(s, e, M2), h, M2, q, r);
    MPoly g2 = madd(madd(g, mmul(t, e, M2), M2), mmul(q, g, M2), M2);
    MPoly h2 = madd(h, r, M2);
    MPoly b = msub(madd(mmul(s, g2, M2), mmul(t, h2, M2), M2), MPoly{Int(1)}, M2);
    MPoly c, d;
    mdivmod(mmul(s, b, M2), h2, M2, c, d);
    MPoly s2 = msub(s, d, M2);
    MPoly t2 = msub(msub(t, mmul(t, b, M2), M2), mmul(c, g2, M2), M2);
    return {g2, h2, s2, t2};
}

// Extended gcd over F_p returning s, t with s*a + t*b = 1.
void pbezout(const PPoly& a, const PPoly& b, int64_t p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b;
    PPoly s0{1}, s1{};
    PPoly t0{}, t1{1};
    while (!r1.empty()) {
        PPoly q = pdivexact(psub(r0, pmod(r0, r1, p), p), r1, p);
        PPoly r2 = pmod(r0, r1, p);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    require(pdeg(r0) == 0, "expected coprime polynomials");
    int64_t inv = pinv(r0[0], p);
    for (int64_t& v : s0) v = v * inv % p;
    for (int64_t& v : t0) v = v * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// Lift the factorization f = prod(parts) from mod p to mod target = p^K.
// f monic mod target, parts monic mod p, pairwise coprime mod p.
void lift_tree(const MPoly& f_target, const std::vector<PPoly>& parts, size_t lo, size_t hi,
               int64_t p, const Int& target, std::vector<MPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f_target);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    PPoly g0{1}, h0{1};
    for (size_t i = lo; i < mid; ++i) g0 = pmul(g0, parts[i], p);
    for (size_t i = mid; i < hi; ++i) h0 = pmul(h0, parts[i], p);
    PPoly s0, t0;
    pbezout(g0, h0, p, s0, t0);

    Int M(static_cast<long>(p));
    HenselPair cur{mfrom_p(g0, M), mfrom_p(h0, M), mfrom_p(s0, M), mfrom_p(t0, M)};
    while (M < target) {
        Int M2 = M * M;
        cur = hensel_step(mreduce_poly(f_target, M2), cur, M);
        M = M2;
    }
    MPoly g_t = mreduce_poly(cur.g, target);
    MPoly h_t = mreduce_poly(cur.h, target);
    lift_tree(g_t, parts, lo, mid, p, target, out);
    lift_tree(h_t, parts, mid, hi, p, target, out);
}

const int64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,  47,  53,
                           59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

// Factor a primitive squarefree monic polynomial of degree >= 2.
std::vector<IntPoly> factor_squarefree_monic(const IntPoly& f) {
    int n = f.degree();

    // Pick the usable prime with the fewest modular factors among a few
    // candidates; a single modular factor proves irreducibility outright.
    struct Choice {
        int64_t p = 0;
        std::vector<PPoly> factors;
    };
    Choice best;
    int tried = 0;
    for (int64_t p : kPrimes) {
        PPoly fp = reduce_mod_p(f, p);
        if (pdeg(fp) != n) continue;  // never happens for monic f, kept for safety
        PPoly g = pgcd(fp, pderiv(fp, p), p);
        if (pdeg(g) != 0) continue;  // not squarefree mod p
        std::vector<PPoly> fs = berlekamp(fp, p);
        if (fs.size() == 1) return {f};
        if (best.p == 0 || fs.size() < best.factors.size()) best = {p, std::move(fs)};
        if (++tried >= 3) break;
    }
    require(best.p != 0, "no usable prime for factorization");

    // Coefficient bound for monic divisors, then lift beyond twice that.
    Int maxc = f.max_abs_coeff();
    Int bound = Int(n + 1) * int_pow(Int(2), static_cast<unsigned>(n)) * maxc;
    Int target(static_cast<long>(best.p));
    while (target <= 2 * bound) target *= Int(static_cast<long>(best.p));

    std::vector<MPoly> lifted;
    std::sort(best.factors.begin(), best.factors.end(),
              [](const PPoly& a, const PPoly& b) { return a.size() < b.size(); });
    lift_tree(mfrom(f, target), best.factors, 0, best.factors.size(), best.p, target, lifted);

    // Subset recombination with symmetric representatives.
    std::vector<IntPoly> result;
    IntPoly rem = f;
    std::vector<MPoly> pool = std::move(lifted);
    size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(take);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            MPoly prod{Int(1)};
            for (size_t i : idx) prod = mmul(prod, pool[i], target);
            IntPoly cand = msymmetric(prod, target);
            IntPoly q;
            if (!cand.is_zero() && poly_try_divide(rem, cand, q)) {
                result.push_back(cand);
                rem = q;
                std::vector<MPoly> next_pool;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == pool.size() - take + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t j = static_cast<size_t>(pos) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (rem.degree() > 0) result.push_back(rem);
    return result;
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    if (f.lc() == 1) return factor_squarefree_monic(f);

    // Monicize: g(x) = l^(n-1) f(x/l) is monic with coefficient of x^i
    // equal to f_i * l^(n-1-i); pull factors back through x -> l*x.
    Int l = f.lc();
    int n = f.degree();
    std::vector<Int> gc(static_cast<size_t>(n) + 1);
    gc[static_cast<size_t>(n)] = 1;
    for (int i = 0; i < n; ++i) gc[static_cast<size_t>(i)] = f.coeff(i) * int_pow(l, static_cast<unsigned>(n - 1 - i));
    IntPoly g(std::move(gc));
    std::vector<IntPoly> gf = factor_squarefree_monic(g);
    std::vector<IntPoly> out;
    for (const IntPoly& h : gf) {
        // h(l*x), primitive part
        std::vector<Int> hc(h.coeffs());
        Int pw = 1;
        for (size_t i = 0; i < hc.size(); ++i) {
            hc[i] *= pw;
            pw *= l;
        }
        out.push_back(IntPoly(std::move(hc)).primitive_part());
    }
    return out;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const IntPoly& p) {
    require(!p.is_zero(), "cannot decompose the zero polynomial");
    IntPoly f = p.primitive_part();
    std::vector<Factor> out;
    if (f.degree() == 0) return out;
    IntPoly d = poly_gcd(f, f.derivative());
    IntPoly b, c;
    require(poly_try_divide(f, d, b), "Yun: gcd must divide");
    require(poly_try_divide(f.derivative(), d, c), "Yun: gcd must divide derivative");
    IntPoly z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, z);
        if (a.degree() > 0) out.push_back({a, i});
        IntPoly nb, nz;
        require(poly_try_divide(b, a, nb), "Yun: factor must divide");
        require(poly_try_divide(z, a, nz), "Yun: factor must divide");
        b = nb;
        z = nz - b.derivative();
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    std::vector<Factor> parts = squarefree_decomposition(p);
    IntPoly r{1};
    for (const Factor& f : parts) r = r * f.poly;
    return r;
}

std::vector<Factor> factor(const IntPoly& p) {
    require(!p.is_zero(), "cannot factor the zero polynomial");
    std::vector<Factor> out;
    IntPoly f = p.primitive_part();
    if (f.degree() <= 0) return out;

    // Strip powers of x first so constant terms are nonzero below.
    int xmult = 0;
    while (f.coeff(0) == 0) {
        std::vector<Int> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = IntPoly(std::move(c));
        ++xmult;
    }
    if (xmult > 0) out.push_back({IntPoly::x(), xmult});

    for (const Factor& sq : squarefree_decomposition(f)) {
        for (const IntPoly& irr : factor_squarefree(sq.poly))
            out.push_back({irr, sq.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        return poly_less(a.poly, b.poly);
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() <= 0) return false;
    std::vector<Factor> f = factor(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& m) {
    require(!m.is_zero() && m.lc() == 1, "modulus must be monic");
    std::vector<Int> r(a.coeffs());
    int dm = m.degree();
    while (static_cast<int>(r.size()) - 1 >= dm) {
        Int c = r.back();
        size_t k = r.size() - 1 - static_cast<size_t>(dm);
        if (c != 0)
            for (int j = 0; j <= dm; ++j) r[k + static_cast<size_t>(j)] -= c * m.coeff(j);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= static_cast<size_t>(dm)) break;
    }
    return IntPoly(std::move(r));
}

IntPoly pow_x_mod_monic(const Int& e, const IntPoly& m) {
    IntPoly base = poly_mod_monic(IntPoly::x(), m);
    IntPoly acc{1};
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = poly_mod_monic(acc * base, m);
        base = poly_mod_monic(base * base, m);
        k >>= 1;
    }
    return acc;
}

namespace {

int euler_phi(int m) {
    int r = m;
    for (int q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        r -= r / q;
    }
    if (m > 1) r -= r / m;
    return r;
}

}  // namespace

int cyclotomic_order(const IntPoly& p) {
    int d = p.degree();
    if (d < 1) return 0;
    IntPoly f = p.primitive_part();
    if (f.lc() != 1) return 0;
    // phi(m) = d forces m <= 2 d^2 comfortably in this range.
    int limit = std::max(6, 2 * d * d + 2);
    for (int m = 1; m <= limit; ++m) {
        if (euler_phi(m) != d) continue;
        IntPoly rem = pow_x_mod_monic(Int(m), f);
        if (rem == IntPoly{1}) return m;
    }
    return 0;
}

}  // namespace ss
