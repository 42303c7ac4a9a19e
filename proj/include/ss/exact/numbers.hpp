#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ss {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// Floor division (GMP's operator/ truncates toward zero).
inline Int int_fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& a, unsigned long e) {
    Rat r(1);
    Rat base = a;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

// 2^e as a rational, e may be negative.
inline Rat rat_pow2(long e) {
    Rat r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace ss
