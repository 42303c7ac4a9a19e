#pragma once

#include <string>

#include "ss/exact/numbers.hpp"
#include "ss/exact/poly.hpp"

namespace ss {

// Closed rational interval [lo, hi].
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat a, Rat b);
    static QInterval point(const Rat& v) { return QInterval(v, v); }

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_contains(const QInterval& o) const { return lo < o.lo && o.hi < hi; }
    bool intersects(const QInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    QInterval operator+(const QInterval& o) const { return QInterval(lo + o.lo, hi + o.hi); }
    QInterval operator-(const QInterval& o) const { return QInterval(lo - o.hi, hi - o.lo); }
    QInterval operator-() const { return QInterval(-hi, -lo); }
    QInterval operator*(const QInterval& o) const;
    QInterval sq() const;  // tighter than (*this) * (*this)

    // Reciprocal; requires 0 outside the interval.
    QInterval inv() const;

    std::string str() const;
};

// Axis-aligned rational rectangle in C.
struct QBox {
    QInterval re, im;

    QBox() = default;
    QBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains(const QBox& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool strictly_contains(const QBox& o) const {
        return re.strictly_contains(o.re) && im.strictly_contains(o.im);
    }
    bool intersects(const QBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    Rat width() const { return re.width() > im.width() ? re.width() : im.width(); }

    QBox operator+(const QBox& o) const { return {re + o.re, im + o.im}; }
    QBox operator-(const QBox& o) const { return {re - o.re, im - o.im}; }
    QBox operator*(const QBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    // |z|^2 as an interval.
    QInterval norm2() const { return re.sq() + im.sq(); }

    // Reciprocal 1/z; requires 0 strictly outside (norm2 interval positive).
    QBox inv() const;

    std::string str() const;
};

QBox box_point(const Rat& re, const Rat& im);

// Interval Horner evaluation of p over the rectangle.
QBox box_eval(const IntPoly& p, const QBox& z);

}  // namespace ss
