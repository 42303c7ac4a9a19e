#pragma once

#include <string>
#include <vector>

#include "ss/exact/numbers.hpp"
#include "ss/exact/poly.hpp"

namespace ss {

// Row-major dense integer matrix.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator*(const Int& s) const;
    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    IntMat transpose() const;
    IntMat pow(unsigned e) const;  // square only
    std::vector<Int> apply(const std::vector<Int>& v) const;       // M * v
    std::vector<Int> apply_left(const std::vector<Int>& w) const;  // w * M

    bool is_zero() const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// Row-major dense rational matrix, used for eigenspace work.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    explicit QMat(const IntMat& m);
    static QMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat operator*(const Rat& s) const;
    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    QMat transpose() const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

Int det(const IntMat& m);  // fraction-free Bareiss elimination

// Characteristic polynomial det(x*I - M), monic of degree n. Evaluated by
// integer determinants at n+1 points and recovered by interpolation.
IntPoly charpoly(const IntMat& m);

// p(M) for integer p.
IntMat eval_poly_at(const IntPoly& p, const IntMat& m);

// Row Hermite normal form. Returns H (same shape, rows of zeros at the
// bottom) and sets U to a unimodular matrix with U*A = H. Pivots positive,
// entries above a pivot reduced into [0, pivot).
IntMat row_hnf(const IntMat& a, IntMat* u = nullptr);

// Basis of { w integer row : w * A = 0 }, rows in HNF. The lattice is
// automatically saturated (any rational solution scales into it).
IntMat integer_left_kernel(const IntMat& a);

int rank(const QMat& m);

// Basis (as columns) of the right null space of M over Q.
std::vector<std::vector<Rat>> rational_right_kernel(const QMat& m);

// Solve M x = b over Q; returns false when inconsistent.
bool solve(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x);

}  // namespace ss
