#include "ss/exact/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "ss/error.hpp"

namespace ss {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    require(!rows.empty(), "matrix needs at least one row");
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        require(static_cast<int>(rows[static_cast<size_t>(i)].size()) == m.cols(),
                "ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMat IntMat::operator+(const IntMat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
    IntMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

IntMat IntMat::operator-(const IntMat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
    IntMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    require(c_ == o.r_, "matrix shape mismatch");
    IntMat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

IntMat IntMat::operator*(const Int& s) const {
    IntMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMat IntMat::pow(unsigned e) const {
    require(r_ == c_, "matrix power needs a square matrix");
    IntMat acc = identity(r_);
    IntMat b = *this;
    while (e) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    require(static_cast<int>(v.size()) == c_, "vector length mismatch");
    std::vector<Int> r(static_cast<size_t>(r_), Int(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::vector<Int> IntMat::apply_left(const std::vector<Int>& w) const {
    require(static_cast<int>(w.size()) == r_, "vector length mismatch");
    std::vector<Int> r(static_cast<size_t>(c_), Int(0));
    for (int i = 0; i < r_; ++i) {
        const Int& wi = w[static_cast<size_t>(i)];
        if (wi == 0) continue;
        for (int j = 0; j < c_; ++j) r[static_cast<size_t>(j)] += wi * at(i, j);
    }
    return r;
}

bool IntMat::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < c_; ++j) {
            if (j) os << ", ";
            os << at(i, j).get_str();
        }
        os << "]" << (i + 1 == r_ ? "]" : "\n");
    }
    return os.str();
}

QMat::QMat(const IntMat& m) : QMat(m.rows(), m.cols()) {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) at(i, j) = Rat(m.at(i, j));
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator+(const QMat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QMat QMat::operator-(const QMat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    require(c_ == o.r_, "matrix shape mismatch");
    QMat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

QMat QMat::operator*(const Rat& s) const {
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

QMat QMat::transpose() const {
    QMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& v) const {
    require(static_cast<int>(v.size()) == c_, "vector length mismatch");
    std::vector<Rat> r(static_cast<size_t>(r_), Rat(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::string QMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < c_; ++j) {
            if (j) os << ", ";
            os << to_string(at(i, j));
        }
        os << "]" << (i + 1 == r_ ? "]" : "\n");
    }
    return os.str();
}

Int det(const IntMat& m) {
    require(m.rows() == m.cols(), "determinant needs a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                require(v % prev == 0, "Bareiss division not exact");
                a.at(i, j) = v / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntPoly charpoly(const IntMat& m) {
    require(m.rows() == m.cols(), "characteristic polynomial needs a square matrix");
    int n = m.rows();
    if (n == 0) return IntPoly{1};
    std::vector<Int> xs, ys;
    xs.reserve(static_cast<size_t>(n) + 1);
    ys.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        IntMat a = m * Int(-1);
        for (int i = 0; i < n; ++i) a.at(i, i) += k;
        xs.emplace_back(k);
        ys.push_back(det(a));
    }
    IntPoly p = interpolate_integer(xs, ys);
    require(p.degree() == n && p.lc() == 1, "characteristic polynomial must be monic");
    return p;
}

IntMat eval_poly_at(const IntPoly& p, const IntMat& m) {
    require(m.rows() == m.cols(), "polynomial of a matrix needs a square matrix");
    int n = m.rows();
    IntMat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < n; ++d) acc.at(d, d) += p.coeff(i);
    }
    return acc;
}

IntMat row_hnf(const IntMat& a, IntMat* u) {
    int nr = a.rows(), nc = a.cols();
    IntMat h = a;
    IntMat tr = IntMat::identity(nr);
    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < nc; ++k) std::swap(h.at(i, k), h.at(j, k));
        for (int k = 0; k < nr; ++k) std::swap(tr.at(i, k), tr.at(j, k));
    };
    auto add_multiple = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < nc; ++k) h.at(dst, k) += q * h.at(src, k);
        for (int k = 0; k < nr; ++k) tr.at(dst, k) += q * tr.at(src, k);
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < nc; ++k) h.at(i, k) = -h.at(i, k);
        for (int k = 0; k < nr; ++k) tr.at(i, k) = -tr.at(i, k);
    };

    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        // Euclidean elimination within the column below `row`.
        while (true) {
            int piv = -1;
            for (int i = row; i < nr; ++i)
                if (h.at(i, col) != 0 && (piv < 0 || abs(h.at(i, col)) < abs(h.at(piv, col))))
                    piv = i;
            if (piv < 0) break;
            swap_rows(row, piv);
            if (h.at(row, col) < 0) negate_row(row);
            bool clean = true;
            for (int i = row + 1; i < nr; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = int_fdiv(h.at(i, col), h.at(row, col));
                add_multiple(i, row, -q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (row < nr && h.at(row, col) != 0) {
            for (int i = 0; i < row; ++i) {
                Int q = int_fdiv(h.at(i, col), h.at(row, col));
                add_multiple(i, row, -q);
            }
            ++row;
        }
    }
    if (u) *u = tr;
    return h;
}

IntMat integer_left_kernel(const IntMat& a) {
    IntMat u;
    IntMat h = row_hnf(a, &u);
    int zero_from = h.rows();
    for (int i = h.rows(); i-- > 0;) {
        bool z = true;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { z = false; break; }
        if (!z) break;
        zero_from = i;
    }
    int k = h.rows() - zero_from;
    IntMat ker(std::max(k, 0), a.rows());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < a.rows(); ++j) ker.at(i, j) = u.at(zero_from + i, j);
    if (ker.rows() == 0) return ker;
    return row_hnf(ker, nullptr);
}

namespace {

// Reduced row echelon over Q; returns pivot column of each pivot row.
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const QMat& m) {
    QMat w = m;
    return static_cast<int>(rref(w).size());
}

std::vector<std::vector<Rat>> rational_right_kernel(const QMat& m) {
    QMat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<size_t>(pivots[pr])] = -w.at(static_cast<int>(pr), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    require(static_cast<int>(b.size()) == m.rows(), "rhs length mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(static_cast<size_t>(m.cols()), Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[static_cast<size_t>(pivots[pr])] = aug.at(static_cast<int>(pr), m.cols());
    return true;
}

}  // namespace ss
