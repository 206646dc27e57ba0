#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "alfkit/core.hpp"

namespace alfkit {

// Dense exact-integer matrix. Everything here is desk scale (<= a few dozen
// rows), so no attempt at sparsity or blocking.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw input_error("matrix shape mismatch");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += x * o(k, j);
            }
        return r;
    }

    IntMat operator-(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw input_error("matrix shape mismatch");
        IntMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    IntMat transpose() const {
        IntMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }
    // row[i] += q * row[j]
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(i, c) += q * (*this)(j, c);
    }
    // col[i] += q * col[j]
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, i) += q * (*this)(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

    // Bareiss would be overkill; expansion by minors is fine for the sizes
    // we see (determinant is only used to test unimodularity).
    Int determinant() const {
        if (rows_ != cols_) throw input_error("determinant of non-square");
        if (rows_ == 0) return 1;
        IntMat m = *this;
        std::size_t n = rows_;
        Int det = 1;
        // fraction-free Gaussian elimination
        Int prev = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            if (p != k) {
                m.swap_rows(p, k);
                det = -det;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            prev = m(k, k);
        }
        return det * m(n - 1, n - 1);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMat u;  // unimodular, rows x rows
    IntMat d;  // diagonal, d_i | d_{i+1}, d_i >= 0
    IntMat v;  // unimodular, cols x cols
};

// Smith normal form with transforms: d = u * m * v.
inline SmithResult smith_normal_form(const IntMat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SmithResult res{IntMat::identity(nr), m, IntMat::identity(nc)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    const std::size_t n = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix as pivot
            std::size_t pi = nr, pj = nc;
            Int best = 0;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (d(i, j) == 0) continue;
                    Int a = abs(d(i, j));
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing submatrix is zero
            if (pi != t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the rest of the submatrix
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t < n && d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
        if (d(t, t) == 0) break;  // all remaining diagonal entries are zero
    }
    return res;
}

}  // namespace alfkit
