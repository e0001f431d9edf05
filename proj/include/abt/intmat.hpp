#pragma once

// Exact integer matrices and Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "abt/error.hpp"

namespace abt {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
        require(rows > 0 && cols > 0, errc::bad_argument, "matrix dimensions must be positive");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        IntMatrix m(rows.size(), rows.at(0).size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bigint& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const bigint& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        require(cols_ == o.rows_, errc::bad_argument, "dimension mismatch in matrix product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const bigint& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    // exact determinant, Bareiss fraction-free elimination
    bigint det() const {
        require(rows_ == cols_, errc::bad_argument, "determinant of non-square matrix");
        IntMatrix m(*this);
        std::size_t n = rows_;
        bigint prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t s = k + 1;
                while (s < n && m(s, k) == 0) ++s;
                if (s == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            prev = m(k, k);
        }
        return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<bigint> a_;
};

struct SmithResult {
    IntMatrix left;   // unimodular, rows x rows
    IntMatrix diag;   // rows x cols, diagonal, d_1 | d_2 | ..., nonnegative
    IntMatrix right;  // unimodular, cols x cols
};

// left * m * right == diag. Deterministic: the pivot is the nonzero entry of
// smallest absolute value in the remaining block, ties broken row-major.
inline SmithResult smith_normal_form(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    IntMatrix A(m), L(IntMatrix::identity(R)), Rt(IntMatrix::identity(C));

    auto row_sub = [&](std::size_t dst, std::size_t src, const bigint& f) {
        for (std::size_t j = 0; j < C; ++j) A(dst, j) -= f * A(src, j);
        for (std::size_t j = 0; j < R; ++j) L(dst, j) -= f * L(src, j);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const bigint& f) {
        for (std::size_t i = 0; i < R; ++i) A(i, dst) -= f * A(i, src);
        for (std::size_t i = 0; i < C; ++i) Rt(i, dst) -= f * Rt(i, src);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < C; ++c) std::swap(A(i, c), A(j, c));
        for (std::size_t c = 0; c < R; ++c) std::swap(L(i, c), L(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < R; ++r) std::swap(A(r, i), A(r, j));
        for (std::size_t r = 0; r < C; ++r) std::swap(Rt(r, i), Rt(r, j));
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t c = 0; c < C; ++c) A(i, c) = -A(i, c);
        for (std::size_t c = 0; c < R; ++c) L(i, c) = -L(i, c);
    };

    std::size_t n = std::min(R, C);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: min |value| nonzero in A[t.., t..], ties row-major
            std::size_t pi = R, pj = C;
            bigint best = 0;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j) {
                    if (A(i, j) == 0) continue;
                    bigint v = abs(A(i, j));
                    if (pi == R || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == R) { t = n; break; }  // remaining block is zero
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (A(i, t) == 0) continue;
                bigint f = A(i, t) / A(t, t);
                if (f != 0) row_sub(i, t, f);
                if (A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (A(t, j) == 0) continue;
                bigint f = A(t, j) / A(t, t);
                if (f != 0) col_sub(j, t, f);
                if (A(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: pivot must divide the rest of the block
            bool fixed = false;
            for (std::size_t i = t + 1; i < R && !fixed; ++i)
                for (std::size_t j = t + 1; j < C && !fixed; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        row_sub(t, i, bigint(-1));  // add row i to row t
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t >= n) break;
        if (A(t, t) < 0) row_neg(t);
    }
    return SmithResult{std::move(L), std::move(A), std::move(Rt)};
}

// invariant factors d_1 | d_2 | ... (all diagonal entries, zeros included)
inline std::vector<bigint> smith_invariants(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    std::size_t n = std::min(m.rows(), m.cols());
    std::vector<bigint> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.diag(i, i);
    return d;
}

}  // namespace abt
