#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cornerkit/error.hpp"

namespace cornerkit {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw Error("IntMatrix: entry count mismatch");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("IntMatrix: dimension mismatch in product");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    /// row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

struct SnfResult {
    IntMatrix U; ///< unimodular rows x rows
    IntMatrix D; ///< diagonal, d_1 | d_2 | ..., entries >= 0
    IntMatrix V; ///< unimodular cols x cols

    std::size_t rank() const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D.at(i, i) != 0) ++r;
        return r;
    }
    std::vector<Int> invariant_factors() const {
        std::vector<Int> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D.at(i, i) != 0) out.push_back(D.at(i, i));
        return out;
    }
};

/// Smith normal form U*A*V = D with a fixed pivot rule: smallest nonzero
/// absolute value, ties broken by lowest (row, col).
inline SnfResult smith_normal_form(const IntMatrix& A) {
    SnfResult res{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const std::size_t r = A.rows(), c = A.cols();

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        // pivot selection
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (D.at(i, j) == 0) continue;
                Int a = abs(D.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) {
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
        }
        if (pj != t) {
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);
        }

        for (;;) {
            // clear column t
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                if (q != 0) {
                    D.add_row(i, t, -q);
                    U.add_row(i, t, -q);
                }
                if (D.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // clear row t
            for (std::size_t j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                if (q != 0) {
                    D.add_col(j, t, -q);
                    V.add_col(j, t, -q);
                }
                if (D.at(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row(t, i, 1);
                        U.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }
    for (std::size_t t = 0; t < std::min(r, c); ++t)
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    return res;
}

/// True iff the n given n-vectors form a basis of Z^n (|det| = 1).
inline bool is_unimodular_basis(const std::vector<std::vector<Int>>& vectors) {
    const std::size_t n = vectors.size();
    if (n == 0) return true;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (vectors[i].size() != n)
            throw Error("is_unimodular_basis: expected " + std::to_string(n) +
                        " vectors of length " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
    }
    return abs(determinant(m)) == 1;
}

/// True iff the gcd of the entries is 1.  Errors on the zero vector.
inline bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw Error("is_primitive: zero vector");
    return g == 1;
}

/// Basis of the saturated kernel lattice {x : A x = 0}, as columns of an
/// m x k matrix.  Columns are normalized so their first nonzero entry is
/// positive.
inline IntMatrix kernel_basis(const IntMatrix& A) {
    SnfResult snf = smith_normal_form(A);
    const std::size_t m = A.cols();
    const std::size_t rank = snf.rank();
    IntMatrix K(m, m - rank);
    for (std::size_t j = rank; j < m; ++j) {
        // find sign of first nonzero entry of column j of V
        int sign = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (snf.V.at(i, j) != 0) {
                sign = snf.V.at(i, j) > 0 ? 1 : -1;
                break;
            }
        }
        for (std::size_t i = 0; i < m; ++i) K.at(i, j - rank) = sign * snf.V.at(i, j);
    }
    return K;
}

} // namespace cornerkit
