#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "motives/rational.hpp"

namespace motives {

/// Dense exact-rational matrix, row-major. Immutable by convention: every
/// operation returns a fresh value, so matrices can be shared freely
/// between threads.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("ragged initializer");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RationalMatrix operator+(const RationalMatrix& o) const {
        check_same_shape(o);
        RationalMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    RationalMatrix operator-(const RationalMatrix& o) const {
        check_same_shape(o);
        RationalMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    RationalMatrix operator-() const {
        RationalMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rational& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
        RationalMatrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
        return r;
    }

private:
    void check_same_shape(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

namespace detail {

inline Integer exact_div(const Integer& n, const Integer& d) {
    Integer q, r;
    divide_qr(n, d, q, r);
    if (r != 0) throw Error("internal: inexact division in fraction-free elimination");
    return q;
}

// Clear denominators row by row; returns the integer matrix and the
// positive scale applied to each row.
inline std::pair<std::vector<std::vector<Integer>>, std::vector<Integer>>
integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    std::vector<Integer> scale(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator_of(m(i, j)));
        scale[i] = l;
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = numerator_of(m(i, j)) * (l / denominator_of(m(i, j)));
    }
    return {std::move(a), std::move(scale)};
}

}  // namespace detail

/*
 * Fraction-free (Bareiss) elimination. Rational input is first scaled to an
 * integer matrix row by row; pivoting picks the first nonzero entry, so the
 * result is deterministic. The single-step update
 *     m[i][j] <- (pivot*m[i][j] - m[i][k]*m[k][j]) / previous_pivot
 * keeps every intermediate value an integer minor of the input, which bounds
 * coefficient growth far better than plain rational elimination.
 */
inline std::size_t rank(const RationalMatrix& m) {
    auto [a, scale] = detail::integer_rows(m);
    (void)scale;  // row scaling does not change the rank
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        const Integer p = a[pr][col];
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = detail::exact_div(p * a[i][j] - a[i][col] * a[pr][j], prev);
            a[i][col] = 0;
        }
        prev = p;
        ++pr;
    }
    return pr;
}

/// Exact inverse by fraction-free Gauss-Jordan on [A | I]: after the last
/// pivot the left block is det'*I and the right block det'*A^{-1}.
/// Throws SingularMatrix when the determinant vanishes.
inline RationalMatrix invert(const RationalMatrix& m) {
    if (!m.is_square()) throw ShapeMismatch("invert: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;

    auto [rows, scale] = detail::integer_rows(m);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n + i] = 1;
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw SingularMatrix("singular matrix has no inverse");
        std::swap(a[k], a[piv]);
        const Integer p = a[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a[i][j] = detail::exact_div(p * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = 0;
        }
        prev = p;
    }

    // a = [det'*I | det'*A_scaled^{-1}]; undo the row scaling column-wise.
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = make_rational(a[i][n + j] * scale[j], prev);
    return inv;
}

/// Solves A*X = B exactly by rational elimination. Returns nullopt when the
/// system is inconsistent; throws RankDeficient when A has dependent columns
/// (the solution would not be unique).
inline std::optional<RationalMatrix> solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_exact shape mismatch");
    const std::size_t n = a.rows(), r = a.cols(), s = b.cols();
    RationalMatrix w(n, r + s);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) w(i, j) = a(i, j);
        for (std::size_t j = 0; j < s; ++j) w(i, r + j) = b(i, j);
    }
    std::size_t pr = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < r && pr < n; ++col) {
        std::size_t piv = pr;
        while (piv < n && w(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != pr)
            for (std::size_t j = 0; j < r + s; ++j) std::swap(w(pr, j), w(piv, j));
        const Rational p = w(pr, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pr || w(i, col) == 0) continue;
            const Rational f = w(i, col) / p;
            for (std::size_t j = col; j < r + s; ++j) w(i, j) -= f * w(pr, j);
        }
        pivot_col.push_back(col);
        ++pr;
    }
    if (pr < r) throw RankDeficient("solve_exact: coefficient matrix has dependent columns");
    for (std::size_t i = pr; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (w(i, r + j) != 0) return std::nullopt;
    RationalMatrix x(r, s);
    for (std::size_t k = 0; k < pr; ++k)
        for (std::size_t j = 0; j < s; ++j) x(pivot_col[k], j) = w(k, r + j) / w(k, pivot_col[k]);
    return x;
}

inline RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
    RationalMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

}  // namespace motives
