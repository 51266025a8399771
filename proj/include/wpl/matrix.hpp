#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact integer matrices.
 *
 * Holds Euler, Cartan, Coxeter and relation matrices. Besides ring
 * operations it provides a fraction-free determinant, inversion of
 * unimodular matrices and the Smith normal form with its unimodular
 * transforms.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace wpl {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Integer& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }
    const Integer& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_unit_upper_triangular() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, i) != 1) return false;
            for (std::size_t j = 0; j < i; ++j)
                if ((*this)(i, j) != 0) return false;
        }
        return true;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_shape(b);
        IntegerMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }

    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_shape(b);
        IntegerMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }

    friend IntegerMatrix operator-(const IntegerMatrix& a) {
        IntegerMatrix r = a;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntegerMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    /// Matrix times column vector.
    std::vector<Integer> apply(const std::vector<Integer>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<Integer> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
    }
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }
    void require_same_shape(const IntegerMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntegerMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
inline std::vector<Integer> leading_principal_minors(const IntegerMatrix& m) {
    std::vector<Integer> minors;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        IntegerMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        minors.push_back(determinant(std::move(sub)));
    }
    return minors;
}

/**
 * Integral inverse of a unimodular matrix.
 *
 * Unit upper triangular input is inverted by back-substitution; any other
 * square input goes through rational Gauss-Jordan and must have
 * determinant +-1. Throws inversion_error otherwise.
 */
inline IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
    if (!m.is_square()) throw inversion_error("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    if (m.is_unit_upper_triangular()) {
        IntegerMatrix inv = IntegerMatrix::identity(n);
        // Column j of the inverse solves m * x = e_j, bottom row first.
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = j; i-- > 0;) {
                Integer acc = 0;
                for (std::size_t k = i + 1; k <= j; ++k) acc += m(i, k) * inv(k, j);
                inv(i, j) = -acc;
            }
        return inv;
    }
    const Integer det = determinant(m);
    if (det != 1 && det != -1)
        throw inversion_error("matrix is not unimodular (determinant " + det.str() + ")");

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv_p = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv_p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    IntegerMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = boost::multiprecision::numerator(a[i][n + j]);
    return inv;
}

inline IntegerMatrix power(const IntegerMatrix& m, unsigned k) {
    IntegerMatrix result = IntegerMatrix::identity(m.rows());
    IntegerMatrix base = m;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/**
 * Smith normal form: left * input * right == diagonal, with left and right
 * unimodular and the nonzero diagonal entries d_1 | d_2 | ... positive.
 */
struct SmithForm {
    IntegerMatrix left;
    IntegerMatrix diagonal;
    IntegerMatrix right;

    /// Nonzero diagonal entries in order.
    std::vector<Integer> elementary_divisors() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
            if (diagonal(i, i) != 0) d.push_back(diagonal(i, i));
        return d;
    }
};

inline SmithForm smith_normal_form(const IntegerMatrix& input) {
    using boost::multiprecision::abs;
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    SmithForm s{IntegerMatrix::identity(m), input, IntegerMatrix::identity(n)};
    IntegerMatrix& d = s.diagonal;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Bring the smallest nonzero entry of the trailing block to (t, t).
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {i, j};
            if (!best) return s;
            if (best->first != t) {
                d.swap_rows(t, best->first);
                s.left.swap_rows(t, best->first);
            }
            if (best->second != t) {
                d.swap_cols(t, best->second);
                s.right.swap_cols(t, best->second);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                const Integer q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                s.left.add_row(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                const Integer q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                s.right.add_col(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block.
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < m && !offending_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offending_row = i;
                        break;
                    }
            if (offending_row) {
                d.add_row(t, *offending_row, 1);
                s.left.add_row(t, *offending_row, 1);
                continue;
            }
            if (d(t, t) < 0) {
                d.negate_row(t);
                s.left.negate_row(t);
            }
            break;
        }
    }
    return s;
}

} // namespace wpl
