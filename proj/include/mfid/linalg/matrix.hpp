#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfid/exact/ratpoly.hpp"
#include "mfid/field.hpp"

namespace mfid {

/// Dense row-major matrix over an exact field.
template <CoefficientField K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(field_traits<K>::zero_like(zero)), a_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const K& like) {
        Matrix m(n, n, like);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<K>::one_like(like);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& zero() const { return zero_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same(y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same(y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(x.rows_, y.cols_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (field_traits<K>::is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c;
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        std::vector<K> r(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    /// Determinant by Gaussian elimination (pivot on any nonzero entry).
    K determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
        Matrix m = *this;
        K det = field_traits<K>::one_like(zero_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && field_traits<K>::is_zero(m(p, c))) ++p;
            if (p == rows_) return zero_;
            if (p != c) {
                m.swap_rows(p, c);
                det = -det;
            }
            det = det * m(c, c);
            const K inv = field_traits<K>::inv(m(c, c));
            for (std::size_t r = c + 1; r < rows_; ++r) {
                if (field_traits<K>::is_zero(m(r, c))) continue;
                const K f = m(r, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) m(r, j) = m(r, j) - f * m(c, j);
            }
        }
        return det;
    }

    /// Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && field_traits<K>::is_zero((*this)(p, c))) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            const K inv = field_traits<K>::inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_traits<K>::is_zero((*this)(i, c))) continue;
                const K f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of the right kernel.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, zero_);
            v[free] = field_traits<K>::one_like(zero_);
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Solves this * x = b for square nonsingular matrices.
    std::vector<K> solve(const std::vector<K>& b) const {
        if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve: bad dimensions");
        Matrix aug(rows_, cols_ + 1, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (pivots.size() != rows_ || pivots.back() != cols_ - 1) throw std::domain_error("solve: singular matrix");
        std::vector<K> x;
        for (std::size_t i = 0; i < rows_; ++i) x.push_back(aug(i, cols_));
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
        Matrix aug(rows_, 2 * cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = field_traits<K>::one_like(zero_);
        }
        auto pivots = aug.rref();
        if (pivots.size() < rows_ || pivots[rows_ - 1] != rows_ - 1) return std::nullopt;
        Matrix inv(rows_, cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// Characteristic polynomial det(xI - M), ascending coefficients, by Faddeev-LeVerrier.
    std::vector<K> charpoly_coeffs() const {
        if (rows_ != cols_) throw std::invalid_argument("charpoly: matrix not square");
        const std::size_t n = rows_;
        std::vector<K> c(n + 1, zero_);
        c[n] = field_traits<K>::one_like(zero_);
        Matrix mk(n, n, zero_);  // M_0 = 0
        const Matrix id = identity(n, zero_);
        for (std::size_t k = 1; k <= n; ++k) {
            mk = (*this) * mk + c[n - k + 1] * id;
            K tr = zero_;
            const Matrix am = (*this) * mk;
            for (std::size_t i = 0; i < n; ++i) tr = tr + am(i, i);
            c[n - k] = -(tr * field_traits<K>::from_rational_like(zero_, Rational(1, static_cast<long>(k))));
        }
        return c;
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
    }
    void check_same(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    std::size_t rows_, cols_;
    K zero_;
    std::vector<K> a_;
};

using RatMatrix = Matrix<Rational>;

inline RatPoly charpoly(const RatMatrix& m) { return RatPoly(m.charpoly_coeffs()); }

}  // namespace mfid
