#ifndef CONTACT_MATRIX_HPP
#define CONTACT_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "contact/rational.hpp"

namespace contact {

// Dense matrix over the Gaussian rationals; only desk-scale sizes appear.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, GaussianRational()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const GaussianRational& v = at(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::size_t rank() const {
        Matrix m(*this);
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            GaussianRational inv = m.at(r, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, col).is_zero()) continue;
                GaussianRational f = m.at(i, col);
                for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        std::size_t n = rows_;
        Matrix m(*this);
        Matrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw std::domain_error("singular matrix");
            m.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            GaussianRational s = m.at(col, col).inverse();
            for (std::size_t j = 0; j < n; ++j) {
                m.at(col, j) *= s;
                inv.at(col, j) *= s;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || m.at(i, col).is_zero()) continue;
                GaussianRational f = m.at(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) -= f * m.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    // solve A x = b; A must be invertible
    std::vector<GaussianRational> solve(const std::vector<GaussianRational>& b) const {
        Matrix inv = inverse();
        std::vector<GaussianRational> x(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) x[i] += inv.at(i, j) * b[j];
        return x;
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }

    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

}  // namespace contact

#endif
