#pragma once

#include <optional>
#include <vector>

#include "symalg/error.hpp"
#include "symalg/rational.hpp"

namespace symalg {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill = R(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes differ");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from column count");
        std::vector<R> out(rows_, R(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

// Fraction-free determinant (Bareiss). The ring needs +, -, * and an exact
// division div(a, b) that is only ever called when b divides a.
template <class R, class Div>
R bareiss_determinant(Matrix<R> m, Div div) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == R(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == R(0)) ++p;
            if (p == n) return R(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(R(0) - d) : d;
}

Rational determinant(const QMatrix& m);
std::size_t rank(const QMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

// Some solution of A x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

std::optional<QMatrix> inverse(const QMatrix& m);

// Basis of {x : A x = 0}.
std::vector<QVector> nullspace(const QMatrix& a);

}  // namespace symalg
