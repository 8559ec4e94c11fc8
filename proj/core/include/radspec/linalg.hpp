#pragma once

#include "radspec/bigreal.hpp"

#include <cstddef>
#include <vector>

namespace radspec {

/// Dense matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = BigReal(1L);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigReal& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigReal& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigReal> a_;
};

/// Symmetric matrix; only the lower triangle is stored, so entry(i,j)
/// and entry(j,i) are the same object.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * (n + 1) / 2) {}

    std::size_t dim() const { return n_; }

    const BigReal& operator()(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, BigReal v) { a_[index(i, j)] = std::move(v); }

    Matrix dense() const {
        Matrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (j > i) std::swap(i, j);
        return i * (i + 1) / 2 + j;
    }

    std::size_t n_ = 0;
    std::vector<BigReal> a_;
};

/// Lower-triangular Cholesky factor L with S = L Lᵀ.
/// Throws NotPositiveDefinite on a non-positive pivot.
Matrix cholesky(const SymMatrix& s);

struct EigenResult {
    std::vector<BigReal> values;  // ascending
    Matrix vectors;               // column j is the eigenvector of values[j]
};

/// Cyclic Jacobi diagonalization of a symmetric matrix.
EigenResult sym_eigen(const SymMatrix& a, std::size_t max_sweeps = 64);

struct LogDet {
    int sign = 0;        // -1, 0, +1
    BigReal log_abs;     // natural log of |det|; meaningless when sign == 0
};

/// Determinant via LU with scaled partial pivoting, accumulated in log
/// space. A pivot (or final magnitude) below 2^(32 - precision) relative
/// to the row scales is reported as an exact zero (sign 0).
LogDet lu_logdet(Matrix m);

/// Solve L x = b (L lower triangular).
std::vector<BigReal> solve_lower(const Matrix& l, std::vector<BigReal> b);

/// Solve Lᵀ x = b (L lower triangular).
std::vector<BigReal> solve_lower_transposed(const Matrix& l, std::vector<BigReal> b);

}  // namespace radspec
