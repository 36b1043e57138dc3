#pragma once

#include "cateig/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cateig {

/// Dense row-major matrix over a single coefficient ring.
///
/// 0 x n and n x 0 matrices are legal; they are the zero maps to and from the
/// zero module.
class Matrix {
public:
    Matrix() : ring_(Ring::integers()) {}
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }
    static Matrix identity(Ring ring, std::size_t n);
    static Matrix from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
    /// Builds a matrix whose columns are the given column vectors (each rows x 1).
    static Matrix from_columns(Ring ring, std::size_t rows, const std::vector<Matrix>& columns);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix column(std::size_t c) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix columns(const std::vector<std::size_t>& idx) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Entrywise image under the canonical map into `target` (Z -> Q, Z -> F_p).
    Matrix change_ring(Ring target) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix operator-() const;
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace cateig
