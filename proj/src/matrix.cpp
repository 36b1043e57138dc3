#include "cateig/matrix.hpp"

#include "cateig/errors.hpp"

#include <sstream>

namespace cateig {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(ring, rows.size(), ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw ShapeMismatch("ragged matrix literal");
        std::size_t c = 0;
        for (long v : row) m(r, c++) = Scalar(ring, v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_columns(Ring ring, std::size_t rows, const std::vector<Matrix>& columns) {
    Matrix m(ring, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].rows() != rows || columns[c].cols() != 1) throw ShapeMismatch("column has wrong shape");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c](r, 0);
    }
    return m;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeMismatch("block out of range");
    Matrix m(ring_, nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (!(m.ring_ == ring_)) throw RingMismatch();
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeMismatch("block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix m(ring_, rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& s = (*this)(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

Matrix Matrix::change_ring(Ring target) const {
    Matrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = Scalar(target, data_[i].value());
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix sum of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix difference of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& s : m.data_) s = -s;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
    if (a.cols_ != b.rows_) {
        throw ShapeMismatch("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix m(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
            }
        }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x = s * x;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << "]";
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack of different heights");
    Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack of different widths");
    Matrix m(a.ring(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

}  // namespace cateig
