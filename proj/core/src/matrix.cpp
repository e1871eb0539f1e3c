#include "centrum/matrix.hpp"

#include <ostream>

#include "centrum/errors.hpp"

namespace centrum {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ShapeError("matrix entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_col(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
    return true;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].add_product((*this)(i, j), v[j]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    return c += b;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!b.data_[k].is_zero()) data_[k] += b.data_[k];
    return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        if (!b.data_[k].is_zero()) c.data_[k] -= b.data_[k];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j).add_product(x, y);
            }
        }
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return c;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
    }
    return c;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw ShapeError("hstack row mismatch");
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, c0 + j) = b(i, j);
        c0 += b.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t cols = blocks.front().cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw ShapeError("vstack column mismatch");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return m;
}

Matrix swap_matrix(std::size_t m, std::size_t n) {
    Matrix s(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = 1;
    return s;
}

Matrix combine(const Vector& coeffs, const std::vector<Matrix>& terms, std::size_t rows, std::size_t cols) {
    if (coeffs.size() != terms.size()) throw ShapeError("coefficient count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!coeffs[i].is_zero()) m += coeffs[i] * terms[i];
    return m;
}

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("vector sum length mismatch");
    Vector c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vector scale(const Scalar& s, const Vector& a) {
    Vector c = a;
    for (auto& x : c) x *= s;
    return c;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector vec(const Matrix& m) { return m.entries(); }

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, v); }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

}  // namespace centrum
