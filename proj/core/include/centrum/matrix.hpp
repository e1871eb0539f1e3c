#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "centrum/scalar.hpp"

namespace centrum {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(const Vector& v);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return data_; }

    Vector col(std::size_t j) const;
    Vector row(std::size_t i) const;
    void set_col(std::size_t j, const Vector& v);
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    // Columns [c0, c0 + n).
    Matrix cols_range(std::size_t c0, std::size_t n) const { return block(0, c0, rows_, n); }
    bool is_zero() const;
    bool is_identity() const;

    Vector apply(const Vector& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix& operator+=(const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

// Permutation V⊗W -> W⊗V for dim V = m, dim W = n.
Matrix swap_matrix(std::size_t m, std::size_t n);

// Linear combination sum_i coeffs[i] * terms[i]; all terms share a shape.
Matrix combine(const Vector& coeffs, const std::vector<Matrix>& terms, std::size_t rows, std::size_t cols);

Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& a);
bool is_zero(const Vector& v);

// Row-major vectorization of an r x c matrix and back.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace centrum
