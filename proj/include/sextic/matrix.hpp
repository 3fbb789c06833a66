#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector axpy(const Scalar& a, const Vector& x, const Vector& y); // a*x + y
Vector scaled(const Scalar& a, const Vector& x);
std::string to_string(const Vector& v);

// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    void set_row(std::size_t i, const Vector& v);
    void append_row(const Vector& v);
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator-() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool operator==(const Matrix& o) const;

    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

// Row rank. Fraction-free (Bareiss) over Q, plain elimination over F_p.
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix adjugate(const Matrix& m);

struct Echelon {
    Matrix reduced; // nonzero rows only, RREF
    std::vector<std::size_t> pivots;
};
Echelon rref(const Matrix& m);

} // namespace sextic
