#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "msc/field.hpp"

namespace msc {

// Dense row-major matrix of scalars over a single field. Value type;
// equality is exact entry-wise comparison.
class Matrix {
public:
    Matrix() = default;
    // Zero matrix.
    Matrix(std::size_t rows, std::size_t cols, FieldDescriptor field);
    // Integer literal rows, mapped into the field. All rows must have equal length.
    Matrix(FieldDescriptor field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n, FieldDescriptor field);
    static Matrix column(std::span<const Scalar> values);
    static Matrix row_vector(std::span<const Scalar> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldDescriptor& field() const noexcept { return field_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const noexcept;

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const;
    // Throws MixedFields if value lives in another field.
    void set(std::size_t r, std::size_t c, Scalar value);
    std::span<const Scalar> entries() const noexcept { return entries_; }

    Matrix row(std::size_t r) const;
    Matrix col(std::size_t c) const;
    Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t height, std::size_t width) const;
    void set_submatrix(std::size_t row0, std::size_t col0, const Matrix& block);
    Matrix transpose() const;
    void swap_rows(std::size_t a, std::size_t b);

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
    friend Matrix operator*(const Scalar& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

    friend bool operator==(const Matrix& lhs, const Matrix& rhs);

    // "[[a,b],[c,d]]" with scalars in token syntax.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldDescriptor field_;
    std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
// Block (i,j) of the result is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(std::span<const Matrix> parts);
Matrix vstack(std::span<const Matrix> parts);

// Bareiss fraction-free elimination over Q (after clearing denominators
// row by row), Gaussian elimination over GF(p).
Scalar det(const Matrix& m);
// Gauss-Jordan; Singular when det = 0.
Matrix inverse(const Matrix& m);
Scalar trace(const Matrix& m);

struct RowEchelon {
    Matrix reduced;                  // reduced row-echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

// Pivot rule everywhere: first nonzero entry in the current column.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0} as the rows of a matrix in reduced row-echelon
// form (cols() = m.cols(), rows() = nullity).
Matrix nullspace(const Matrix& m);

}  // namespace msc
