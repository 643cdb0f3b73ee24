#pragma once

/*
 * Matrix of structure constants (MSC).
 *
 * An n-dimensional algebra with basis e_1..e_n and products
 *     e_i * e_j = sum_k a_{ij}^k e_k
 * is stored as the n x n^2 row-block A = (A_1 | A_2 | ... | A_n) where
 *     A_i(k, j) = a_{ij}^k        (0-based: column i*n + j, row k).
 * Then x*y = A (x (x) y) for coordinate columns x, y, and a basis change g
 * sends A to g A (g^-1 (x) g^-1).
 *
 * The opposite MSC collects right multiplications: A°_k(i, j) = a_{jk}^i,
 * and x*y = A° (y (x) x).
 */

#include <cstddef>

#include "msc/matrix.hpp"

namespace msc {

class StructureMatrix {
public:
    // Validates the n x n^2 shape.
    explicit StructureMatrix(Matrix data);

    static StructureMatrix zero(std::size_t n, FieldDescriptor field);

    std::size_t dim() const noexcept { return data_.rows(); }
    const FieldDescriptor& field() const noexcept { return data_.field(); }
    const Matrix& data() const noexcept { return data_; }

    // a_{ij}^k, 0-based.
    const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const;

    friend bool operator==(const StructureMatrix&, const StructureMatrix&) = default;

private:
    Matrix data_;
};

// Row of `width` square n x n blocks. Generalises StructureMatrix for the
// block powers A^[k] (width n^k) and for non-square reshapings.
class RowBlock {
public:
    RowBlock(Matrix data, std::size_t block_size);
    explicit RowBlock(const StructureMatrix& a);

    std::size_t block_size() const noexcept { return data_.rows(); }
    std::size_t width() const noexcept { return block_size() == 0 ? 0 : data_.cols() / block_size(); }
    const Matrix& data() const noexcept { return data_; }
    Matrix block(std::size_t i) const;

    friend bool operator==(const RowBlock&, const RowBlock&) = default;

private:
    Matrix data_;
};

// 0-based block A_i; IndexOutOfRange unless i < n.
Matrix block(const StructureMatrix& a, std::size_t i);

StructureMatrix opposite(const StructureMatrix& a);

// g A (g^-1 (x) g^-1). Singular if g is not invertible.
StructureMatrix act(const Matrix& g, const StructureMatrix& a);

// A (x (x) y) for column vectors x, y.
Matrix evaluate_product(const StructureMatrix& a, const Matrix& x, const Matrix& y);
// A° (y (x) x); equal to evaluate_product for every a, x, y.
Matrix evaluate_product_opposite(const StructureMatrix& a, const Matrix& x, const Matrix& y);

// Largest k accepted by block_power for blocks of size n: n + 1. The width
// of A^[k] is n^k, so this bounds the work at n^(n+1) block products.
std::size_t block_power_cap(std::size_t n) noexcept;

// A^[1] = A, A^[k] = (A_1 A^[k-1] | ... | A_w A^[k-1]).
RowBlock block_power(const RowBlock& a, std::size_t k);
RowBlock block_power(const StructureMatrix& a, std::size_t k);

// Row vector (tr(A_1), ..., tr(A_w)).
Matrix trbar(const RowBlock& rb);
Matrix trbar(const StructureMatrix& a);

}  // namespace msc
