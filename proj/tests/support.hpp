#pragma once

// Shared fixtures and test-only oracles. Nothing here calls the routines it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "msc/oracle.hpp"
#include "msc/structure.hpp"

namespace msc::test {

inline const FieldDescriptor Q = FieldDescriptor::rationals();

inline StructureMatrix two_dim_example(FieldDescriptor f = Q) {
    return StructureMatrix(Matrix(f, {{0, 0, 1, -1}, {1, 0, 1, 0}}));
}

inline StructureMatrix one_dim(std::int64_t a, FieldDescriptor f = Q) { return StructureMatrix(Matrix(f, {{a}})); }

inline Scalar s(std::int64_t v, FieldDescriptor f = Q) { return Scalar(f, v); }

inline Scalar frac(long num, long den) { return Scalar(Q, mpq_class(mpz_class(num), mpz_class(den))); }

// Leibniz formula: sum over permutations. Independent of elimination.
inline Scalar leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Scalar total(m.field());
    do {
        Scalar term = Scalar::one(m.field());
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m(i, perm[i]);
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Entry-wise definition of the Kronecker product.
inline Matrix kron_by_definition(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out.set(r, c, a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols()));
        }
    }
    return out;
}

// Product of basis coordinates straight from the structure constants:
// (x*y)_k = sum_{i,j} a_{ij}^k x_i y_j.
inline Matrix product_by_constants(const StructureMatrix& a, const Matrix& x, const Matrix& y) {
    const std::size_t n = a.dim();
    Matrix out(n, 1, a.field());
    for (std::size_t k = 0; k < n; ++k) {
        Scalar acc(a.field());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) acc += a.coefficient(i, j, k) * x(i, 0) * y(j, 0);
        }
        out.set(k, 0, acc);
    }
    return out;
}

inline Matrix column(FieldDescriptor f, std::initializer_list<std::int64_t> values) {
    Matrix out(values.size(), 1, f);
    std::size_t i = 0;
    for (std::int64_t v : values) out.set(i++, 0, Scalar(f, v));
    return out;
}

}  // namespace msc::test
