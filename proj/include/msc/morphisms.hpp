#pragma once

#include <string>
#include <vector>

#include "msc/structure.hpp"

namespace msc {

// g invertible and act(g, a) = a.
bool is_automorphism(const StructureMatrix& a, const Matrix& g);

struct AutomorphismGroup {
    enum class Status { Trivial, Unknown };
    Status status = Status::Unknown;
    std::vector<Matrix> elements;  // {I} when Trivial, empty when Unknown
    std::string proof_tag;         // "P-covariance" when Trivial
};

// Trivial on the invertible-P stratum (P(A) = P(A) g^-1 forces g = I);
// Unknown elsewhere, where only the finite-field brute force applies.
AutomorphismGroup automorphism_group(const StructureMatrix& a);

struct DerivationSpace {
    std::size_t n = 0;
    // n x n matrices whose row-major flattenings are the rows of a reduced
    // row-echelon matrix.
    std::vector<Matrix> basis;
    std::size_t dim() const noexcept { return basis.size(); }
};

// D A = A (D (x) I + I (x) D), checked through the Kronecker form.
bool is_derivation(const StructureMatrix& a, const Matrix& d);

// The linear system D -> D A_i - A_i D - sum_k d_{ki} A_k (i = 1..n) with
// unknowns d_{rs} at index r*n + s; n^3 equations in n^2 unknowns.
Matrix derivation_system(const StructureMatrix& a);

DerivationSpace derivation_space(const StructureMatrix& a);

// trbar(A) d = 0 and trbar(A°) d = 0. Every derivation passes.
bool derivation_trace_check(const StructureMatrix& a, const Matrix& d);

}  // namespace msc
