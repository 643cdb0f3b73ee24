#pragma once

#include <optional>

#include "msc/structure.hpp"

namespace msc {

// Gram matrix of the left trace form: (tr(A_i A_j))_{i,j}.
Matrix killing_left(const StructureMatrix& a);
// Same for the opposite MSC: (tr(A°_i A°_j))_{i,j}.
Matrix killing_right(const StructureMatrix& a);

// M = B(A)^-1 B°(A). Conjugates as g M g^-1 under act(g, .). NotInA0 if det B = 0.
Matrix trace_operator(const StructureMatrix& a);

// P(A): row k (k = 0..n-1) is trbar(M^k A_1 | ... | M^k A_n) with
// M = B^-1 B°. Satisfies P(act(g, A)) = P(A) g^-1. NotInA0 if det B = 0.
Matrix p_matrix(const StructureMatrix& a);

struct InvariantReport {
    Matrix b;
    Matrix b_op;
    Scalar det_b;
    std::optional<Matrix> m;      // B^-1 B°, iff det_b != 0
    std::optional<Matrix> p;      // iff in_a0
    std::optional<Scalar> det_p;  // iff p
    bool in_a0 = false;
    bool p_invertible = false;
};

// Never throws for a well-formed MSC; strata membership is in the flags.
InvariantReport membership(const StructureMatrix& a);

}  // namespace msc
