#pragma once

/*
 * Isomorphism classification on the stratum {det B(A) != 0, det P(A) != 0}.
 *
 * Because P(act(g, A)) = P(A) g^-1, the value act(P(A), A) is constant on
 * every orbit, and two algebras are isomorphic exactly when these values
 * agree. The canonical value itself has P = I, which makes it the unique
 * orbit representative with that property.
 */

#include <optional>

#include "msc/invariants.hpp"

namespace msc {

struct CanonicalForm {
    StructureMatrix msc;  // act(P(A), A)
    Matrix source_p;      // the P(A) used
};

// Invertible g with act(g, b) = a for the pair it was issued for.
struct OrbitCertificate {
    Matrix g;
};

bool verify_certificate(const OrbitCertificate& cert, const StructureMatrix& a, const StructureMatrix& b);

// NotInA0 / PSingular outside the stratum. The fixed-point property
// p_matrix(result.msc) = I is checked before returning.
CanonicalForm canonical_form(const StructureMatrix& a);

struct IsomorphismResult {
    bool isomorphic = false;
    std::optional<OrbitCertificate> certificate;  // set iff isomorphic
    CanonicalForm left;
    CanonicalForm right;
};

// On YES, certificate.g = P(a)^-1 P(b) and act(g, b) = a (verified).
IsomorphismResult is_isomorphic(const StructureMatrix& a, const StructureMatrix& b);

// Orbit label: the canonical MSC.
StructureMatrix normal_representative(const StructureMatrix& a);

}  // namespace msc
