#include "msc/canonical.hpp"

namespace msc {

bool verify_certificate(const OrbitCertificate& cert, const StructureMatrix& a, const StructureMatrix& b) {
    if (a.dim() != b.dim() || a.field() != b.field()) return false;
    if (cert.g.rows() != a.dim() || cert.g.cols() != a.dim() || cert.g.field() != a.field()) return false;
    if (det(cert.g).is_zero()) return false;
    return act(cert.g, b) == a;
}

CanonicalForm canonical_form(const StructureMatrix& a) {
    const InvariantReport report = membership(a);
    if (!report.in_a0) throw Error(ErrorKind::NotInA0, "det B(A) = " + report.det_b.to_string());
    if (!report.p_invertible) throw Error(ErrorKind::PSingular, "det P(A) = " + report.det_p->to_string());

    CanonicalForm out{act(*report.p, a), *report.p};
    if (p_matrix(out.msc) != Matrix::identity(a.dim(), a.field())) {
        throw Error(ErrorKind::ConstructionFailed, "canonical form does not satisfy P = I");
    }
    return out;
}

IsomorphismResult is_isomorphic(const StructureMatrix& a, const StructureMatrix& b) {
    if (a.field() != b.field()) throw Error(ErrorKind::MixedFields, a.field().to_string() + " vs " + b.field().to_string());
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    IsomorphismResult r{false, std::nullopt, canonical_form(a), canonical_form(b)};
    r.isomorphic = r.left.msc == r.right.msc;
    if (r.isomorphic) {
        OrbitCertificate cert{matmul(inverse(r.left.source_p), r.right.source_p)};
        if (!verify_certificate(cert, a, b)) {
            throw Error(ErrorKind::ConstructionFailed, "certificate " + cert.g.to_string() + " does not map b to a");
        }
        r.certificate = std::move(cert);
    }
    return r;
}

StructureMatrix normal_representative(const StructureMatrix& a) { return canonical_form(a).msc; }

}  // namespace msc
