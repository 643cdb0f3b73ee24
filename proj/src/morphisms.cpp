#include "msc/morphisms.hpp"

#include "msc/invariants.hpp"

namespace msc {

namespace {

void require_square_of(const StructureMatrix& a, const Matrix& m, const char* name) {
    if (m.rows() != a.dim() || m.cols() != a.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(name) + " must be " + std::to_string(a.dim()) + "x" +
                                                      std::to_string(a.dim()));
    }
    if (m.field() != a.field()) throw Error(ErrorKind::MixedFields, std::string(name) + " lives in another field");
}

}  // namespace

bool is_automorphism(const StructureMatrix& a, const Matrix& g) {
    require_square_of(a, g, "g");
    if (det(g).is_zero()) return false;
    return act(g, a) == a;
}

AutomorphismGroup automorphism_group(const StructureMatrix& a) {
    const InvariantReport report = membership(a);
    if (!report.p_invertible) return {};
    return {AutomorphismGroup::Status::Trivial, {Matrix::identity(a.dim(), a.field())}, "P-covariance"};
}

bool is_derivation(const StructureMatrix& a, const Matrix& d) {
    require_square_of(a, d, "D");
    const Matrix id = Matrix::identity(a.dim(), a.field());
    return matmul(d, a.data()) == matmul(a.data(), kron(d, id) + kron(id, d));
}

Matrix derivation_system(const StructureMatrix& a) {
    const std::size_t n = a.dim();
    const FieldDescriptor& f = a.field();
    Matrix sys(n * n * n, n * n, f);
    auto unknown = [n](std::size_t r, std::size_t s) { return r * n + s; };
    auto add = [&](std::size_t row, std::size_t col, const Scalar& v) {
        if (!v.is_zero()) sys.set(row, col, sys(row, col) + v);
    };
    const Matrix& data = a.data();
    auto blk = [&](std::size_t i, std::size_t r, std::size_t c) -> const Scalar& { return data(r, i * n + c); };

    // Equation (i, u, v): (D A_i)(u,v) - (A_i D)(u,v) - sum_k d_{ki} A_k(u,v) = 0.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                const std::size_t row = (i * n + u) * n + v;
                for (std::size_t s = 0; s < n; ++s) {
                    add(row, unknown(u, s), blk(i, s, v));
                    add(row, unknown(s, v), -blk(i, u, s));
                }
                for (std::size_t k = 0; k < n; ++k) add(row, unknown(k, i), -blk(k, u, v));
            }
        }
    }
    return sys;
}

DerivationSpace derivation_space(const StructureMatrix& a) {
    const std::size_t n = a.dim();
    const Matrix kernel = nullspace(derivation_system(a));
    DerivationSpace out{n, {}};
    out.basis.reserve(kernel.rows());
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Matrix d(n, n, a.field());
        for (std::size_t idx = 0; idx < n * n; ++idx) d.set(idx / n, idx % n, kernel(r, idx));
        out.basis.push_back(std::move(d));
    }
    return out;
}

bool derivation_trace_check(const StructureMatrix& a, const Matrix& d) {
    require_square_of(a, d, "D");
    return matmul(trbar(a), d).is_zero() && matmul(trbar(opposite(a)), d).is_zero();
}

}  // namespace msc
