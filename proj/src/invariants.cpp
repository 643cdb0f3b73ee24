#include "msc/invariants.hpp"

#include <vector>

namespace msc {

namespace {

Matrix gram_of_blocks(const StructureMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> blocks;
    blocks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) blocks.push_back(block(a, i));

    Matrix out(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scalar t = trace(matmul(blocks[i], blocks[j]));
            out.set(j, i, t);
            out.set(i, j, std::move(t));
        }
    }
    return out;
}

Matrix p_from_operator(const StructureMatrix& a, const Matrix& m) {
    const std::size_t n = a.dim();
    std::vector<Matrix> blocks;
    blocks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) blocks.push_back(block(a, i));

    Matrix p(n, n, a.field());
    Matrix power = Matrix::identity(n, a.field());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) p.set(k, i, trace(matmul(power, blocks[i])));
        if (k + 1 < n) power = matmul(m, power);
    }
    return p;
}

Matrix operator_from(const Matrix& b, const Matrix& b_op) {
    return matmul(inverse(b), b_op);
}

}  // namespace

Matrix killing_left(const StructureMatrix& a) { return gram_of_blocks(a); }

Matrix killing_right(const StructureMatrix& a) { return gram_of_blocks(opposite(a)); }

Matrix trace_operator(const StructureMatrix& a) {
    const Matrix b = killing_left(a);
    if (det(b).is_zero()) throw Error(ErrorKind::NotInA0, "det B(A) = 0");
    return operator_from(b, killing_right(a));
}

Matrix p_matrix(const StructureMatrix& a) { return p_from_operator(a, trace_operator(a)); }

InvariantReport membership(const StructureMatrix& a) {
    InvariantReport r{killing_left(a), killing_right(a), Scalar(a.field()), {}, {}, {}, false, false};
    r.det_b = det(r.b);
    r.in_a0 = !r.det_b.is_zero();
    if (!r.in_a0) return r;
    r.m = operator_from(r.b, r.b_op);
    r.p = p_from_operator(a, *r.m);
    r.det_p = det(*r.p);
    r.p_invertible = !r.det_p->is_zero();
    return r;
}

}  // namespace msc
