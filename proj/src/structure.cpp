#include "msc/structure.hpp"

#include <vector>

namespace msc {

StructureMatrix::StructureMatrix(Matrix data) : data_(std::move(data)) {
    const std::size_t n = data_.rows();
    if (n == 0 || data_.cols() != n * n) {
        throw Error(ErrorKind::DimensionMismatch, "an MSC must be n x n^2, got " + std::to_string(data_.rows()) + "x" +
                                                      std::to_string(data_.cols()));
    }
}

StructureMatrix StructureMatrix::zero(std::size_t n, FieldDescriptor field) {
    return StructureMatrix(Matrix(n, n * n, field));
}

const Scalar& StructureMatrix::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    if (i >= n || j >= n || k >= n) throw Error(ErrorKind::IndexOutOfRange, "structure constant index");
    return data_(k, i * n + j);
}

RowBlock::RowBlock(Matrix data, std::size_t block_size) : data_(std::move(data)) {
    if (block_size == 0 || data_.rows() != block_size || data_.cols() % block_size != 0) {
        throw Error(ErrorKind::DimensionMismatch, "row-block data must be n x (n * width)");
    }
}

RowBlock::RowBlock(const StructureMatrix& a) : data_(a.data()) {}

Matrix RowBlock::block(std::size_t i) const {
    if (i >= width()) {
        throw Error(ErrorKind::IndexOutOfRange, "block " + std::to_string(i) + " of width " + std::to_string(width()));
    }
    const std::size_t n = block_size();
    return data_.submatrix(0, i * n, n, n);
}

Matrix block(const StructureMatrix& a, std::size_t i) { return RowBlock(a).block(i); }

StructureMatrix opposite(const StructureMatrix& a) {
    const std::size_t n = a.dim();
    Matrix out(n, n * n, a.field());
    // A°_k(i, j) = a_{jk}^i = A_j(i, k)
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) out.set(i, k * n + j, a.data()(i, j * n + k));
        }
    }
    return StructureMatrix(std::move(out));
}

StructureMatrix act(const Matrix& g, const StructureMatrix& a) {
    const std::size_t n = a.dim();
    if (g.rows() != n || g.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "basis change must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    const Matrix g_inv = inverse(g);
    return StructureMatrix(matmul(g, matmul(a.data(), kron(g_inv, g_inv))));
}

namespace {

void require_vector(const Matrix& v, std::size_t n, const char* name) {
    if (v.rows() != n || v.cols() != 1) {
        throw Error(ErrorKind::DimensionMismatch, std::string(name) + " must be a column of length " + std::to_string(n));
    }
}

}  // namespace

Matrix evaluate_product(const StructureMatrix& a, const Matrix& x, const Matrix& y) {
    require_vector(x, a.dim(), "x");
    require_vector(y, a.dim(), "y");
    return matmul(a.data(), kron(x, y));
}

Matrix evaluate_product_opposite(const StructureMatrix& a, const Matrix& x, const Matrix& y) {
    require_vector(x, a.dim(), "x");
    require_vector(y, a.dim(), "y");
    return matmul(opposite(a).data(), kron(y, x));
}

std::size_t block_power_cap(std::size_t n) noexcept { return n + 1; }

RowBlock block_power(const RowBlock& a, std::size_t k) {
    const std::size_t n = a.block_size();
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "block power needs k >= 1");
    if (k > block_power_cap(n)) {
        throw Error(ErrorKind::TooLarge, "block power k=" + std::to_string(k) + " exceeds cap " +
                                             std::to_string(block_power_cap(n)) + " for n=" + std::to_string(n));
    }
    RowBlock current = a;
    for (std::size_t step = 2; step <= k; ++step) {
        std::vector<Matrix> parts;
        parts.reserve(a.width());
        for (std::size_t i = 0; i < a.width(); ++i) parts.push_back(matmul(a.block(i), current.data()));
        current = RowBlock(hstack(parts), n);
    }
    return current;
}

RowBlock block_power(const StructureMatrix& a, std::size_t k) { return block_power(RowBlock(a), k); }

Matrix trbar(const RowBlock& rb) {
    Matrix out(1, rb.width(), rb.data().field());
    for (std::size_t i = 0; i < rb.width(); ++i) out.set(0, i, trace(rb.block(i)));
    return out;
}

Matrix trbar(const StructureMatrix& a) { return trbar(RowBlock(a)); }

}  // namespace msc
