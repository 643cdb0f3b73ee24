#include "msc/matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace msc {

namespace {

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a != b) throw Error(ErrorKind::MixedFields, a.to_string() + " vs " + b.to_string());
}

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare, std::string(what) + " of a " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    }
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// Bareiss on an integer matrix; returns the determinant.
mpz_class bareiss_det(std::vector<mpz_class> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldDescriptor field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar(field)) {}

Matrix::Matrix(FieldDescriptor field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), field_(field) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (std::int64_t v : r) entries_.emplace_back(field, v);
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                      std::to_string(entries_.size()));
    }
    if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "cannot infer the field of an empty matrix");
    field_ = entries_.front().field();
    for (const Scalar& s : entries_) require_same_field(field_, s.field());
}

Matrix Matrix::identity(std::size_t n, FieldDescriptor field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(field);
    return m;
}

Matrix Matrix::column(std::span<const Scalar> values) {
    return Matrix(values.size(), 1, std::vector<Scalar>(values.begin(), values.end()));
}

Matrix Matrix::row_vector(std::span<const Scalar> values) {
    return Matrix(1, values.size(), std::vector<Scalar>(values.begin(), values.end()));
}

bool Matrix::is_zero() const noexcept {
    for (const Scalar& s : entries_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "(" + std::to_string(r) + "," + std::to_string(c) + ") in " + shape(*this));
    }
    return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
    require_same_field(field_, value.field());
    if (r >= rows_ || c >= cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "(" + std::to_string(r) + "," + std::to_string(c) + ") in " + shape(*this));
    }
    entries_[r * cols_ + c] = std::move(value);
}

Matrix Matrix::row(std::size_t r) const { return submatrix(r, 0, 1, cols_); }
Matrix Matrix::col(std::size_t c) const { return submatrix(0, c, rows_, 1); }

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t height, std::size_t width) const {
    if (row0 + height > rows_ || col0 + width > cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "submatrix outside " + shape(*this));
    }
    Matrix out(height, width, field_);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) out.entries_[r * width + c] = (*this)(row0 + r, col0 + c);
    }
    return out;
}

void Matrix::set_submatrix(std::size_t row0, std::size_t col0, const Matrix& block) {
    require_same_field(field_, block.field_);
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
        throw Error(ErrorKind::IndexOutOfRange, "block " + shape(block) + " does not fit in " + shape(*this));
    }
    for (std::size_t r = 0; r < block.rows_; ++r) {
        for (std::size_t c = 0; c < block.cols_; ++c) entries_[(row0 + r) * cols_ + col0 + c] = block(r, c);
    }
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorKind::DimensionMismatch, shape(*this) + " + " + shape(rhs));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorKind::DimensionMismatch, shape(*this) + " - " + shape(rhs));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    require_same_field(field_, s.field());
    for (Scalar& e : entries_) e *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (Scalar& e : out.entries_) e = -e;
    return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return matmul(lhs, rhs); }

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.field_ == rhs.field_ && lhs.entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, shape(a) + " * " + shape(b));
    Matrix out(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc(a.field());
            for (std::size_t t = 0; t < a.cols(); ++t) {
                if (a(i, t).is_zero() || b(t, j).is_zero()) continue;
                acc += a(i, t) * b(t, j);
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
                }
            }
        }
    }
    return out;
}

Matrix hstack(std::span<const Matrix> parts) {
    if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "hstack of nothing");
    std::size_t width = 0;
    for (const Matrix& p : parts) {
        if (p.rows() != parts.front().rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row counts differ");
        width += p.cols();
    }
    Matrix out(parts.front().rows(), width, parts.front().field());
    std::size_t col = 0;
    for (const Matrix& p : parts) {
        out.set_submatrix(0, col, p);
        col += p.cols();
    }
    return out;
}

Matrix vstack(std::span<const Matrix> parts) {
    if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "vstack of nothing");
    std::size_t height = 0;
    for (const Matrix& p : parts) {
        if (p.cols() != parts.front().cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
        height += p.rows();
    }
    Matrix out(height, parts.front().cols(), parts.front().field());
    std::size_t row = 0;
    for (const Matrix& p : parts) {
        out.set_submatrix(row, 0, p);
        row += p.rows();
    }
    return out;
}

Scalar det(const Matrix& m) {
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    const FieldDescriptor& field = m.field();
    if (n == 0) return Scalar::one(field);

    if (field.is_rational()) {
        // Scale each row by its denominator lcm; det(m) = det(scaled) / prod(lcm).
        std::vector<mpz_class> ints;
        ints.reserve(n * n);
        mpz_class scale = 1;
        for (std::size_t r = 0; r < n; ++r) {
            mpz_class l = 1;
            for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
            for (std::size_t c = 0; c < n; ++c) {
                const mpq_class& q = m(r, c).rational();
                ints.push_back(q.get_num() * (l / q.get_den()));
            }
            scale *= l;
        }
        return Scalar(field, mpq_class(bareiss_det(std::move(ints), n), scale));
    }

    Matrix a = m;
    Scalar result = Scalar::one(field);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(field);
        if (pivot != k) {
            a.swap_rows(pivot, k);
            result = -result;
        }
        const Scalar p = a(k, k);
        result *= p;
        const Scalar p_inv = p.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Scalar f = a(i, k) * p_inv;
            for (std::size_t j = k; j < n; ++j) a.set(i, j, a(i, j) - f * a(k, j));
        }
    }
    return result;
}

Matrix inverse(const Matrix& m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    const FieldDescriptor& field = m.field();
    Matrix a = m;
    Matrix inv = Matrix::identity(n, field);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorKind::Singular, "matrix " + m.to_string() + " has determinant 0");
        a.swap_rows(pivot, k);
        inv.swap_rows(pivot, k);
        const Scalar p_inv = a(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a.set(k, j, a(k, j) * p_inv);
            inv.set(k, j, inv(k, j) * p_inv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            const Scalar f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.set(i, j, a(i, j) - f * a(k, j));
                inv.set(i, j, inv(i, j) - f * inv(k, j));
            }
        }
    }
    return inv;
}

Scalar trace(const Matrix& m) {
    require_square(m, "trace");
    Scalar acc(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

RowEchelon rref(const Matrix& m) {
    RowEchelon out{m, {}};
    Matrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(pivot, row);
        const Scalar p_inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.set(row, j, a(row, j) * p_inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Scalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.set(i, j, a(i, j) - f * a(row, j));
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m) {
    const RowEchelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Matrix v(1, cols, m.field());
        v.set(0, free, Scalar::one(m.field()));
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v.set(0, e.pivots[r], -e.reduced(r, free));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, cols, m.field());
    // Canonical basis: reduced row-echelon form of the spanning rows.
    return rref(vstack(basis)).reduced;
}

}  // namespace msc
