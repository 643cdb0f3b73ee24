#include "msc/oracle.hpp"

namespace msc {

std::uint64_t gl_order(std::size_t n, std::uint32_t p) {
    // Saturates at UINT64_MAX; callers only compare against the guard.
    constexpr std::uint64_t kMax = ~std::uint64_t{0};
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (pn > kMax / p) return kMax;
        pn *= p;
    }
    std::uint64_t order = 1;
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t factor = pn - pk;
        if (factor != 0 && order > kMax / factor) return kMax;
        order *= factor;
        pk *= p;
    }
    return order;
}

void require_enumerable(std::size_t n, std::uint32_t p) {
    const std::uint64_t order = gl_order(n, p);
    if (n == 0 || n > kMaxEnumerationDim || order > kMaxEnumerationOrder) {
        throw Error(ErrorKind::TooLarge, "GL(" + std::to_string(n) + ", " + std::to_string(p) + ") has order " +
                                             std::to_string(order) + "; enumeration needs n <= 3 and order <= 10^7");
    }
}

void for_each_gl(std::size_t n, std::uint32_t p, const std::function<bool(const Matrix&)>& visit) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    require_enumerable(n, p);
    const FieldDescriptor field = FieldDescriptor::prime(p);
    const std::size_t cells = n * n;
    std::vector<std::uint32_t> digits(cells, 0);
    Matrix g(n, n, field);
    while (true) {
        for (std::size_t c = 0; c < cells; ++c) g.set(c / n, c % n, Scalar(field, std::int64_t{digits[c]}));
        if (!det(g).is_zero() && !visit(g)) return;
        // Odometer with the last entry varying fastest: lexicographic order.
        std::size_t pos = cells;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
    }
}

std::vector<Matrix> enumerate_gl(std::size_t n, std::uint32_t p) {
    std::vector<Matrix> out;
    for_each_gl(n, p, [&](const Matrix& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

namespace {

std::uint32_t require_finite(const StructureMatrix& a) {
    if (!a.field().is_prime_field()) {
        throw Error(ErrorKind::InvalidArgument, "brute force needs a prime field, got " + a.field().to_string());
    }
    return a.field().modulus();
}

// act(g, b) = a  <=>  g b = a (g (x) g); avoids inverting g.
bool maps_to(const Matrix& g, const StructureMatrix& b, const StructureMatrix& a) {
    return matmul(g, b.data()) == matmul(a.data(), kron(g, g));
}

}  // namespace

std::optional<OrbitCertificate> orbit_equivalent_bruteforce(const StructureMatrix& a, const StructureMatrix& b) {
    if (a.field() != b.field()) throw Error(ErrorKind::MixedFields, a.field().to_string() + " vs " + b.field().to_string());
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "dimensions differ");
    const std::uint32_t p = require_finite(a);
    std::optional<OrbitCertificate> found;
    for_each_gl(a.dim(), p, [&](const Matrix& g) {
        if (!maps_to(g, b, a)) return true;
        found = OrbitCertificate{g};
        return false;
    });
    return found;
}

std::vector<Matrix> automorphisms_bruteforce(const StructureMatrix& a) {
    const std::uint32_t p = require_finite(a);
    std::vector<Matrix> out;
    for_each_gl(a.dim(), p, [&](const Matrix& g) {
        if (maps_to(g, a, a)) out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += Xorshift64Star::kSplitMixIncrement;
    x = (x ^ (x >> 30)) * Xorshift64Star::kSplitMixMul1;
    x = (x ^ (x >> 27)) * Xorshift64Star::kSplitMixMul2;
    return x ^ (x >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = kSplitMixIncrement;
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kMultiplier;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::int64_t Xorshift64Star::uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Scalar random_scalar(FieldDescriptor field, Xorshift64Star& rng, std::int64_t bound) {
    if (field.is_prime_field()) return Scalar(field, static_cast<std::int64_t>(rng.below(field.modulus())));
    if (bound < 1) throw Error(ErrorKind::InvalidArgument, "rational entry bound must be >= 1");
    return Scalar(field, rng.uniform(-bound, bound));
}

}  // namespace

Matrix random_matrix(std::size_t rows, std::size_t cols, FieldDescriptor field, Xorshift64Star& rng, std::int64_t bound) {
    Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(field, rng, bound));
    }
    return m;
}

Matrix random_invertible(std::size_t n, FieldDescriptor field, Xorshift64Star& rng, std::int64_t bound) {
    while (true) {
        Matrix g = random_matrix(n, n, field, rng, bound);
        if (!det(g).is_zero()) return g;
    }
}

StructureMatrix random_msc(std::size_t n, FieldDescriptor field, std::uint64_t seed, std::int64_t bound) {
    Xorshift64Star rng(seed);
    return StructureMatrix(random_matrix(n, n * n, field, rng, bound));
}

}  // namespace msc
