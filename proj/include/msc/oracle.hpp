#pragma once

/*
 * Ground truth over small prime fields by exhaustive search of GL(n, p),
 * plus the seeded MSC generator shared by tests and experiments.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "msc/canonical.hpp"

namespace msc {

// Enumeration limits: n <= 3 and |GL(n, p)| <= 10^7.
inline constexpr std::size_t kMaxEnumerationDim = 3;
inline constexpr std::uint64_t kMaxEnumerationOrder = 10'000'000;

// prod_{k=0}^{n-1} (p^n - p^k).
std::uint64_t gl_order(std::size_t n, std::uint32_t p);

// TooLarge unless the guard above holds.
void require_enumerable(std::size_t n, std::uint32_t p);

// Visits every invertible n x n matrix over GF(p) in lexicographic order of
// row-major entry vectors. Stops early when visit returns false.
void for_each_gl(std::size_t n, std::uint32_t p, const std::function<bool(const Matrix&)>& visit);
std::vector<Matrix> enumerate_gl(std::size_t n, std::uint32_t p);

// First g in enumeration order with act(g, b) = a.
std::optional<OrbitCertificate> orbit_equivalent_bruteforce(const StructureMatrix& a, const StructureMatrix& b);
std::vector<Matrix> automorphisms_bruteforce(const StructureMatrix& a);

// xorshift64* (Vigna 2014): state ^= state >> 12; state ^= state << 25;
// state ^= state >> 27; output = state * 0x2545F4914F6CDD1D. The seed is
// first passed through one splitmix64 step so that seed 0 is usable.
class Xorshift64Star {
public:
    static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;
    static constexpr std::uint64_t kSplitMixIncrement = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kSplitMixMul1 = 0xBF58476D1CE4E5B9ULL;
    static constexpr std::uint64_t kSplitMixMul2 = 0x94D049BB133111EBULL;

    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next();
    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic in (n, field, seed, bound). Q entries are uniform integers in
// [-bound, bound]; GF(p) entries are uniform residues and bound is ignored.
StructureMatrix random_msc(std::size_t n, FieldDescriptor field, std::uint64_t seed, std::int64_t bound = 3);

// Random invertible matrix by rejection; entries as random_msc.
Matrix random_invertible(std::size_t n, FieldDescriptor field, Xorshift64Star& rng, std::int64_t bound = 3);
Matrix random_matrix(std::size_t rows, std::size_t cols, FieldDescriptor field, Xorshift64Star& rng,
                     std::int64_t bound = 3);

}  // namespace msc
