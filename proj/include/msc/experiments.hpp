#pragma once

/*
 * Constructive witness for the invertible-P stratum and strata-density
 * sampling over finite fields.
 *
 * Witness induction (n-1 -> n): given A'' with det P(A'') != 0, take
 *     A_1 = E_11,   A_i = [[0, 0], [x_i, A''_i]]   (i = 2..n)
 * so that B(A) = diag(1, B(A'')) for any columns x_i. With X'' = (x_2..x_n)
 * chosen so tr(X'' A''°_i) = 0 for all i and tr(X''^2) != 0, scaling
 * X'' -> tX'' gives B°(A) = diag(1 + t^2 tr(X''^2), B°(A'')), and det P(A)
 * is a nonzero polynomial of degree <= 2(n-1) in t.
 */

#include <cstdint>
#include <vector>

#include "msc/invariants.hpp"

namespace msc {

struct WitnessStep {
    std::size_t dim = 0;  // dimension produced by this step
    Matrix x;             // chosen X'' before scaling
    Scalar t;             // accepted scale
    Scalar det_b;
    Scalar det_p;
    bool killing_left_block_identity = false;   // B(A) = diag(1, B(A''))
    bool killing_right_block_identity = false;  // B°(A) = diag(1 + t^2 tr(X''^2), B°(A''))
};

struct WitnessTrace {
    std::size_t n = 0;
    StructureMatrix base;  // the two-dimensional seed
    std::vector<WitnessStep> steps;
};

struct Witness {
    StructureMatrix msc;
    WitnessTrace trace;
};

// The two-dimensional algebra (A_1 | A_2) = [[0,0,1,-1],[1,0,1,0]] with
// det B = -1 and P = [[0,1],[-1,6]].
StructureMatrix witness_seed(FieldDescriptor field);

// A_1 = E_11, A_i = [[0,0],[x_i, inner_{i-1}]]; x has the columns x_2..x_n.
StructureMatrix embed_step(const StructureMatrix& inner, const Matrix& x);

// Scan values {1, 2, ..., 2n-1} embedded in the field (zero and repeats
// skipped).
std::vector<Scalar> witness_scan_values(std::size_t n, FieldDescriptor field);

// Requires n >= 2 and, for GF(p), p > 2(n-1) (FieldTooSmall otherwise).
// ConstructionFailed if no admissible X'' or t is found.
Witness witness_construct(std::size_t n, FieldDescriptor field);

struct DensityEstimate {
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::uint64_t samples = 0;
    std::uint64_t count_in_a0 = 0;
    std::uint64_t count_p_invertible = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

// Exhaustive mode is allowed when p^(n^3) <= 10^6.
inline constexpr std::uint64_t kMaxExhaustiveMscs = 1'000'000;
bool exhaustive_feasible(std::size_t n, std::uint32_t p);

// Sample i uses random_msc(n, GF(p), splitmix64(seed) + i); the work is
// split into contiguous index ranges over `workers` threads (0 = hardware
// concurrency) and counts are summed, so results do not depend on workers.
DensityEstimate density_estimate(std::size_t n, std::uint32_t p, std::uint64_t samples, std::uint64_t seed,
                                 unsigned workers = 0);

// Every MSC over GF(p) counted once; TooLarge unless exhaustive_feasible.
DensityEstimate density_exhaustive(std::size_t n, std::uint32_t p);

}  // namespace msc
