#include <doctest.h>

#include <cmath>

#include "msc/experiments.hpp"
#include "support.hpp"

using namespace msc;
using msc::test::Q;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("witness seed is the two-dimensional example") {
    const Witness w = witness_construct(2, Q);
    CHECK(w.msc == test::two_dim_example());
    CHECK(w.trace.steps.empty());
    CHECK(*membership(w.msc).det_p == Scalar(Q, 1));
}

TEST_CASE("embed_step block shapes") {
    const StructureMatrix inner = test::two_dim_example();
    const Matrix x(Q, {{2, 3}, {5, 7}});
    const StructureMatrix a = embed_step(inner, x);
    REQUIRE(a.dim() == 3);
    CHECK(block(a, 0) == Matrix(Q, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(block(a, 1) == Matrix(Q, {{0, 0, 0}, {2, 0, 0}, {5, 1, 0}}));
    CHECK(block(a, 2) == Matrix(Q, {{0, 0, 0}, {3, 1, -1}, {7, 1, 0}}));
    // First opposite block carries X''.
    CHECK(block(opposite(a), 0) == Matrix(Q, {{1, 0, 0}, {0, 2, 3}, {0, 5, 7}}));
    // B(A) = diag(1, B(A'')) for any X''.
    CHECK(killing_left(a) == Matrix(Q, {{1, 0, 0}, {0, 0, -1}, {0, -1, -1}}));
}

TEST_CASE("witness over Q for n = 3") {
    const Witness w = witness_construct(3, Q);
    REQUIRE(w.trace.steps.size() == 1);
    const WitnessStep& step = w.trace.steps.front();
    CHECK(step.killing_left_block_identity);
    CHECK(step.killing_right_block_identity);
    const InvariantReport r = membership(w.msc);
    CHECK(r.in_a0);
    CHECK(r.p_invertible);
    CHECK(r.det_p == step.det_p);

    // The chosen X'' is orthogonal to the inner opposite blocks.
    const StructureMatrix inner_op = opposite(test::two_dim_example());
    for (std::size_t i = 0; i < 2; ++i) CHECK(trace(matmul(step.x, block(inner_op, i))).is_zero());
    CHECK_FALSE(trace(matmul(step.x, step.x)).is_zero());
    CHECK(embed_step(test::two_dim_example(), step.x * step.t) == w.msc);
}

TEST_CASE("witness preconditions") {
    CHECK(kind_of([] { (void)witness_construct(3, FieldDescriptor::prime(3)); }) == ErrorKind::FieldTooSmall);
    CHECK(kind_of([] { (void)witness_construct(2, FieldDescriptor::prime(2)); }) == ErrorKind::FieldTooSmall);
    CHECK(kind_of([] { (void)witness_construct(1, Q); }) == ErrorKind::InvalidArgument);
    CHECK(witness_scan_values(3, Q).size() == 5);
    CHECK(witness_scan_values(3, FieldDescriptor::prime(5)).size() == 4);  // 5 = 0 skipped
}

TEST_CASE("witness over prime fields") {
    const Witness w = witness_construct(3, FieldDescriptor::prime(7));
    CHECK(membership(w.msc).p_invertible);
    for (const WitnessStep& s : w.trace.steps) {
        CHECK(s.killing_left_block_identity);
        CHECK(s.killing_right_block_identity);
    }
}

TEST_CASE("density: one-dimensional exact counts") {
    const DensityEstimate e = density_exhaustive(1, 5);
    CHECK(e.samples == 5);
    CHECK(e.count_in_a0 == 4);
    CHECK(e.count_p_invertible == 4);
    CHECK(e.exhaustive);

    // Sampling: 4/5 within three binomial standard deviations.
    const DensityEstimate m = density_estimate(1, 5, 1000, 2024);
    const double sigma = std::sqrt(1000 * 0.8 * 0.2);
    CHECK(std::abs(static_cast<double>(m.count_in_a0) - 800.0) <= 3 * sigma);
}

TEST_CASE("density: n = 2 exhaustive golden counts") {
    // Frozen from tests/oracles/strata_counts.py.
    const DensityEstimate e2 = density_exhaustive(2, 2);
    CHECK(e2.samples == 256);
    CHECK(e2.count_in_a0 == 120);
    CHECK(e2.count_p_invertible == 48);
    const DensityEstimate e3 = density_exhaustive(2, 3);
    CHECK(e3.samples == 6561);
    CHECK(e3.count_in_a0 == 4320);
    CHECK(e3.count_p_invertible == 2448);
    const DensityEstimate e5 = density_exhaustive(2, 5);
    CHECK(e5.samples == 390625);
    CHECK(e5.count_in_a0 == 312000);
    CHECK(e5.count_p_invertible == 232800);
    CHECK(kind_of([] { (void)density_exhaustive(2, 7); }) == ErrorKind::TooLarge);
    CHECK(exhaustive_feasible(2, 5));
    CHECK_FALSE(exhaustive_feasible(3, 2));
}

TEST_CASE("density: reproducibility and bounds") {
    const DensityEstimate a = density_estimate(2, 11, 500, 7, 1);
    const DensityEstimate b = density_estimate(2, 11, 500, 7, 4);
    CHECK(a.count_in_a0 == b.count_in_a0);
    CHECK(a.count_p_invertible == b.count_p_invertible);
    CHECK(a.count_p_invertible <= a.count_in_a0);
    CHECK(a.count_in_a0 <= a.samples);
    const DensityEstimate one = density_estimate(2, 3, 1, 9);
    CHECK(one.count_in_a0 <= 1);
    CHECK(kind_of([] { (void)density_estimate(2, 3, 0, 9); }) == ErrorKind::InvalidArgument);
}
