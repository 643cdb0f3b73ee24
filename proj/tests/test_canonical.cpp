#include <doctest.h>

#include "msc/canonical.hpp"
#include "support.hpp"

using namespace msc;
using msc::test::two_dim_example;
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

TEST_CASE("one-dimensional canonical form is (1)") {
    for (std::int64_t v : {1, 2, -3, 5}) {
        const CanonicalForm c = canonical_form(test::one_dim(v));
        CHECK(c.msc == test::one_dim(1));
        CHECK(c.source_p == Matrix(Q, {{v}}));
    }
    const auto gf5 = FieldDescriptor::prime(5);
    CHECK(normal_representative(test::one_dim(3, gf5)) == test::one_dim(1, gf5));
}

TEST_CASE("two-dimensional example") {
    const StructureMatrix a = two_dim_example();
    const CanonicalForm c = canonical_form(a);
    const Matrix p(Q, {{0, 1}, {-1, 6}});
    CHECK(c.source_p == p);
    // Evaluated independently with the printed P: P A (P^-1 (x) P^-1).
    const Matrix p_inv(Q, {{6, -1}, {1, 0}});
    CHECK(matmul(p, p_inv) == Matrix::identity(2, Q));
    CHECK(c.msc.data() == matmul(p, matmul(a.data(), test::kron_by_definition(p_inv, p_inv))));
    CHECK(p_matrix(c.msc) == Matrix::identity(2, Q));
    CHECK(canonical_form(c.msc).msc == c.msc);
}

TEST_CASE("refusals name the failed determinant") {
    CHECK(kind_of([] { (void)canonical_form(StructureMatrix::zero(2, Q)); }) == ErrorKind::NotInA0);
    // A_1 = A_2 = I: B = [[2,2],[2,2]] is singular.
    CHECK(kind_of([] { (void)canonical_form(StructureMatrix(Matrix(Q, {{1, 0, 1, 0}, {0, 1, 0, 1}}))); }) ==
          ErrorKind::NotInA0);
    // A_1 = E_11, A_2 = E_22 (commutative, B = I, M = I): P rows (1,1),(1,1).
    CHECK(kind_of([] { (void)canonical_form(StructureMatrix(Matrix(Q, {{1, 0, 0, 0}, {0, 0, 0, 1}}))); }) ==
          ErrorKind::PSingular);
}

TEST_CASE("is_isomorphic") {
    const StructureMatrix a = two_dim_example();
    const IsomorphismResult self = is_isomorphic(a, a);
    CHECK(self.isomorphic);
    REQUIRE(self.certificate);
    CHECK(self.certificate->g == Matrix::identity(2, Q));

    CHECK(is_isomorphic(test::one_dim(2), test::one_dim(5)).isomorphic);

    Xorshift64Star rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix g = random_invertible(2, Q, rng);
        const StructureMatrix b = act(g, a);
        const IsomorphismResult r = is_isomorphic(a, b);
        CHECK(r.isomorphic);
        REQUIRE(r.certificate);
        CHECK(verify_certificate(*r.certificate, a, b));
        // Trivial automorphism group: the certificate is the unique map, g^-1.
        CHECK(r.certificate->g == inverse(g));
    }

    // A different algebra on the stratum.
    const StructureMatrix other(Matrix(Q, {{1, 0, 1, -1}, {1, 0, 1, 0}}));
    REQUIRE(membership(other).p_invertible);
    const IsomorphismResult no = is_isomorphic(a, other);
    CHECK_FALSE(no.isomorphic);
    CHECK_FALSE(no.certificate);
    CHECK(no.left.msc != no.right.msc);

    CHECK(kind_of([&] { (void)is_isomorphic(a, two_dim_example(FieldDescriptor::prime(5))); }) == ErrorKind::MixedFields);
    CHECK(kind_of([&] { (void)is_isomorphic(a, test::one_dim(1)); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { (void)is_isomorphic(a, StructureMatrix::zero(2, Q)); }) == ErrorKind::NotInA0);
}

TEST_CASE("normal representatives are orbit invariants") {
    for (FieldDescriptor f : {Q, FieldDescriptor::prime(7)}) {
        Xorshift64Star rng(f.modulus() + 8);
        int checked = 0;
        for (std::uint64_t seed = 0; checked < 15; ++seed) {
            const StructureMatrix a = random_msc(2 + seed % 2, f, seed, 2);
            if (!membership(a).p_invertible) continue;
            ++checked;
            const StructureMatrix rep = normal_representative(a);
            CHECK(normal_representative(rep) == rep);
            for (int k = 0; k < 4; ++k) {
                CHECK(normal_representative(act(random_invertible(a.dim(), f, rng), a)) == rep);
            }
        }
    }
}

TEST_CASE("reduction mod 3 commutes with canonicalisation for the example") {
    const auto gf3 = FieldDescriptor::prime(3);
    const Matrix q_rep = normal_representative(two_dim_example()).data();
    Matrix reduced(q_rep.rows(), q_rep.cols(), gf3);
    for (std::size_t r = 0; r < q_rep.rows(); ++r) {
        for (std::size_t c = 0; c < q_rep.cols(); ++c) reduced.set(r, c, q_rep(r, c).reduce_to(gf3));
    }
    CHECK(normal_representative(two_dim_example(gf3)).data() == reduced);
}
