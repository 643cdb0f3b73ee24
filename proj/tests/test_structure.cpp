#include <doctest.h>

#include "msc/structure.hpp"
#include "support.hpp"

using namespace msc;
using msc::test::two_dim_example;
using msc::test::Q;

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(StructureMatrix(Matrix(2, 3, Q)), Error);
    CHECK_THROWS_AS(StructureMatrix(Matrix(0, 0, Q)), Error);
    CHECK(StructureMatrix::zero(3, Q).data().cols() == 9);
}

TEST_CASE("block") {
    const StructureMatrix a = two_dim_example();
    CHECK(block(a, 0) == Matrix(Q, {{0, 0}, {1, 0}}));
    CHECK(block(a, 1) == Matrix(Q, {{1, -1}, {1, 0}}));
    CHECK(block(StructureMatrix::zero(3, Q), 2).is_zero());
    try {
        (void)block(a, 2);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
    // e_1 e_1 = e_2, e_2 e_1 = e_1 + e_2, e_2 e_2 = -e_1.
    CHECK(a.coefficient(0, 0, 1).is_one());
    CHECK(a.coefficient(1, 0, 0).is_one());
    CHECK(a.coefficient(1, 1, 0) == Scalar(Q, -1));
}

TEST_CASE("opposite") {
    CHECK(opposite(two_dim_example()).data() == Matrix(Q, {{0, 1, 0, -1}, {1, 1, 0, 0}}));
    CHECK(opposite(test::one_dim(5)) == test::one_dim(5));
    for (FieldDescriptor f : {Q, FieldDescriptor::prime(5)}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const StructureMatrix a = random_msc(3, f, seed);
            CHECK(opposite(opposite(a)) == a);
        }
    }
}

TEST_CASE("act") {
    const StructureMatrix a = two_dim_example();
    CHECK(act(Matrix::identity(2, Q), a) == a);
    // 1-dimensional: g a g^-2 = a / g.
    CHECK(act(Matrix(Q, {{4}}), test::one_dim(6)).data() == Matrix(1, 1, {test::frac(3, 2)}));
    CHECK_THROWS_AS(act(Matrix(Q, {{1, 1}, {1, 1}}), a), Error);
    CHECK_THROWS_AS(act(Matrix::identity(3, Q), a), Error);

    const auto gf5 = FieldDescriptor::prime(5);
    Xorshift64Star rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const StructureMatrix b = random_msc(2, gf5, 100 + trial);
        const Matrix g = random_invertible(2, gf5, rng), h = random_invertible(2, gf5, rng);
        CHECK(act(g, act(h, b)) == act(matmul(g, h), b));
        CHECK(opposite(act(g, b)) == act(g, opposite(b)));
    }
}

TEST_CASE("evaluate_product") {
    const StructureMatrix a = two_dim_example();
    CHECK(evaluate_product(a, test::column(Q, {1, 0}), test::column(Q, {1, 0})) == test::column(Q, {0, 1}));
    CHECK(evaluate_product(a, test::column(Q, {0, 1}), test::column(Q, {0, 1})) == test::column(Q, {-1, 0}));
    CHECK(evaluate_product(a, test::column(Q, {0, 0}), test::column(Q, {3, 7})).is_zero());
    CHECK_THROWS_AS(evaluate_product(a, test::column(Q, {1, 0, 0}), test::column(Q, {1, 0})), Error);
}

TEST_CASE("product encodings and basis change agree") {
    for (FieldDescriptor f : {Q, FieldDescriptor::prime(7)}) {
        Xorshift64Star rng(f.modulus() + 40);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 2 + trial % 2;
            const StructureMatrix a = random_msc(n, f, 900 + trial);
            const Matrix x = random_matrix(n, 1, f, rng), y = random_matrix(n, 1, f, rng);
            const Matrix xy = evaluate_product(a, x, y);
            CHECK(xy == test::product_by_constants(a, x, y));
            CHECK(xy == evaluate_product_opposite(a, x, y));
            const Matrix g = random_invertible(n, f, rng);
            CHECK(evaluate_product(act(g, a), matmul(g, x), matmul(g, y)) == matmul(g, xy));
        }
    }
}

TEST_CASE("block_power and trbar") {
    const StructureMatrix a = two_dim_example();
    CHECK(block_power(a, 1) == RowBlock(a));
    CHECK(trbar(block_power(a, 2)) == Matrix(Q, {{0, -1, -1, -1}}));
    CHECK(block_power(a, 3).width() == 8);
    CHECK(block_power(StructureMatrix::zero(2, Q), 3).data().is_zero());
    CHECK_THROWS_AS(block_power(a, 0), Error);
    CHECK_THROWS_AS(block_power(a, block_power_cap(2) + 1), Error);

    CHECK(trbar(a) == Matrix(Q, {{0, 1}}));
    CHECK(trbar(opposite(a)) == Matrix(Q, {{1, 0}}));
    const Matrix id = Matrix::identity(3, Q);
    const std::vector<Matrix> blocks{id, id};
    CHECK(trbar(RowBlock(hstack(blocks), 3)) == Matrix(Q, {{3, 3}}));
}

TEST_CASE("row/column reshaping identity") {
    // (b_1|..|b_k) = (a_1|..|a_n)(g (x) h)  iff  (b_1/../b_k) = g^t (a_1/../a_n) h
    // for rows a_i in F^m, g n x k, h m x m.
    for (FieldDescriptor f : {Q, FieldDescriptor::prime(3)}) {
        Xorshift64Star rng(f.modulus() + 77);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + trial % 3, k = 1 + (trial / 3) % 3, m = 1 + (trial / 9) % 3;
            const Matrix stacked = random_matrix(n, m, f, rng);  // rows a_i
            const Matrix g = random_matrix(n, k, f, rng), h = random_matrix(m, m, f, rng);

            Matrix flat(1, n * m, f);
            for (std::size_t i = 0; i < n; ++i) flat.set_submatrix(0, i * m, stacked.row(i));
            const Matrix row_form = matmul(flat, kron(g, h));
            const Matrix stacked_form = matmul(matmul(g.transpose(), stacked), h);
            for (std::size_t i = 0; i < k; ++i) CHECK(row_form.submatrix(0, i * m, 1, m) == stacked_form.row(i));

            // Converse: a row block that matches the stacked form equals the product.
            Matrix rebuilt(1, k * m, f);
            for (std::size_t i = 0; i < k; ++i) rebuilt.set_submatrix(0, i * m, stacked_form.row(i));
            CHECK(rebuilt == row_form);
        }
    }
}

TEST_CASE("trace vectors of block powers transform by h^(x)k") {
    // A' = g A (h (x) g^-1) with g invertible m x m and h any n x w.
    for (FieldDescriptor f : {Q, FieldDescriptor::prime(5)}) {
        Xorshift64Star rng(f.modulus() + 5);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 2, n = 2, w = 1 + trial % 3;
            const RowBlock a(random_matrix(m, m * n, f, rng), m);
            const Matrix g = random_invertible(m, f, rng);
            const Matrix h = random_matrix(n, w, f, rng);
            const RowBlock a_prime(matmul(g, matmul(a.data(), kron(h, inverse(g)))), m);
            Matrix h_power = h;
            for (std::size_t k = 1; k <= 3; ++k) {
                if (k > 1) h_power = kron(h_power, h);
                CHECK(trbar(block_power(a_prime, k)) == matmul(trbar(block_power(a, k)), h_power));
            }
        }
    }
}
