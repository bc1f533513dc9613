#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace congh1;

TEST(PrimeField, Arithmetic) {
    EXPECT_EQ(PrimeField(3).inv(2), 2u);
    EXPECT_EQ(PrimeField(2).add(1, 1), 0u);
    EXPECT_EQ(PrimeField(5).mul(3, 4), 2u);
    EXPECT_EQ(PrimeField(7).sub(2, 5), 4u);
    EXPECT_EQ(PrimeField(7).neg(0), 0u);
    EXPECT_EQ(PrimeField(7).reduce(-1), 6u);
}

TEST(PrimeField, InverseOfZeroThrows) {
    try {
        (void)PrimeField(5).inv(0);
        FAIL();
    } catch (const ArithmeticError& e) {
        EXPECT_STREQ(e.what(), "division by zero in GF(p)");
    }
}

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(251));
    EXPECT_FALSE(is_prime(9));
}

TEST(PrimeField, EveryNonzeroHasInverse) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        PrimeField f(p);
        for (Residue a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
}

TEST(Rref, Examples) {
    PrimeField f(2);
    auto id = rref(DenseMatrix::identity(f, 4));
    EXPECT_EQ(id.rank, 4u);
    EXPECT_EQ(id.pivot_cols, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(rref(DenseMatrix(f, 3, 5)).rank, 0u);
    EXPECT_EQ(rank(DenseMatrix(f, 3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1})), 2u);
}

TEST(Rref, Idempotent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        PrimeField f(trial % 2 ? 3 : 5);
        auto m = gen::random_dense(rng, f, 1 + trial % 7, 1 + trial % 9, 0.5);
        auto r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        EXPECT_EQ(rank(m.transpose()), r.rank);
    }
}

TEST(DenseMatrix, ShapeAndFieldChecks) {
    EXPECT_THROW(DenseMatrix(PrimeField(2), 2, 2, {1, 0, 1}), std::invalid_argument);
    EXPECT_THROW((void)(DenseMatrix(PrimeField(2), 2, 3) * DenseMatrix(PrimeField(2), 2, 3)), std::invalid_argument);
    EXPECT_THROW((void)(DenseMatrix::identity(PrimeField(2), 2) * DenseMatrix::identity(PrimeField(3), 2)),
                 FieldMismatch);
}

TEST(DenseMatrix, InverseAndDeterminant) {
    std::mt19937_64 rng(5);
    PrimeField f(7);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto m = gen::random_dense(rng, f, 4, 4, 0.7);
        if (determinant(m) == 0) {
            EXPECT_THROW((void)inverse(m), ArithmeticError);
            continue;
        }
        EXPECT_EQ(m * inverse(m), DenseMatrix::identity(f, 4));
        auto m2 = gen::random_dense(rng, f, 4, 4, 0.7);
        EXPECT_EQ(determinant(m * m2), f.mul(determinant(m), determinant(m2)));
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(SparseMatrix, FromTriples) {
    PrimeField f(3);
    std::vector<Triple> t{{0, 0, 1}, {0, 0, 2}, {1, 2, 2}, {1, 2, 2}};
    auto m = SparseMatrix::from_triples(f, 2, 3, t);
    ASSERT_EQ(m.nnz(), 1u);
    EXPECT_EQ(m.triples()[0], (Triple{1, 2, 1}));
    std::vector<Triple> bad{{2, 0, 1}};
    EXPECT_THROW((void)SparseMatrix::from_triples(f, 2, 3, bad), std::out_of_range);
}

TEST(SparseRank, Empty) {
    EXPECT_EQ(sparse_rank(SparseMatrix(PrimeField(2), 0, 0)), 0u);
    EXPECT_EQ(sparse_rank(SparseMatrix(PrimeField(2), 17, 4)), 0u);
}

TEST(SparseRank, Random50x50OverGF3) {
    std::mt19937_64 rng(50);
    PrimeField f(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = gen::random_dense(rng, f, 50, 50, 0.02 + 0.01 * trial);
        EXPECT_EQ(sparse_rank(SparseMatrix::from_dense(d)), rank(d));
    }
}

TEST(SparseRank, AgreesWithDenseUpTo200) {
    std::mt19937_64 rng(200);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    std::uniform_int_distribution<std::size_t> dim(1, 200);
    std::uniform_real_distribution<double> dens(0.002, 0.08);
    for (int trial = 0; trial < 40; ++trial) {
        PrimeField f(primes[trial % 4]);
        const std::size_t r = dim(rng), c = dim(rng);
        auto d = gen::random_dense(rng, f, r, c, dens(rng));
        // low-rank product to force cancellation
        if (trial % 5 == 0) d = d * gen::random_dense(rng, f, c, 1 + c / 4, 0.3) *
                                gen::random_dense(rng, f, 1 + c / 4, c, 0.3);
        auto s = SparseMatrix::from_dense(d);
        EXPECT_EQ(s.densify(), d);
        EXPECT_EQ(sparse_rank(s), rank(d)) << "trial " << trial << " " << r << "x" << c;
    }
}
