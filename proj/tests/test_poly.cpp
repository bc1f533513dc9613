#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace congh1;

namespace {
Poly P(std::uint32_t p, std::vector<Residue> c) { return Poly(PrimeField(p), std::move(c)); }
}  // namespace

TEST(Poly, Arithmetic) {
    EXPECT_EQ(P(2, {1, 1}) * P(2, {1, 1}), P(2, {1, 0, 1}));
    EXPECT_TRUE((P(5, {1, 2, 3}) * Poly(PrimeField(5))).is_zero());
    EXPECT_TRUE((P(3, {0, 1, 2}) + P(3, {0, 2, 1})).is_zero());
    EXPECT_EQ(P(3, {0, 1, 2}) - P(3, {0, 1, 2}), Poly(PrimeField(3)));
    EXPECT_EQ(Poly(PrimeField(2)).degree(), -1);
    EXPECT_EQ(P(7, {1, 0, 0, 0}).degree(), 0);
}

TEST(Poly, Coefficients) {
    EXPECT_EQ(P(2, {1, 0, 0, 1}).coefficient(3), 1u);
    EXPECT_EQ(P(2, {0, 1}).coefficient(5), 0u);
    EXPECT_EQ(P(3, {0, 2, 1}).coefficient(1), 2u);
    EXPECT_THROW((void)P(3, {1}).coefficient(-1), std::out_of_range);
}

TEST(Poly, ShiftsAndValuation) {
    auto a = P(5, {0, 0, 3, 1});
    EXPECT_EQ(a.valuation(), 2);
    EXPECT_EQ(a.unshifted(2), P(5, {3, 1}));
    EXPECT_EQ(a.unshifted(2).shifted(2), a);
    EXPECT_EQ(a.truncated(3), P(5, {0, 0, 3}));
    EXPECT_THROW((void)Poly(PrimeField(5)).valuation(), std::domain_error);
}

TEST(Poly, DivisionIdentity) {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 200; ++trial) {
            auto a = gen::random_poly(rng, f, 8);
            auto b = gen::random_poly(rng, f, 4);
            if (b.is_zero()) {
                EXPECT_THROW((void)divmod(a, b), ArithmeticError);
                continue;
            }
            auto [q, r] = divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
            EXPECT_EQ(exact_quotient(a * b, b), a);
        }
    }
    EXPECT_THROW((void)exact_quotient(P(2, {1, 1}), P(2, {0, 1})), ArithmeticError);
}

TEST(PolyMatrix, Products) {
    PrimeField f(3);
    auto t = Poly::monomial(f, 1, 1);
    PolyMatrix a = PolyMatrix::identity(f, 3), b = PolyMatrix::identity(f, 3);
    a(0, 1) = t;
    b(1, 2) = t;
    PolyMatrix expect = PolyMatrix::identity(f, 3);
    expect(0, 1) = t;
    expect(1, 2) = t;
    expect(0, 2) = t * t;
    EXPECT_EQ(a * b, expect);
    PolyMatrix sq = PolyMatrix::identity(f, 3);
    sq(0, 1) = t.scaled(2);
    EXPECT_EQ(a * a, sq);
    EXPECT_EQ(a * PolyMatrix::identity(f, 3), a);
}

TEST(PolyMatrix, Determinant) {
    PrimeField f(2);
    EXPECT_TRUE(det(PolyMatrix::identity(f, 4)).is_one());
    PolyMatrix u = PolyMatrix::identity(f, 3);
    u(0, 1) = Poly::monomial(f, 1, 5);
    EXPECT_TRUE(det(u).is_one());
    const int e[] = {1, 1, 0};
    EXPECT_EQ(det(PolyMatrix::diagonal_powers(f, e)), Poly::monomial(f, 1, 2));
}

TEST(PolyMatrix, DeterminantMultiplicativeAndAdjugate) {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + trial % 3;
            auto a = gen::random_poly_matrix(rng, f, n, 2);
            auto b = gen::random_poly_matrix(rng, f, n, 2);
            EXPECT_EQ(det(a * b), det(a) * det(b));
            PolyMatrix scalar(f, n);
            for (std::size_t i = 0; i < n; ++i) scalar(i, i) = det(a);
            EXPECT_EQ(a * adjugate(a), scalar);
        }
    }
}

TEST(ColumnHnf, Examples) {
    PrimeField f(2);
    EXPECT_EQ(column_hnf(PolyMatrix::identity(f, 3)), PolyMatrix::identity(f, 3));
    PolyMatrix a(f, 2);
    a(0, 0) = Poly::monomial(f, 1, 1);
    a(0, 1) = Poly::constant(f, 1);
    a(1, 1) = Poly::constant(f, 1);
    EXPECT_EQ(column_hnf(a), a);
    // swapping the columns spans the same lattice
    PolyMatrix b(f, 2);
    b(0, 1) = a(0, 0);
    b(0, 0) = a(0, 1);
    b(1, 0) = a(1, 1);
    EXPECT_EQ(column_hnf(b), a);
    EXPECT_THROW((void)column_hnf(PolyMatrix(f, 2)), ArithmeticError);
}

namespace {
void expect_hnf_shape(const PolyMatrix& h) {
    for (std::size_t i = 0; i < h.n(); ++i) {
        EXPECT_EQ(h(i, i).leading(), 1u);
        for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(h(i, j).is_zero());
        for (std::size_t j = i + 1; j < h.n(); ++j) EXPECT_LT(h(i, j).degree(), h(i, i).degree());
    }
}
}  // namespace

TEST(ColumnHnf, UniqueUnderUnimodularMultiplication) {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 2 + trial % 3;
            auto a = gen::random_poly_matrix(rng, f, n, 3);
            if (det(a).is_zero()) continue;
            auto u = gen::random_unimodular(rng, f, n, 6, 2);
            auto h = column_hnf(a);
            expect_hnf_shape(h);
            EXPECT_EQ(column_hnf(a * u), h);
            EXPECT_EQ(det(h), det(a).monic());
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}
