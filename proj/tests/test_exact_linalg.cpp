#include "oracles.hpp"

#include <kumlat/lattice.hpp>
#include <kumlat/normal_forms.hpp>

#include <gtest/gtest.h>

using namespace kumlat;

namespace {

bool is_unimodular(const IntMatrix& U) { return abs(oracle::leibniz_det(U)) == 1; }

}  // namespace

TEST(Hnf, IdentityIsFixed) {
    const IntMatrix I{{1, 0}, {0, 1}};
    const auto r = hnf(I);
    EXPECT_EQ(r.H, I);
    EXPECT_EQ(r.U, I);
}

TEST(Hnf, SmallExample) {
    const IntMatrix A{{2, 0}, {1, 1}};
    const auto r = hnf(A);
    EXPECT_EQ(r.H, (IntMatrix{{1, 1}, {0, 2}}));
    EXPECT_EQ(r.U * A, r.H);
    EXPECT_TRUE(is_unimodular(r.U));
}

TEST(Hnf, ZeroMatrix) {
    const auto r = hnf(IntMatrix{{0}});
    EXPECT_EQ(r.H, (IntMatrix{{0}}));
    EXPECT_EQ(r.rank, 0u);
}

TEST(Hnf, RandomSatisfiesPredicateAndIsIdempotent) {
    std::mt19937 rng(7);
    for (int t = 0; t < 150; ++t) {
        const std::size_t m = 1 + t % 5, n = 1 + (t / 5) % 5;
        const IntMatrix A = oracle::random_matrix(rng, m, n, -12, 12);
        const auto r = hnf(A);
        ASSERT_EQ(r.U * A, r.H);
        ASSERT_TRUE(is_unimodular(r.U));
        ASSERT_TRUE(is_row_hnf(r.H));
        ASSERT_EQ(hnf(r.H).H, r.H);
        ASSERT_EQ(r.rank, rank(A));
    }
}

TEST(Snf, IdentityAndSpecExamples) {
    const IntMatrix I = IntMatrix::identity(3);
    EXPECT_EQ(snf(I).D, I);
    EXPECT_EQ(snf(IntMatrix{{2, 4}, {6, 8}}).diagonal(), (IntVector{2, 4}));
    EXPECT_EQ(snf(IntMatrix{{0, 2}, {2, 0}}).diagonal(), (IntVector{2, 2}));
}

TEST(Snf, MatchesMinorGcdOracleOnRandom4x4) {
    std::mt19937 rng(20240611);
    int checked = 0;
    for (int t = 0; t < 250; ++t) {
        const IntMatrix A = oracle::random_matrix(rng, 4, 4, -9, 9);
        const auto s = snf(A);
        ASSERT_EQ(s.U * A * s.V, s.D);
        ASSERT_TRUE(is_unimodular(s.U));
        ASSERT_TRUE(is_unimodular(s.V));
        const auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            ASSERT_GE(d[i], 0);
            if (d[i] != 0) {
                ASSERT_EQ(d[i + 1] % d[i], 0) << "divisibility chain broken";
            } else {
                ASSERT_EQ(d[i + 1], 0) << "zeros must trail";
            }
        }
        ASSERT_EQ(d, oracle::smith_diagonal(A));
        ++checked;
    }
    EXPECT_GE(checked, 200);
}

TEST(Snf, RectangularAgainstOracle) {
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        const IntMatrix A = oracle::random_matrix(rng, 3 + t % 2, 4 - t % 2, -6, 6);
        const auto s = snf(A);
        ASSERT_EQ(s.U * A * s.V, s.D);
        ASSERT_EQ(s.diagonal(), oracle::smith_diagonal(A));
    }
}

TEST(IntegerKernel, Examples) {
    EXPECT_EQ(integer_kernel(IntMatrix{{1, 1}}), (IntMatrix{{1, -1}}));
    EXPECT_EQ(integer_kernel(IntMatrix{{2, 4}}), (IntMatrix{{2, -1}}));
    EXPECT_EQ(integer_kernel(IntMatrix{{1, 2}, {3, 4}}).rows(), 0u);
}

TEST(IntegerKernel, KernelAndSaturation) {
    std::mt19937 rng(3);
    for (int t = 0; t < 80; ++t) {
        const IntMatrix A = oracle::random_matrix(rng, 2, 5, -5, 5);
        const IntMatrix K = integer_kernel(A);
        ASSERT_EQ(K.rows() + rank(A), 5u);
        ASSERT_TRUE((K * A.transpose()) == IntMatrix(K.rows(), 2));
        // saturated: the kernel basis has trivial Smith torsion (all invariants 1)
        for (const auto& d : elementary_divisors(K)) ASSERT_EQ(d, 1);
        // adding any rational-kernel integer vector does not enlarge the group
        const RatMatrix Q = rational_kernel(to_rational(A).transpose());
        for (std::size_t i = 0; i < Q.rows(); ++i) {
            auto [v, den] = clear_denominators(row_matrix(Q.row(i)));
            (void)den;
            const IntMatrix stacked = vstack(K, v);
            ASSERT_EQ(hnf(stacked).H.row_range(0, K.rows()), hnf(K).H);
        }
    }
}

TEST(SolveRational, Examples) {
    EXPECT_EQ(*solve_rational(RatMatrix::identity(2), RatVector{3, 5}), (RatVector{3, 5}));
    EXPECT_EQ(*solve_rational(RatMatrix{{2}}, RatVector{1}), (RatVector{Rational(1, 2)}));
    // one row (1,1) cannot produce (1,2)
    EXPECT_FALSE(solve_rational(RatMatrix{{1, 1}}, RatVector{1, 2}).has_value());
}

TEST(SolveRational, RandomRoundTrip) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-7, 7);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix A = oracle::random_matrix(rng, 3, 5, -4, 4);
        if (rank(A) < 3) continue;
        RatVector x{Rational(c(rng), 3), Rational(c(rng)), Rational(c(rng), 2)};
        const RatVector b = x * to_rational(A);
        ASSERT_EQ(*solve_rational(to_rational(A), b), x);
    }
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{0, 2}, {2, 0}}), -4);
    EXPECT_EQ(determinant(gram_E8_neg()), 1);
    EXPECT_EQ(oracle::leibniz_det(gram_E8_neg()), 1);
}

TEST(Determinant, AgreesWithLeibnizAndIsMultiplicative) {
    std::mt19937 rng(5);
    for (int t = 0; t < 120; ++t) {
        const IntMatrix A = oracle::random_matrix(rng, 4, 4, -9, 9);
        const IntMatrix B = oracle::random_matrix(rng, 4, 4, -9, 9);
        ASSERT_EQ(determinant(A), oracle::leibniz_det(A));
        ASSERT_EQ(determinant(A * B), determinant(A) * determinant(B));
        const RatMatrix R = to_rational(A) * Rational(1, 3);
        ASSERT_EQ(determinant(R), oracle::leibniz_det(R));
    }
}

TEST(Inverse, RoundTrip) {
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
        const RatMatrix A = to_rational(oracle::random_matrix(rng, 4, 4, -5, 5));
        if (determinant(A) == 0) continue;
        ASSERT_EQ(A * inverse(A), RatMatrix::identity(4));
    }
}

TEST(Rationals, Formatting) {
    EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
    EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
}
