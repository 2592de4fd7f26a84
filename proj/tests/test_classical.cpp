#include "oracles.hpp"

#include "regge3j/classical.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace regge3j;

namespace {

HalfInt h(const char* text) { return HalfInt::parse(text); }

SqrtRational sr(int sign, long p, long q = 1) { return SqrtRational::from_parts(sign, Rational(p, q)); }

// (j1 j2 j1+j2; m1 m2 −m1−m2), closed form for the stretched triangle.
SqrtRational flat_closed_form(std::int64_t J1, std::int64_t J2, std::int64_t M1, std::int64_t M2)
{
    auto f = [](std::int64_t twice) { return factorial(twice / 2); };
    BigInt num = factorial(J1) * factorial(J2) * f(J1 + J2 + M1 + M2) * f(J1 + J2 - M1 - M2);
    BigInt den = factorial(J1 + J2 + 1) * f(J1 + M1) * f(J1 - M1) * f(J2 + M2) * f(J2 - M2);
    const std::int64_t phase = (J1 - J2 + M1 + M2) / 2;
    return SqrtRational::from_parts(parity_sign(phase), Rational(num, den));
}

} // namespace

TEST(TriangleDelta, Examples)
{
    EXPECT_EQ(triangle_delta(h("0"), h("0"), h("0")), SqrtRational::one());
    EXPECT_EQ(triangle_delta(h("1"), h("1"), h("1")), sr(1, 1, 24));
    EXPECT_EQ(triangle_delta(h("1/2"), h("1/2"), h("1")), sr(1, 1, 6));
    EXPECT_THROW(triangle_delta(h("1"), h("1"), h("3")), std::domain_error);
    EXPECT_THROW(triangle_delta(h("1/2"), h("1/2"), h("1/2")), std::domain_error);
}

TEST(VFactor, Examples)
{
    const Symbol3j zero = Symbol3j::from_twice({0, 0, 0, 0, 0, 0});
    EXPECT_EQ(v_factor(zero), SqrtRational::one());
    const Symbol3j s = Symbol3j::from_twice({2, 2, 0, 2, -2, 0});
    EXPECT_EQ(triangle_delta(s.j(0), s.j(1), s.j(2)) * v_factor(s), sr(1, 1, 3));
    EXPECT_TRUE(v_factor(Symbol3j::from_twice({2, 2, 2, 0, 0, 0})).is_zero());
}

TEST(Compute3j, Examples)
{
    EXPECT_EQ(compute_3j(Symbol3j::from_twice({0, 0, 0, 0, 0, 0})), SqrtRational::one());
    EXPECT_EQ(compute_3j(Symbol3j::from_twice({2, 2, 0, 2, -2, 0})), sr(1, 1, 3));
    EXPECT_EQ(compute_3j(Symbol3j::from_twice({2, 2, 4, 2, 2, -4})), sr(1, 1, 5));
    EXPECT_EQ(compute_3j(Symbol3j::from_twice({2, 2, 4, 2, 2, -4})), flat_closed_form(2, 2, 2, 2));
    EXPECT_TRUE(compute_3j(Symbol3j::from_twice({2, 2, 2, 0, 0, 0})).is_zero());
    EXPECT_THROW(compute_3j(Symbol3j::from_twice({1, 1, 1, 0, 0, 0})), InvalidSymbol);
}

TEST(Compute3j, StretchedZeroSpin)
{
    // (j j 0; m −m 0) = (−1)^{j−m} / √(2j+1)
    for (std::int64_t J = 0; J <= 12; ++J) {
        for (std::int64_t M = -J; M <= J; M += 2) {
            const auto v = compute_3j(Symbol3j::from_twice({J, J, 0, M, -M, 0}));
            EXPECT_EQ(v, SqrtRational::from_parts(parity_sign((J - M) / 2), Rational(BigInt(1), BigInt(J + 1))));
        }
    }
}

TEST(Compute3j, FlatTriangles)
{
    for (std::int64_t J1 = 0; J1 <= 8; ++J1) {
        for (std::int64_t J2 = 0; J2 <= 8; ++J2) {
            for (std::int64_t M1 = -J1; M1 <= J1; M1 += 2) {
                for (std::int64_t M2 = -J2; M2 <= J2; M2 += 2) {
                    const Symbol3j s = Symbol3j::from_twice({J1, J2, J1 + J2, M1, M2, -M1 - M2});
                    EXPECT_EQ(compute_3j(s), flat_closed_form(J1, J2, M1, M2)) << s.to_string();
                }
            }
        }
    }
}

TEST(Compute3j, ColumnSymmetries)
{
    for (const auto& s : oracle::classical_symbols(6)) {
        const SqrtRational v = compute_3j(s);
        const int phase = s.spin_sum().to_integer() % 2 == 0 ? 1 : -1;
        const SqrtRational odd = phase > 0 ? v : -v;
        EXPECT_EQ(compute_3j(s.permuted({1, 2, 0})), v);
        EXPECT_EQ(compute_3j(s.permuted({2, 0, 1})), v);
        EXPECT_EQ(compute_3j(s.permuted({1, 0, 2})), odd);
        EXPECT_EQ(compute_3j(s.permuted({0, 2, 1})), odd);
        EXPECT_EQ(compute_3j(s.permuted({2, 1, 0})), odd);
        EXPECT_EQ(compute_3j(s.negated()), odd);
    }
}

TEST(Compute3j, Orthogonality)
{
    // Fixed (j1 j2 j3 m3): the sum over m1 of (2j3+1)·(3j)² is 1.
    std::map<std::array<std::int64_t, 4>, Rational> sums;
    for (const auto& s : oracle::classical_symbols(6)) {
        const auto k = s.key();
        sums[{k[0], k[1], k[2], k[5]}] += Rational(k[2] + 1) * compute_3j(s).square();
    }
    EXPECT_FALSE(sums.empty());
    for (const auto& [spins, total] : sums) {
        EXPECT_EQ(total, Rational(1)) << spins[0] << " " << spins[1] << " " << spins[2] << " " << spins[3];
    }
}

TEST(Compute3j, MatchesRacahOracleOnRandomSymbols)
{
    int checked = 0;
    while (checked < 3000) {
        const Symbol3j s = oracle::random_symbol(16, true);
        if (!validate_classical(s)) {
            continue;
        }
        ++checked;
        EXPECT_EQ(compute_3j(s), oracle::racah_3j(s)) << s.to_string();
    }
}

TEST(RacahSum, EmptyRangeIsZero)
{
    // z ≥ j2⁺ − j3⁻ = 1 but z ≤ j1⁻ = 0.
    EXPECT_TRUE(racah_sum({0, 0, 1, 0, 0, 0}).is_zero());
    EXPECT_EQ(racah_sum({0, 0, 0, 0, 0, 0}), Rational(1));
}
