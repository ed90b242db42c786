#include "support.hpp"

#include "wallcross/graded_ring.hpp"

#include <gtest/gtest.h>

using namespace wallcross;
using namespace wallcross::testing;

TEST(GradedRing, OddSquareVanishes)
{
    const auto m = block_model(1, {1});
    EXPECT_TRUE((jodd(m, 0) * jodd(m, 0)).is_zero());
    EXPECT_TRUE((sodd(m, 1) * sodd(m, 1)).is_zero());
}

TEST(GradedRing, KoszulSignOnMixedProduct)
{
    const auto m = block_model(1, {1});
    // beta_i (x) beta_i^#, written with the Jacobian factor first
    const auto x1 = -(jodd(m, 0) * sodd(m, 0));
    const auto x2 = -(jodd(m, 1) * sodd(m, 1));
    EXPECT_EQ(x1 * x2, -(jodd(m, 0) * jodd(m, 1) * m.sigma()));
}

TEST(GradedRing, OddGeneratorsAnticommute)
{
    const auto m = block_model(2, {1, 2});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            EXPECT_EQ(jodd(m, i) * jodd(m, j), -(jodd(m, j) * jodd(m, i)));
            EXPECT_EQ(jodd(m, i) * sodd(m, j), -(sodd(m, j) * jodd(m, i)));
        }
}

TEST(GradedRing, SurfaceOddProductsUseA)
{
    const auto m = block_model(2, {2, 3});
    EXPECT_EQ(sodd(m, 0) * sodd(m, 1), m.sigma() * Rational(2));
    EXPECT_EQ(sodd(m, 1) * sodd(m, 0), m.sigma() * Rational(-2));
    EXPECT_EQ(sodd(m, 2) * sodd(m, 3), m.sigma() * Rational(3));
    EXPECT_TRUE((sodd(m, 0) * sodd(m, 2)).is_zero());
    EXPECT_TRUE((sodd(m, 0) * m.sigma()).is_zero());
}

TEST(GradedRing, ESquaredIsMinusTwoSigmaOmega)
{
    for (auto blocks : {std::vector<long>{1}, std::vector<long>{2, 3}, std::vector<long>{1, -1, 4}}) {
        const int q = static_cast<int>(blocks.size());
        const auto m = block_model(q, blocks);
        const auto E = m.E();
        EXPECT_EQ(E * E, Rational(-2) * m.sigma() * m.omega()) << "q=" << q;
        EXPECT_TRUE(power(E, 3).is_zero());
        EXPECT_TRUE(power(E, 4).is_zero());
    }
}

TEST(GradedRing, Associativity)
{
    std::mt19937 rng(7);
    const auto m = block_model(2, {1, 2});
    for (int t = 0; t < 20; ++t) {
        const auto a = random_nilpotent_even(m, rng, 2) + jodd(m, t % 4);
        const auto b = random_nilpotent_even(m, rng, 2) + sodd(m, (t + 1) % 4);
        const auto c = random_nilpotent_even(m, rng, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(GradedRing, ExpExamples)
{
    const auto m0 = block_model(0, {}, PairingValues{.zeta2 = -3});
    EXPECT_EQ(exp_truncated(GradedElement::zero(m0.ptr())), m0.scalar(1));
    EXPECT_EQ(exp_truncated(m0.zeta()), m0.scalar(1) + m0.zeta() + m0.point() * Rational(-3, 2));

    const auto m1 = block_model(1, {1});
    const auto twoE = m1.E() * Rational(2);
    EXPECT_EQ(exp_truncated(twoE), m1.scalar(1) + twoE + Rational(-4) * m1.sigma() * m1.omega());
}

TEST(GradedRing, ExpIsAHomomorphism)
{
    std::mt19937 rng(11);
    const auto m = block_model(2, {1, 3}, random_pairings(rng));
    for (int t = 0; t < 10; ++t) {
        const auto a = random_nilpotent_even(m, rng);
        const auto b = random_nilpotent_even(m, rng);
        EXPECT_EQ(exp_truncated(a + b), exp_truncated(a) * exp_truncated(b));
    }
}

TEST(GradedRing, InverseExamples)
{
    const auto m0 = block_model(0, {}, PairingValues{.zeta2 = 5});
    EXPECT_EQ(inverse_unit_series(m0.scalar(1)), m0.scalar(1));
    const auto c1 = m0.zeta();
    EXPECT_EQ(inverse_unit_series(m0.scalar(1) + c1), m0.scalar(1) - c1 + m0.point() * Rational(5));
}

TEST(GradedRing, InverseOfRandomUnit)
{
    std::mt19937 rng(3);
    const auto m = block_model(2, {1, 1}, random_pairings(rng));
    for (int t = 0; t < 20; ++t) {
        const auto u = m.scalar(1) + random_nilpotent_even(m, rng);
        EXPECT_EQ(u * inverse_unit_series(u), m.scalar(1));
        EXPECT_EQ(inverse_unit_series(u) * u, m.scalar(1));
    }
}

TEST(GradedRing, Integrate)
{
    const auto m1 = block_model(1, {1});
    EXPECT_EQ(integrate(m1.scalar(1)), 0);
    EXPECT_EQ(integrate(m1.omega() * m1.point()), 1);
    EXPECT_EQ(integrate(jodd(m1, 0) * jodd(m1, 1) * m1.point()), 1);
    EXPECT_EQ(integrate(jodd(m1, 1) * jodd(m1, 0) * m1.point()), -1);

    const auto m2 = block_model(2, {1, 1});
    EXPECT_EQ(integrate(power(m2.omega(), 2) * m2.point()), 2);
}

TEST(GradedRing, EvenPairingThroughTop)
{
    PairingValues p;
    p.zeta2 = -4;
    p.zetaAlpha = 3;
    p.K2 = 8;
    const auto m = block_model(0, {}, p);
    EXPECT_EQ(m.zeta() * m.alpha(), m.point() * Rational(3));
    EXPECT_EQ(m.K() * m.K(), m.point() * Rational(8));
    EXPECT_TRUE((m.sigma() * m.sigma()).is_zero());
    EXPECT_TRUE((m.point() * m.zeta()).is_zero());
}

TEST(GradedRing, ModelMismatchThrows)
{
    const auto a = block_model(1, {1});
    const auto b = block_model(1, {2});
    EXPECT_THROW((void)(a.E() + b.E()), ModelMismatchError);
}

TEST(GradedRing, CanonicalJson)
{
    const auto m = block_model(1, {1});
    const auto x = m.E() * Rational(1, 2) + m.scalar(3);
    EXPECT_EQ(x.to_json(), (m.scalar(3) + m.E() * Rational(2, 4)).to_json());
    EXPECT_NE(x.to_json().find("\"3/1\""), std::string::npos);
}
