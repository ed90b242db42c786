#include "support.hpp"

#include "wallcross/jacobian_model.hpp"

#include <gtest/gtest.h>

using namespace wallcross;
using namespace wallcross::testing;

TEST(JacobianModel, QZeroCollapses)
{
    const auto m = block_model(0, {});
    EXPECT_TRUE(m.omega().is_zero());
    EXPECT_TRUE(m.E().is_zero());
    EXPECT_EQ(m.vol(), 1);
    EXPECT_EQ(m.spec().generators().size(), 5u); // four symbols and [S]
}

TEST(JacobianModel, Volumes)
{
    EXPECT_EQ(block_model(1, {1}).vol(), 1);
    EXPECT_EQ(block_model(1, {5}).vol(), 5);
    EXPECT_EQ(block_model(2, {1, 1}).vol(), 1);
    EXPECT_EQ(block_model(2, {2, 3}).vol(), 6);
    EXPECT_EQ(block_model(3, {1, 2, 3}).vol(), 6);
    EXPECT_EQ(block_model(2, {4}).vol(), 0);
}

TEST(JacobianModel, VolMatchesRingIntegral)
{
    for (auto blocks : {std::vector<long>{3}, std::vector<long>{2, -5}, std::vector<long>{1, 2, 3}}) {
        const int q = static_cast<int>(blocks.size());
        const auto m = block_model(q, blocks);
        Rational fact = 1;
        for (int i = 2; i <= q; ++i)
            fact *= i;
        EXPECT_EQ(m.vol(), integrate(power(m.omega(), q) * m.point()) / fact);
    }
}

TEST(JacobianModel, OmegaQEqualsOne)
{
    const auto m = block_model(1, {1});
    EXPECT_EQ(m.omega(), jodd(m, 0) * jodd(m, 1));
}

TEST(JacobianModel, EAlphaClosedForm)
{
    PairingValues p;
    p.sigmaAlpha = 3;
    const auto m = block_model(1, {1}, p);
    EXPECT_EQ(m.e_alpha(), Rational(-6) * jodd(m, 0) * jodd(m, 1));

    const auto m0 = block_model(2, {1, 2}, PairingValues{});
    EXPECT_TRUE(m0.e_alpha().is_zero());
}

TEST(JacobianModel, EClassesAgreeWithSlantOfESquared)
{
    std::mt19937 rng(21);
    for (int t = 0; t < 10; ++t) {
        const int q = 1 + t % 3;
        std::vector<long> blocks;
        for (int i = 0; i < q; ++i)
            blocks.push_back(std::uniform_int_distribution<int>(1, 3)(rng) * (rng() % 2 ? 1 : -1));
        const auto m = block_model(q, blocks, random_pairings(rng));
        const auto E2 = m.E() * m.E();
        for (int e : {kSigma, kZeta, kK, kAlpha})
            EXPECT_EQ(m.e_divisor(e), slant_divisor(E2, e));
        EXPECT_EQ(m.e_alpha(), Rational(-2) * m.spec().gram(kSigma, kAlpha) * m.omega());
    }
}

TEST(JacobianModel, EOfPointVanishes)
{
    std::mt19937 rng(22);
    for (int q = 0; q <= 3; ++q) {
        std::vector<long> blocks(q, 2);
        const auto m = block_model(q, blocks, random_pairings(rng));
        EXPECT_TRUE(slant_top(m.E() * m.E()).is_zero());
    }
}

TEST(JacobianModel, FFunctional)
{
    const auto m = block_model(1, {1});
    EXPECT_EQ(m.F_functional(InsertionWord{}), 1);
    InsertionWord w;
    w.gammas = {0, 1};
    EXPECT_EQ(m.F_functional(w), 1);
    w.gammas = {0};
    EXPECT_EQ(m.F_functional(w), 0); // odd a + b

    PairingInput degenerate;
    degenerate.q = 1;
    degenerate.a_blocks = std::vector<long>{};
    EXPECT_EQ(JacobianModel(degenerate).F_functional(InsertionWord{}), 0);
}

TEST(JacobianModel, FFunctionalMatchesDirectIntegral)
{
    PairingValues p;
    p.sigmaZeta = 1;
    const auto m = block_model(2, {2, 3}, p);
    InsertionWord w;
    w.gammas = {0};
    w.threes = {1};
    // gamma_1 i_{b_2} omega, times omega^{q - 1}
    const auto direct = jodd(m, 0) * m.interior_omega(1) * m.omega() * m.point();
    EXPECT_EQ(m.F_functional(w), integrate(direct));
}

TEST(JacobianModel, DefaultBlocksAndMatrixInput)
{
    PairingInput in;
    in.q = 2;
    EXPECT_EQ(JacobianModel(in).vol(), 1);
    in.a_matrix = block_matrix(2, {2, 3});
    EXPECT_EQ(JacobianModel(in).vol(), 6);
    in.a_blocks = std::vector<long>{1};
    EXPECT_THROW(build_model(in), PreconditionError);
}

TEST(JacobianModel, JsonRoundTrip)
{
    const auto doc = nlohmann::json::parse(R"({"q": 2, "a_blocks": [2, 3],
        "pairings": {"zeta2": -4, "zetaK": "1/2", "zetaAlpha": 2, "sigmaZeta": 1,
                     "sigmaAlpha": 1, "sigmaK": -2, "K2": 8, "Kalpha": 0, "alpha2": -1}})");
    const auto in = parse_pairing_input(doc);
    EXPECT_EQ(in.q, 2);
    EXPECT_EQ(in.pairings.zetaK, Rational(1, 2));
    EXPECT_EQ(in.pairings.K2, 8);
    const auto back = parse_pairing_input(pairing_input_to_json(in));
    EXPECT_EQ(back.pairings, in.pairings);
    EXPECT_EQ(back.a_blocks, in.a_blocks);
}

TEST(JacobianModel, JsonRejectsBadInput)
{
    EXPECT_THROW(parse_pairing_input(nlohmann::json::parse(R"({"pairings": {}})")), InputError);
    EXPECT_THROW(parse_pairing_input(nlohmann::json::parse(R"({"q": -1, "pairings": {}})")), InputError);
    EXPECT_THROW(parse_pairing_input(nlohmann::json::parse(R"({"q": 1, "a_blocks": [1], "a_matrix": [[0,1],[-1,0]], "pairings": {}})")),
                 InputError);
}
