#include "support.hpp"

#include "wallcross/char_classes.hpp"

#include <gtest/gtest.h>

using namespace wallcross;
using namespace wallcross::testing;

namespace {

ChernData random_chern_data(const JacobianModel& m, std::mt19937& rng, int n)
{
    ChernData d;
    d.rank = std::uniform_int_distribution<int>(-4, 6)(rng);
    for (int i = 1; i <= n; ++i)
        d.a.push_back(random_homogeneous(m, rng, i));
    return d;
}

// Newton: k c_k = sum_{i=1..k} (-1)^{i-1} c_{k-i} p_i with power sums p_i = a_i.
std::vector<GradedElement> newton_chern(const ChernData& d, const ModelPtr& model, int n)
{
    std::vector<GradedElement> c = {GradedElement::scalar(model, 1)};
    for (int k = 1; k <= n; ++k) {
        GradedElement sum = GradedElement::zero(model);
        for (int i = 1; i <= k; ++i) {
            const auto term = c[k - i] * d.component(i, model);
            if (i % 2 == 1)
                sum += term;
            else
                sum -= term;
        }
        c.push_back(sum * Rational(1, k));
    }
    return c;
}

} // namespace

TEST(CharClasses, LowDegreeChern)
{
    std::mt19937 rng(1);
    const auto m = block_model(2, {1, 2}, random_pairings(rng));
    const auto d = random_chern_data(m, rng, 3);
    EXPECT_EQ(chern_from_ch(d, 0, m.ptr()), m.scalar(1));
    EXPECT_EQ(chern_from_ch(d, 1, m.ptr()), d.a[0]);
    EXPECT_EQ(chern_from_ch(d, 2, m.ptr()), Rational(1, 2) * (d.a[0] * d.a[0] - d.a[1]));
}

TEST(CharClasses, LowDegreeSegre)
{
    std::mt19937 rng(2);
    const auto m = block_model(2, {1, 2}, random_pairings(rng));
    const auto d = random_chern_data(m, rng, 3);
    const auto c1 = chern_from_ch(d, 1, m.ptr());
    const auto c2 = chern_from_ch(d, 2, m.ptr());
    EXPECT_EQ(segre_from_ch(d, 1, m.ptr()), -d.a[0]);
    EXPECT_EQ(segre_from_ch(d, 1, m.ptr()), -c1);
    EXPECT_EQ(segre_from_ch(d, 2, m.ptr()), Rational(1, 2) * (d.a[0] * d.a[0] + d.a[1]));
    EXPECT_EQ(segre_from_ch(d, 2, m.ptr()), c1 * c1 - c2);
}

TEST(CharClasses, ChernMatchesNewtonIdentities)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 6; ++t) {
        const auto m = block_model(2, {1, t % 3 + 1}, random_pairings(rng));
        const auto d = random_chern_data(m, rng, 6);
        const auto c = newton_chern(d, m.ptr(), 6);
        for (int n = 0; n <= 6; ++n)
            EXPECT_EQ(chern_from_ch(d, n, m.ptr()), c[n]) << "n=" << n;
    }
}

TEST(CharClasses, SegreIsInverseOfTotalChern)
{
    std::mt19937 rng(9);
    for (int t = 0; t < 6; ++t) {
        const int q = t % 3;
        std::vector<long> blocks;
        for (int i = 0; i < q; ++i)
            blocks.push_back(i + 1);
        const auto m = block_model(q, blocks, random_pairings(rng));
        const auto d = random_chern_data(m, rng, 6);
        const auto inv = inverse_unit_series(total_chern(d, m.ptr()));
        for (int n = 0; n <= 6; ++n) {
            EXPECT_EQ(segre_from_ch(d, n, m.ptr()), inv.component(2 * n)) << "n=" << n;
            if (n >= 1) {
                GradedElement sum = GradedElement::zero(m.ptr());
                for (int i = 0; i <= n; ++i)
                    sum += chern_from_ch(d, i, m.ptr()) * segre_from_ch(d, n - i, m.ptr());
                EXPECT_TRUE(sum.is_zero()) << "n=" << n;
            }
        }
    }
}

TEST(CharClasses, DualAndDirectSum)
{
    std::mt19937 rng(4);
    const auto m = block_model(1, {1}, random_pairings(rng));
    const auto d = random_chern_data(m, rng, 3);
    const auto dual = ch_dual(d);
    EXPECT_EQ(dual.rank, d.rank);
    EXPECT_EQ(dual.a[0], -d.a[0]);
    EXPECT_EQ(dual.a[1], d.a[1]);
    EXPECT_EQ(dual.a[2], -d.a[2]);

    const auto twice = ch_dual(dual);
    EXPECT_EQ(twice.rank, d.rank);
    for (std::size_t i = 0; i < d.a.size(); ++i)
        EXPECT_EQ(twice.a[i], d.a[i]);

    ChernData zero;
    const auto sum = ch_direct_sum(d, zero);
    EXPECT_EQ(total_ch(sum, m.ptr()), total_ch(d, m.ptr()));
}

TEST(CharClasses, WhitneyForDirectSum)
{
    std::mt19937 rng(12);
    const auto m = block_model(2, {1, 1}, random_pairings(rng));
    for (int t = 0; t < 4; ++t) {
        const auto x = random_chern_data(m, rng, 4);
        const auto y = random_chern_data(m, rng, 4);
        EXPECT_EQ(total_chern(ch_direct_sum(x, y), m.ptr()), total_chern(x, m.ptr()) * total_chern(y, m.ptr()));
    }
}

TEST(CharClasses, ChernDataRoundTrip)
{
    std::mt19937 rng(6);
    const auto m = block_model(1, {2}, random_pairings(rng));
    const auto d = random_chern_data(m, rng, 3);
    const auto back = chern_data_from_ch(total_ch(d, m.ptr()));
    EXPECT_EQ(back.rank, d.rank);
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(back.component(i, m.ptr()), d.a[i - 1]);
}
