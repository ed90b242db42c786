#include "support.hpp"

#include "wallcross/closed_forms.hpp"
#include "wallcross/oracle_general.hpp"

#include <gtest/gtest.h>

using namespace wallcross;
using namespace wallcross::testing;

namespace {

// zeta.K is bumped by one when its parity disagrees with zeta^2.
long fix_parity(long zetaK, long zeta2) { return (zetaK - zeta2) % 2 == 0 ? zetaK : zetaK + 1; }

// l_zeta = 0 wall with w = zeta (epsilon = +1); p1 = zeta^2 = 3q - 3 - d.
WallGeometry l0_wall(int q, long d, long zetaK)
{
    const long p1 = 3L * q - 3 - d;
    zetaK = fix_parity(zetaK, p1);
    return make_wall(p1, q, p1, zetaK, p1, p1, zetaK);
}

// l_zeta = 1 wall with w = zeta; zeta^2 = p1 + 4.
WallGeometry l1_wall(int q, long d, long zetaK)
{
    const long p1 = 3L * q - 3 - d;
    zetaK = fix_parity(zetaK, p1 + 4);
    return make_wall(p1, q, p1 + 4, zetaK, p1 + 4, p1 + 4, zetaK);
}

PairingValues matching(PairingValues p, const WallGeometry& w)
{
    p.zeta2 = w.zeta2;
    p.zetaK = w.zetaK;
    return p;
}

Rational fact(long n)
{
    Rational f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Rational choose(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    return fact(n) / (fact(k) * fact(n - k));
}

Rational ipow(const Rational& x, long e)
{
    if (e < 0)
        return 0;
    Rational out = 1;
    for (long i = 0; i < e; ++i)
        out *= x;
    return out;
}

Rational two_pow(long e)
{
    return e >= 0 ? ipow(2, e) : 1 / ipow(2, -e);
}

// One summand of the l_zeta = 0 formula, epsilon = +1.
Rational l0_term(int q, long d, int r, int b, const PairingValues& p, const Rational& vol)
{
    const int sign = (r + d) % 2 == 0 ? 1 : -1;
    return sign * two_pow(3L * q - b - d) * fact(q) / fact(q - b) * choose(d - 2 * r, b) *
           ipow(p.zetaAlpha, d - 2 * r - b) * ipow(p.sigmaAlpha, b) * ipow(p.sigmaZeta, q - b) * vol;
}

} // namespace

TEST(ClosedForms, L0Examples)
{
    PairingValues p;
    p.zetaAlpha = 2;
    p.sigmaAlpha = 1;
    p.sigmaZeta = 1;
    const auto w1 = l0_wall(1, 1, 1);
    EXPECT_EQ(delta_l0(w1, matching(p, w1), 1, 0).value, -10);
    EXPECT_EQ(l0_term(1, 1, 0, 0, p, 1), -8);
    EXPECT_EQ(l0_term(1, 1, 0, 1, p, 1), -2);

    PairingValues p0;
    p0.zetaAlpha = 2;
    const auto w0 = l0_wall(0, 1, 0);
    EXPECT_EQ(delta_l0(w0, matching(p0, w0), 1, 0).value, -1);
}

TEST(ClosedForms, L0MatchesTermwiseSum)
{
    std::mt19937 rng(31);
    for (int q = 0; q <= 3; ++q)
        for (long d = 1; d <= 8; ++d) {
            const long p1 = 3L * q - 3 - d;
            if (p1 >= 0)
                continue;
            const auto wall = l0_wall(q, d, (p1 % 2 == 0) ? 0 : 1);
            const auto p = matching(random_pairings(rng), wall);
            for (int r = 0; 2 * r <= d; ++r) {
                Rational sum = 0;
                for (int b = 0; b <= q; ++b)
                    sum += l0_term(q, d, r, b, p, 3);
                EXPECT_EQ(delta_l0(wall, p, 3, r).value, sum) << "q=" << q << " d=" << d << " r=" << r;
            }
        }
}

TEST(ClosedForms, L0AgreesWithOracle)
{
    std::mt19937 rng(32);
    const auto wall = l0_wall(1, 3, 1);
    for (int t = 0; t < 10; ++t) {
        const auto p = matching(random_pairings(rng), wall);
        const auto m = block_model(1, {1 + t % 3}, p);
        InsertionWord word;
        word.r = 1;
        word.s = 1;
        EXPECT_EQ(delta_l0(wall, p, m.vol(), 1).value, delta_oracle_l0(m, wall, word).value);
    }
}

TEST(ClosedForms, RegimeErrors)
{
    PairingValues p;
    const auto w1 = l1_wall(0, 5, 0);
    EXPECT_THROW(delta_l0(w1, matching(p, w1), 1, 0), RegimeError);
    const auto w0 = l0_wall(0, 1, 0);
    EXPECT_THROW(delta_l1(w0, matching(p, w0), 1, 0), RegimeError);
    EXPECT_THROW(delta_l0(w0, matching(p, w0), 1, 1), PreconditionError); // d - 2r < 0
    PairingValues off = matching(p, w0);
    off.zeta2 = -8;
    EXPECT_THROW(delta_l0(w0, off, 1, 0), PreconditionError);
}

TEST(ClosedForms, OddWordReductions)
{
    std::mt19937 rng(33);
    for (int q = 1; q <= 2; ++q) {
        const auto wall = l0_wall(q, 4, 0);
        const auto p = matching(random_pairings(rng), wall);
        const auto m = block_model(q, std::vector<long>(q, 2), p);
        InsertionWord plain;
        plain.r = 1;
        plain.s = 2;
        EXPECT_EQ(delta_l0_odd(wall, m, plain).value, delta_l0(wall, p, m.vol(), 1).value);

        // 3a + b is odd whenever a + b is, so such words never reach degree 2d
        InsertionWord odd;
        odd.gammas = {0};
        odd.threes = {0, 1};
        odd.s = 1;
        EXPECT_EQ(delta_l0_odd(wall, m, odd).value, 0); // a + b odd
    }
}

TEST(ClosedForms, OddWordAgreesWithOracle)
{
    std::mt19937 rng(34);
    const auto wall = l0_wall(1, 4, 0);
    for (int t = 0; t < 6; ++t) {
        const auto p = matching(random_pairings(rng), wall);
        const auto m = block_model(1, {1 + t % 2}, p);
        InsertionWord word; // alpha^s gamma_1 A_2: 2s + 3 + 1 = 8
        word.gammas = {0};
        word.threes = {1};
        word.s = 2;
        EXPECT_EQ(delta_l0_odd(wall, m, word).value, delta_oracle_l0(m, wall, word).value);
    }
}

TEST(ClosedForms, L1Example)
{
    PairingValues p;
    p.K2 = 8;
    p.zetaAlpha = 2;
    p.alpha2 = -1;
    const auto wall = l1_wall(0, 5, 0);
    EXPECT_EQ(delta_l1(wall, matching(p, wall), 1, 0).value, 12);
}

TEST(ClosedForms, L1AgreesWithOracle)
{
    std::mt19937 rng(35);
    const auto wall = l1_wall(1, 5, 1);
    for (int t = 0; t < 6; ++t) {
        const auto p = matching(random_pairings(rng, 2), wall);
        const auto m = block_model(1, {1 + t % 2}, p);
        for (int r = 0; r <= 1; ++r)
            EXPECT_EQ(delta_l1(wall, p, m.vol(), r).value, delta_oracle_l1(m, wall, r).value) << "r=" << r;
    }
}

TEST(ClosedForms, OddUnderEpsilonFlip)
{
    // same zeta, w = zeta - 2u with u^2 = -1, u.zeta = 0, u.K = 1
    PairingValues p;
    p.zetaAlpha = 3;
    p.sigmaAlpha = 1;
    p.sigmaZeta = -2;
    const auto plus = l0_wall(1, 5, 1);
    const auto minus = make_wall(plus.p1, 1, plus.zeta2, plus.zetaK, plus.zeta2, plus.zeta2 - 4, plus.zetaK - 2);
    ASSERT_EQ(eps_kotschick(minus.zeta2, minus.zetaW, minus.w2), -1);
    const auto q = matching(p, plus);
    EXPECT_EQ(delta_l0(plus, q, 1, 1).value, -delta_l0(minus, q, 1, 1).value);
}

TEST(ClosedForms, SnSmallN)
{
    std::mt19937 rng(36);
    const auto m = block_model(2, {1, 2}, random_pairings(rng));
    EXPECT_EQ(sn_closed(m, 0), m.scalar(2));
    EXPECT_EQ(sn_closed(m, 1), m.e_zeta() * Rational(8) - m.zeta() * Rational(4) - m.E() * Rational(8));
}

TEST(ClosedForms, SnMatchesDeterminantSegre)
{
    std::mt19937 rng(37);
    for (int q = 0; q <= 2; ++q) {
        const auto wall = l1_wall(q, 3L * q + 2, (q % 2 == 0) ? 0 : 1);
        for (int t = 0; t < 2; ++t) {
            const auto p = matching(random_pairings(rng, 2), wall);
            const auto m = block_model(q, std::vector<long>(q, 1 + t), p);
            const auto b0 = segre_bundle(m, wall, 0);
            const auto b1 = segre_bundle(m, wall, 1);
            for (int n = 0; n <= 5; ++n)
                EXPECT_EQ(sn_closed(m, n), segre_from_ch(b0, n, m.ptr()) + segre_from_ch(b1, n, m.ptr()))
                    << "q=" << q << " n=" << n;
        }
    }
}

TEST(ClosedForms, InIdentities)
{
    std::mt19937 rng(38);
    for (int q = 0; q <= 2; ++q) {
        const auto m = block_model(q, std::vector<long>(q, 2), random_pairings(rng));
        EXPECT_EQ(In_determinant(m, 1), m.e_zeta() * Rational(4) - m.zeta() * Rational(2) - m.E() * Rational(4));
        const auto four_e = m.e_zeta() * Rational(4);
        for (int n = 0; n <= 5; ++n) {
            const auto In = In_determinant(m, n);
            EXPECT_EQ(In_recursive(m, n), In);
            EXPECT_EQ(In_closed(m, n), In);
            auto rhs = In * Rational(2);
            if (n >= 2)
                rhs += m.K() * m.K() * power(four_e, n - 2) * Rational(n * (n - 1));
            EXPECT_EQ(sn_closed(m, n) * fact(n), rhs) << "n=" << n;
        }
    }
}

TEST(ClosedForms, LeadingSjbSpecialisations)
{
    PairingValues p;
    p.sigmaAlpha = 2;
    p.alpha2 = -3;
    p.zetaAlpha = 4;
    const auto m = block_model(2, {1, 1}, p);
    EXPECT_EQ(leading_Sjb(m, 0, LeadingIndex::Top), power(m.e_alpha(), 2));
    EXPECT_EQ(leading_Sjb(m, 1, LeadingIndex::Top), power(m.e_alpha(), 2) * Rational(-6));
    EXPECT_THROW(leading_Sjb(m, 0, LeadingIndex::HilbertBelow), PreconditionError);
    EXPECT_THROW(leading_Sjb(block_model(0, {}), 1, LeadingIndex::JacobianBelow), PreconditionError);
}

TEST(ClosedForms, LeadingMatchesLowTermsForL0)
{
    std::mt19937 rng(39);
    for (int q = 0; q <= 3; ++q)
        for (long d = 3; d <= 8; ++d) {
            const long p1 = 3L * q - 3 - d;
            if (p1 >= 0)
                continue;
            const auto wall = l0_wall(q, d, (p1 % 2 == 0) ? 0 : 1);
            const auto p = matching(random_pairings(rng), wall);
            for (int r = 0; d - 2 * r >= q; ++r) {
                const auto lead = delta_leading(wall, p, 2, r);
                ASSERT_TRUE(lead.modulus_exponent.has_value());
                EXPECT_EQ(*lead.modulus_exponent, d - 2 * r - q + 2);
                Rational want = l0_term(q, d, r, q, p, 2);
                if (q >= 1)
                    want += l0_term(q, d, r, q - 1, p, 2);
                EXPECT_EQ(lead.value, want) << "q=" << q << " d=" << d << " r=" << r;
            }
        }
}

TEST(ClosedForms, LeadingVanishesAtAZero)
{
    PairingValues p;
    p.sigmaAlpha = 1;
    p.sigmaZeta = 1;
    p.alpha2 = 2;
    const auto wall = l1_wall(1, 7, 1);
    const auto lead = delta_leading(wall, matching(p, wall), 1, 0);
    EXPECT_EQ(lead.value, 0);
    EXPECT_EQ(lead.path, DeltaPath::LeadingTerm);
}

TEST(ClosedForms, LeadingPrecondition)
{
    const auto wall = l1_wall(2, 8, 0);
    EXPECT_THROW(delta_leading(wall, matching({}, wall), 1, 3), PreconditionError);
}

TEST(ClosedForms, JsonCarriesRationalsAsStrings)
{
    PairingValues p;
    p.zetaAlpha = 1;
    const auto wall = l0_wall(0, 1, 0);
    const auto v = delta_l0(wall, matching(p, wall), 1, 0);
    const auto doc = delta_to_json(v);
    EXPECT_EQ(doc["value"], "-1/2");
    EXPECT_EQ(doc["path"], "closed-form");
}
