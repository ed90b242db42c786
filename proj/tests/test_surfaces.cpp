#include "wallcross/errors.hpp"
#include "wallcross/surfaces.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace wallcross;

TEST(Surfaces, ProductRuled)
{
    for (int g = 1; g <= 5; ++g) {
        const auto s = product_ruled(g);
        EXPECT_EQ(s.q, g);
        EXPECT_EQ(s.square(s.K), 8 * (1 - g));
        EXPECT_EQ(s.pair(s.K, s.sigma), -2);
        EXPECT_EQ(s.square(s.sigma), 0);
    }
    EXPECT_EQ(product_ruled(1).K, (LatticeVector{0, -2}));
    EXPECT_EQ(product_ruled(2).square(product_ruled(2).K), -8);
    EXPECT_THROW(product_ruled(0), PreconditionError);
}

TEST(Surfaces, OddRuled)
{
    for (int g = 1; g <= 5; ++g) {
        const auto s = odd_ruled(g);
        const LatticeVector sigma_n{0, 1};
        EXPECT_EQ(s.square(sigma_n), -(2 * g - 1));
        EXPECT_NE(s.square(sigma_n) % 2, 0);
        EXPECT_EQ(s.square(s.K), 8 * (1 - g));
        EXPECT_EQ(s.pair(s.K, s.sigma), -2);
        // adjunction on the section: K.sigma + sigma^2 = 2g - 2
        EXPECT_EQ(s.pair(s.K, sigma_n) + s.square(sigma_n), 2 * g - 2);
    }
    EXPECT_EQ(odd_ruled(1).square(LatticeVector{0, 1}), -1);
    EXPECT_THROW(odd_ruled(0), PreconditionError);
}

TEST(Surfaces, EmptyWhenParityFails)
{
    EXPECT_TRUE(enumerate_walls(product_ruled(2), {1, 0}, -5, 10).empty());
}

TEST(Surfaces, ElementaryWallOnElliptic)
{
    const auto rows = enumerate_walls(product_ruled(1), {1, 1}, -2, 4);
    bool found = false;
    for (const auto& r : rows)
        if (r.a == 1 && r.b == 1) {
            found = true;
            EXPECT_EQ(r.zeta, (LatticeVector{1, -1}));
            EXPECT_EQ(r.wall.zeta2, -2);
            EXPECT_EQ(r.wall.derived.l_zeta, 0);
        }
    EXPECT_TRUE(found);
}

// Hand-computed scan for product_ruled(g): zeta = a f - b C has zeta^2 = -2ab.
TEST(Surfaces, ProductRuledMatchesDirectScan)
{
    for (int g = 1; g <= 3; ++g)
        for (long p1 : {-2L, -4L, -6L, -8L, -10L, -12L})
            for (const LatticeVector& w : {LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}}) {
                const auto s = product_ruled(g);
                const long bound = 8;
                std::set<std::pair<long, long>> want;
                const long w2 = 2 * w[0] * w[1];
                if ((p1 - w2) % 4 == 0)
                    for (long a = 1; a <= bound; ++a)
                        for (long b = 1; b <= bound; ++b) {
                            const long z2 = -2 * a * b;
                            if (a <= b * (g - 1) || z2 < p1 || (a - w[0]) % 2 != 0 || (b + w[1]) % 2 != 0)
                                continue;
                            const long zK = (2 * g - 2) * (-b) + (-2) * a;
                            try {
                                make_wall(p1, g, z2, zK, a * w[1] - b * w[0], w2, s.pair(w, s.K));
                            } catch (const InvalidWallError&) {
                                continue;
                            }
                            want.insert({a, b});
                        }
                std::set<std::pair<long, long>> got;
                for (const auto& r : enumerate_walls(s, w, p1, bound)) {
                    got.insert({r.a, r.b});
                    EXPECT_GT(r.a, r.b * (g - 1));
                }
                EXPECT_EQ(got, want) << "g=" << g << " p1=" << p1 << " w=(" << w[0] << "," << w[1] << ")";
            }
}

TEST(Surfaces, OddRuledConeFilter)
{
    const auto s = odd_ruled(2);
    long total = 0;
    for (long p1 = -1; p1 >= -20; --p1)
        for (const auto& r : enumerate_walls(s, {1, 1}, p1, 10)) {
            EXPECT_GT(2 * r.a, r.b * 3);
            EXPECT_LT(r.wall.zeta2, 0);
            EXPECT_GE(r.wall.zeta2, p1);
            ++total;
        }
    EXPECT_GT(total, 0);
}

TEST(Surfaces, DeltaColumn)
{
    const auto s = product_ruled(1);
    const LatticeVector alpha{1, 1};
    const auto rows = enumerate_walls(s, {1, 1}, -6, 6, alpha);
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) {
        ASSERT_EQ(r.delta.has_value(), r.wall.derived.l_zeta <= 1);
        if (!r.delta)
            continue;
        const auto p = surface_pairings(s, r.zeta, alpha);
        const auto want = r.wall.derived.l_zeta == 0 ? delta_l0(r.wall, p, 1, 0) : delta_l1(r.wall, p, 1, 0);
        EXPECT_EQ(*r.delta, want.value);
    }
}

TEST(Surfaces, CsvAndJsonAgree)
{
    const auto rows = enumerate_walls(product_ruled(1), {1, 1}, -6, 6, LatticeVector{1, 2});
    const auto doc = walls_to_json(rows);
    std::istringstream csv(walls_to_csv(rows));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "zeta,a,b,zeta2,zetaK,l_zeta,h_zeta,h_minus_zeta,d,delta");
    std::size_t i = 0;
    while (std::getline(csv, line)) {
        ASSERT_LT(i, doc.size());
        std::ostringstream want;
        const auto& row = doc[i];
        want << row["zeta"][0].get<long>() << ';' << row["zeta"][1].get<long>() << ',' << row["a"] << ',' << row["b"]
             << ',' << row["zeta2"] << ',' << row["zetaK"] << ',' << row["l_zeta"] << ',' << row["h_zeta"] << ','
             << row["h_minus_zeta"] << ',' << row["d"] << ','
             << (row["delta"].is_null() ? std::string() : row["delta"].get<std::string>());
        EXPECT_EQ(line, want.str());
        ++i;
    }
    EXPECT_EQ(i, doc.size());
}

TEST(Surfaces, BadArguments)
{
    EXPECT_THROW(enumerate_walls(product_ruled(1), {1, 1}, -2, 0), PreconditionError);
    EXPECT_THROW(enumerate_walls(product_ruled(1), {1}, -2, 3), PreconditionError);
}

TEST(Surfaces, JsonDescriptions)
{
    const auto s = surface_from_json(nlohmann::json::parse(R"({"family": "odd_ruled", "g": 3})"));
    EXPECT_EQ(s.q, 3);
    EXPECT_EQ(s.square(s.K), -16);
    const auto back = surface_from_json(surface_to_json(s));
    EXPECT_EQ(back.gram, s.gram);
    EXPECT_EQ(back.K, s.K);
    EXPECT_THROW(surface_from_json(nlohmann::json::parse(R"({"family": "k3"})")), InputError);
}
