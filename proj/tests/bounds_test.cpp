#include "eqlines/bounds.hpp"

#include <gtest/gtest.h>

using namespace eqlines;

namespace {

std::vector<Rational> odd_reciprocals(std::initializer_list<int> ds)
{
    std::vector<Rational> out;
    for (int d : ds)
        out.push_back(make_rational(1, d));
    return out;
}

} // namespace

TEST(NeumannAngles, FiresAboveTwiceTheDimension)
{
    auto s = neumann_angles(19, 76, 4);
    EXPECT_EQ(s.rule, AngleRule::Neumann);
    EXPECT_EQ(s.candidates, odd_reciprocals({3, 5, 7, 9}));

    EXPECT_EQ(neumann_angles(19, 38).rule, AngleRule::Unconstrained);
    EXPECT_TRUE(neumann_angles(19, 38).candidates.empty());

    auto small = neumann_angles(3, 7, 2);
    EXPECT_EQ(small.rule, AngleRule::Neumann);
    EXPECT_EQ(small.candidates, odd_reciprocals({3, 5}));
}

TEST(LrsAngles, CandidatesAndThreshold)
{
    auto a = lrs_angles(19, 76, LrsThreshold::Strict2n3);
    EXPECT_EQ(a.rule, AngleRule::LRS);
    EXPECT_EQ(a.candidates, odd_reciprocals({3, 5}));

    auto b = lrs_angles(20, 96, LrsThreshold::Strict2n3);
    EXPECT_EQ(b.candidates, odd_reciprocals({3, 5}));

    EXPECT_EQ(lrs_angles(19, 41, LrsThreshold::Strict2n3).rule, AngleRule::Unconstrained);
    EXPECT_EQ(lrs_angles(19, 41, LrsThreshold::Neumaier2n1).rule, AngleRule::LRS);
}

TEST(LrsAngles, LimitComparedBySquaring)
{
    // (2k-1)^2 is odd and 2n even, so the limit is never hit exactly.
    EXPECT_EQ(lrs_angles(25, 60).candidates, odd_reciprocals({3, 5, 7})); // 49 <= 50
    EXPECT_EQ(lrs_angles(24, 60).candidates, odd_reciprocals({3, 5}));    // 49 > 48
    EXPECT_EQ(lrs_angles(4, 12).candidates, odd_reciprocals({}));
    EXPECT_EQ(lrs_angles(5, 14).candidates, odd_reciprocals({3}));
}

TEST(LrsAngles, AdmitsMatchesCandidates)
{
    auto a = lrs_angles(19, 76);
    EXPECT_TRUE(a.admits(QuadraticSurd(make_rational(1, 5))));
    EXPECT_FALSE(a.admits(QuadraticSurd(make_rational(1, 7))));
    EXPECT_FALSE(a.admits(sqrt_of_rational(make_rational(1, 5))));
}

TEST(LemmensSeidel, GateAtFifteen)
{
    EXPECT_EQ(lemmens_seidel_third(19), 36);
    EXPECT_EQ(lemmens_seidel_third(20), 38);
    EXPECT_EQ(lemmens_seidel_third(14), std::nullopt);
}

TEST(RelativeBound, Values)
{
    EXPECT_EQ(relative_bound(19, make_rational(1, 5)), Rational(76));
    EXPECT_EQ(relative_bound(20, make_rational(1, 5)), Rational(96));
    EXPECT_EQ(relative_bound(7, make_rational(1, 3)), Rational(28));
    EXPECT_EQ(relative_bound(30, make_rational(1, 5)), std::nullopt); // nc^2 > 1
    EXPECT_EQ(relative_bound(25, make_rational(1, 5)), std::nullopt); // nc^2 = 1
    EXPECT_THROW(relative_bound(5, QuadraticSurd(0)), DomainError);
}

TEST(GerzonBound, Values)
{
    auto g23 = gerzon_bound(23);
    EXPECT_EQ(g23.bound, 276);
    EXPECT_EQ(g23.attaining_angle, QuadraticSurd(make_rational(1, 5)));
    auto g7 = gerzon_bound(7);
    EXPECT_EQ(g7.bound, 28);
    EXPECT_EQ(g7.attaining_angle, QuadraticSurd(make_rational(1, 3)));
    auto g2 = gerzon_bound(2);
    EXPECT_EQ(g2.bound, 3);
    EXPECT_EQ(g2.attaining_angle, QuadraticSurd(make_rational(1, 2)));
}

TEST(DesignBound, Values)
{
    EXPECT_EQ(dgs_design_bound(22, 4), 275);
    EXPECT_EQ(dgs_design_bound(23, 5), 552);
    for (int n = 1; n < 10; ++n)
        EXPECT_EQ(dgs_design_bound(n, 1), 2);
}

TEST(DesignBound, GerzonIsHalfTheFiveDesignBound)
{
    for (int n = 2; n <= 200; ++n)
        EXPECT_EQ(BigInt(gerzon_bound(n).bound) * 2, dgs_design_bound(n, 5)) << n;
}

TEST(AngleSets, LrsRefinesNeumann)
{
    for (int n = 2; n <= 60; ++n)
        for (int m = 2 * n + 4; m <= n * (n + 1) / 2; m += 3) {
            auto lrs = lrs_angles(n, m);
            auto neu = neumann_angles(n, m, 64);
            ASSERT_EQ(lrs.rule, AngleRule::LRS);
            ASSERT_EQ(neu.rule, AngleRule::Neumann);
            for (const Rational& c : lrs.candidates)
                EXPECT_NE(std::find(neu.candidates.begin(), neu.candidates.end(), c), neu.candidates.end());
        }
}

TEST(AngleSets, LrsMonotoneInDimension)
{
    const int m = 400;
    for (int n = 2; 2 * n + 3 < m && n < 150; ++n) {
        auto lo = lrs_angles(n, m).candidates;
        for (int n2 = n; 2 * n2 + 3 < m && n2 < 150; n2 += 7) {
            auto hi = lrs_angles(n2, m).candidates;
            for (const Rational& c : lo)
                EXPECT_NE(std::find(hi.begin(), hi.end(), c), hi.end());
        }
    }
}
