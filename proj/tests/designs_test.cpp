#include "eqlines/designs.hpp"

#include <gtest/gtest.h>

using namespace eqlines;

namespace {

QuadraticSurd q(std::int64_t p, std::int64_t r = 1) { return QuadraticSurd(make_rational(p, r)); }

// Independent oracle: inner products straight from the idempotent
// E = A - other I - ((k - other)/v) J, normalised to unit diagonal.
std::pair<QuadraticSurd, QuadraticSurd> idempotent_entries(const SrgParams& p, const QuadraticSurd& other)
{
    QuadraticSurd shift = (QuadraticSurd(p.k) - other) / QuadraticSurd(p.v);
    QuadraticSurd diag = QuadraticSurd(0) - other - shift;
    return {(QuadraticSurd(1) - shift) / diag, (QuadraticSurd(0) - shift) / diag};
}

} // namespace

TEST(ProjectSrg, Examples)
{
    TwoDistanceSpec r = project_srg({76, 35, 18, 14}, Eigenspace::R);
    EXPECT_EQ(r.dimension, 19);
    EXPECT_EQ(r.size, 76);
    EXPECT_EQ(r.inner_a, q(1, 5));
    EXPECT_EQ(r.inner_b, q(-1, 5));
    EXPECT_TRUE(r.equiangular());
    EXPECT_EQ(r.design_strength, 2);

    TwoDistanceSpec s = project_srg({76, 35, 18, 14}, Eigenspace::S);
    EXPECT_EQ(s.dimension, 56);
    EXPECT_EQ(s.inner_a, q(1, 20));
    EXPECT_EQ(s.inner_b, q(-3, 35));
    EXPECT_FALSE(s.equiangular());

    TwoDistanceSpec t = project_srg({76, 30, 8, 14}, Eigenspace::S);
    EXPECT_EQ(t.dimension, 18);
    EXPECT_EQ(t.inner_a, q(7, 45));
    EXPECT_EQ(t.inner_b, q(-4, 15));
}

TEST(ProjectSrg, AgreesWithIdempotentOracle)
{
    for (SrgParams p : {SrgParams{76, 35, 18, 14}, SrgParams{10, 3, 0, 1}, SrgParams{27, 10, 1, 5},
                        SrgParams{5, 2, 0, 1}, SrgParams{275, 112, 30, 56}}) {
        SrgSpectrum sp = spectrum(p);
        for (Eigenspace e : {Eigenspace::R, Eigenspace::S}) {
            auto [adj, non] = idempotent_entries(p, e == Eigenspace::R ? sp.s : sp.r);
            ProjectionInnerProducts ip = projection_inner_products(p, e == Eigenspace::R ? sp.s : sp.r);
            EXPECT_EQ(ip.adjacent, adj) << p.str();
            EXPECT_EQ(ip.non_adjacent, non) << p.str();
        }
    }
}

TEST(ShiftedLift, Examples)
{
    ShiftedLift a = shifted_lift(make_two_distance(56, 76, q(-3, 35), q(1, 20), 2, true));
    EXPECT_EQ(a.lifted.dimension, 57);
    EXPECT_EQ(a.lifted.size, 76);
    EXPECT_EQ(a.lifted.inner_a, q(1, 15));
    EXPECT_EQ(a.lifted.inner_b, q(-1, 15));
    EXPECT_EQ(a.scale_sq, q(56, 57));
    EXPECT_EQ(a.height_sq, q(1, 57));
    EXPECT_TRUE(a.lifted.tight_frame);

    ShiftedLift b = shifted_lift(make_two_distance(18, 76, q(-4, 15), q(7, 45), 2, true));
    EXPECT_EQ(b.lifted.dimension, 19);
    EXPECT_EQ(b.lifted.inner_a, q(1, 5));
    EXPECT_TRUE(b.lifted.tight_frame);

    ShiftedLift c = shifted_lift(make_two_distance(19, 76, q(1, 5), q(-1, 5), 2, true));
    EXPECT_EQ(c.lifted.dimension, 20);
    EXPECT_EQ(c.lifted.inner_a, q(1, 5));
    EXPECT_EQ(c.height_sq, QuadraticSurd(0));
    EXPECT_FALSE(c.lifted.tight_frame);
}

TEST(ShiftedLift, Preconditions)
{
    EXPECT_THROW(shifted_lift(make_two_distance(5, 10, q(1, 2), q(1, 4), 2, true)), DomainError); // a + b > 0
    EXPECT_THROW(shifted_lift(make_two_distance(5, 10, q(1, 2), q(-1, 4), 0, false)), DomainError);
    EXPECT_THROW(make_two_distance(5, 10, q(1), q(0), 2, true), DomainError);
}

TEST(Tight5, Params)
{
    auto a = tight5_params(1);
    EXPECT_EQ(a.n, 7);
    EXPECT_EQ(a.size, 28);
    EXPECT_EQ(a.angle, make_rational(1, 3));
    auto b = tight5_params(3);
    EXPECT_EQ(b.n, 47);
    EXPECT_EQ(b.size, 1128);
    EXPECT_EQ(b.angle, make_rational(1, 7));
    auto c = tight5_params(4);
    EXPECT_EQ(c.n, 79);
    EXPECT_EQ(c.size, 3160);
    EXPECT_EQ(c.angle, make_rational(1, 9));
}

TEST(Tight5, C2Zeros)
{
    EXPECT_EQ(c2_zeros(7)[0], q(1, 3));
    EXPECT_EQ(c2_zeros(7)[1], q(-1, 3));
    EXPECT_EQ(c2_zeros(23)[0], q(1, 5));
    EXPECT_EQ(c2_zeros(2)[0], q(1, 2));
    // C2(x) = 1 + (n+2)(n x^2 - 1)/2 vanishes at the reported zeros.
    for (int n = 1; n < 60; ++n) {
        QuadraticSurd x = c2_zeros(n)[0];
        QuadraticSurd c2 = QuadraticSurd(1) + QuadraticSurd(n + 2) * (QuadraticSurd(n) * x * x - QuadraticSurd(1)) /
                                                  QuadraticSurd(2);
        EXPECT_EQ(c2, QuadraticSurd(0)) << n;
    }
}

TEST(Tight4, Params)
{
    auto a = tight4_params(2);
    EXPECT_EQ(a.n, 22);
    EXPECT_EQ(a.size, 275);
    EXPECT_EQ(a.inner_a, make_rational(1, 6));
    EXPECT_EQ(a.inner_b, make_rational(-1, 4));
    auto b = tight4_params(1);
    EXPECT_EQ(b.n, 6);
    EXPECT_EQ(b.size, 27);
    EXPECT_EQ(b.inner_a, make_rational(1, 4));
    EXPECT_EQ(b.inner_b, make_rational(-1, 2));
    auto c = tight4_params(3);
    EXPECT_EQ(c.n, 46);
    EXPECT_EQ(c.size, 1127);
    EXPECT_EQ(c.inner_a, make_rational(1, 8));  // (-1 + 7)/48
    EXPECT_EQ(c.inner_b, make_rational(-1, 6)); // (-1 - 7)/48
}

TEST(Tight5, Families)
{
    auto has = [](const Tight5Family& f, SrgParams p) {
        return std::find(f.members.begin(), f.members.end(), p) != f.members.end();
    };
    auto f3 = tight5_srg_family(3);
    EXPECT_TRUE(has(f3, {1127, 640, 396, 320}));
    EXPECT_TRUE(has(f3, {1128, 644, 400, 324}));
    EXPECT_TRUE(has(f3, {1128, 560, 316, 240}));

    auto f4 = tight5_srg_family(4);
    EXPECT_TRUE(has(f4, {3160, 1575, 870, 700}));
    EXPECT_TRUE(has(f4, {3160, 1755, 1050, 880}));
    EXPECT_TRUE(has(f4, {3159, 1408, 532, 704}));
    EXPECT_FALSE(has(f4, {3159, 1408, 1064, 702}));

    auto f2 = tight5_srg_family(2);
    EXPECT_TRUE(has(f2, {275, 112, 30, 56}));
    for (const SrgParams& p : f3.members)
        EXPECT_TRUE(counting_identity(p)) << p.str();
}

TEST(Tight5, Excluded)
{
    EXPECT_TRUE(tight5_known_excluded(3));
    EXPECT_TRUE(tight5_known_excluded(46));
    EXPECT_FALSE(tight5_known_excluded(2));
    EXPECT_FALSE(tight5_known_excluded(5));
}
