#include "eqlines/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace eqlines;

TEST(IntegerSqrt, SmallValues)
{
    auto zero = integer_sqrt(0);
    EXPECT_EQ(zero.root, 0);
    EXPECT_TRUE(zero.exact);

    auto square = integer_sqrt(25);
    EXPECT_EQ(square.root, 5);
    EXPECT_TRUE(square.exact);

    auto between = integer_sqrt(38);
    EXPECT_EQ(between.root, 6);
    EXPECT_FALSE(between.exact);
}

TEST(IntegerSqrt, RejectsNegative) { EXPECT_THROW(integer_sqrt(-1), DomainError); }

TEST(IntegerSqrt, RandomWideIntegersBracketTheRoot)
{
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 2000; ++trial) {
        BigInt x = 0;
        for (int limb = 0; limb < 4; ++limb)
            x = (x << 64) + BigInt(rng());
        x >>= static_cast<unsigned>(rng() % 256);
        auto s = integer_sqrt(x);
        EXPECT_LE(s.root * s.root, x);
        EXPECT_GT((s.root + 1) * (s.root + 1), x);
        EXPECT_EQ(s.exact, s.root * s.root == x);
    }
}

TEST(Binomial, Values)
{
    EXPECT_EQ(binomial(23, 2), 253);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(4, 7), 0);
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Binomial, PascalRule)
{
    for (int n = 1; n < 40; ++n)
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Rational, LowestTermsAndSign)
{
    Rational x = make_rational(6, -4);
    EXPECT_EQ(numerator(x), -3);
    EXPECT_EQ(denominator(x), 2);
    EXPECT_EQ(to_string(x), "-3/2");
    EXPECT_EQ(to_string(make_rational(10, 5)), "2");
    EXPECT_THROW(make_rational(1, 0), DomainError);
    EXPECT_EQ(parse_rational("-14/21"), make_rational(-2, 3));
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("1/2x"), DomainError);
}

TEST(SqrtOfRational, PerfectSquaresCollapse)
{
    QuadraticSurd fifth = sqrt_of_rational(make_rational(1, 25));
    ASSERT_TRUE(fifth.is_rational());
    EXPECT_EQ(fifth.as_rational(), make_rational(1, 5));

    QuadraticSurd five = sqrt_of_rational(make_rational(1900, 76));
    ASSERT_TRUE(five.is_rational());
    EXPECT_EQ(five.as_int64(), 5);
}

TEST(SqrtOfRational, IrrationalKeepsRadicand)
{
    QuadraticSurd r2 = sqrt_of_rational(2);
    EXPECT_FALSE(r2.is_rational());
    EXPECT_EQ(r2.rational_part(), 0);
    EXPECT_EQ(r2.coefficient(), 1);
    EXPECT_EQ(r2.radicand(), 2);
    EXPECT_THROW(sqrt_of_rational(-1), DomainError);
}

TEST(QuadraticSurd, SquareFactorsAreExtracted)
{
    QuadraticSurd x(0, 1, 72); // sqrt(72) = 6 sqrt(2)
    EXPECT_EQ(x.coefficient(), 6);
    EXPECT_EQ(x.radicand(), 2);
    QuadraticSurd big(0, 1, BigInt("1000000000000000000000000000000000000000000000000000000000002") * 49);
    EXPECT_EQ(big.coefficient(), 7);
}

TEST(QuadraticSurd, FieldArithmetic)
{
    QuadraticSurd a = parse_surd("1/2 + 3/4*sqrt(5)");
    QuadraticSurd b = parse_surd("-1/3 - sqrt(5)");
    QuadraticSurd prod = a * b;
    // (1/2)(-1/3) + (3/4)(-1)(5) = -1/6 - 15/4; cross terms -1/2 - 1/4
    EXPECT_EQ(prod.rational_part(), make_rational(-1, 6) - make_rational(15, 4));
    EXPECT_EQ(prod.coefficient(), make_rational(-3, 4));
    EXPECT_EQ((prod / b), a);
    EXPECT_EQ(a - a, QuadraticSurd(0));
    EXPECT_THROW(a / QuadraticSurd(0), DomainError);
}

TEST(QuadraticSurd, MixedRadicandsAreAnError)
{
    EXPECT_THROW(sqrt_of_rational(2) + sqrt_of_rational(3), RadicandMismatch);
    // sqrt(8) and sqrt(2) share the field Q(sqrt 2)
    EXPECT_EQ(QuadraticSurd(0, 1, 8) - sqrt_of_rational(2), sqrt_of_rational(2));
}

TEST(QuadraticSurd, ExactOrdering)
{
    QuadraticSurd s5 = sqrt_of_rational(5);
    EXPECT_LT(QuadraticSurd(2), s5);
    EXPECT_LT(s5, QuadraticSurd(make_rational(9, 4)));
    // 1 - sqrt(2) + sqrt(2) - 1 style cancellations decided exactly
    QuadraticSurd x = parse_surd("1 - sqrt(2)");
    EXPECT_EQ(x.sign(), -1);
    EXPECT_EQ((x * x.conjugate()).as_rational(), -1);
    // 99/70 vs sqrt(2): 99^2 = 9801 > 9800 = 2 * 70^2
    EXPECT_GT(QuadraticSurd(make_rational(99, 70)), sqrt_of_rational(2));
}

TEST(QuadraticSurd, ParseForms)
{
    EXPECT_EQ(parse_surd("sqrt(5)/5"), sqrt_of_rational(make_rational(1, 5)));
    EXPECT_EQ(parse_surd("1/sqrt(5)"), sqrt_of_rational(make_rational(1, 5)));
    EXPECT_EQ(parse_surd("1/5*sqrt(5)"), sqrt_of_rational(make_rational(1, 5)));
    EXPECT_EQ(parse_surd("-3/35"), QuadraticSurd(make_rational(-3, 35)));
    EXPECT_THROW(parse_surd("sqrt(5"), DomainError);
    EXPECT_THROW(parse_surd("1/"), DomainError);
}

TEST(QuadraticSurd, StringRoundTrip)
{
    for (const char* text : {"1/5", "-2", "1/5*sqrt(5)", "3/10 - 1/10*sqrt(5)", "7 + 2*sqrt(3)"}) {
        QuadraticSurd x = parse_surd(text);
        EXPECT_EQ(x.str(), text);
        EXPECT_EQ(parse_surd(x.str()), x);
    }
}

TEST(QuadraticSurd, SumRoundTripOverRandomRationals)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000), den(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        Rational p = make_rational(num(rng), den(rng));
        Rational q = make_rational(num(rng), den(rng));
        EXPECT_EQ((p + q) - p - q, 0);
        if (q != 0) {
            EXPECT_EQ((p / q) * q, p);
        }
    }
}

TEST(QuadraticSurd, SqrtSquaresBack)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(0, 5'000'000), den(1, 5'000'000);
    for (int i = 0; i < 2000; ++i) {
        Rational x = make_rational(num(rng), den(rng));
        QuadraticSurd r = sqrt_of_rational(x);
        QuadraticSurd sq = r * r;
        ASSERT_TRUE(sq.is_rational());
        EXPECT_EQ(sq.as_rational(), x);
        EXPECT_GE(r.sign(), 0);
    }
}
