#include "beukers/arith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace beukers;

namespace {

// Brute-force oracle: fold of pairwise lcm via gcd on machine integers.
std::uint64_t lcm_fold(unsigned n)
{
    std::uint64_t d = 1;
    for (std::uint64_t k = 2; k <= n; ++k) d = d / std::gcd(d, k) * k;
    return d;
}

Rational harmonic_by_summation(unsigned m, unsigned x)
{
    Rational s = 0;
    for (unsigned k = 1; k <= x; ++k) s += Rational(Integer(1), pow(Integer(k), m));
    return s;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

} // namespace

TEST(ReducedDenominator, Examples)
{
    EXPECT_EQ(reduced_denominator(Rational(3, 6)), 2);
    EXPECT_EQ(reduced_denominator(Rational(0)), 1);
    EXPECT_EQ(reduced_denominator(Rational(-4, 6)), 3);
}

TEST(RationalInvariants, CanonicalForm)
{
    const Rational x(Integer(-4), Integer(6));
    EXPECT_EQ(numerator_of(x), -2);
    EXPECT_EQ(denominator_of(x), 3);
    const Rational z = Rational(5, 7) - Rational(5, 7);
    EXPECT_EQ(numerator_of(z), 0);
    EXPECT_EQ(denominator_of(z), 1);
    const Rational neg_den(Integer(3), Integer(-9));
    EXPECT_EQ(denominator_of(neg_den), 3);
    EXPECT_EQ(numerator_of(neg_den), -1);
}

TEST(LcmRange, Examples)
{
    EXPECT_EQ(lcm_range(1), 1);
    EXPECT_EQ(lcm_range(5), 60);
    EXPECT_EQ(lcm_range(10), 2520);
    EXPECT_THROW(lcm_range(0), std::invalid_argument);
    EXPECT_EQ(lcm_upto(0), 1);
}

TEST(LcmRange, MatchesPairwiseFold)
{
    for (unsigned n = 1; n <= 40; ++n) EXPECT_EQ(lcm_range(n), Integer(lcm_fold(n))) << n;
}

TEST(Harmonic, Examples)
{
    EXPECT_EQ(harmonic(4, 0), 0);
    EXPECT_EQ(harmonic(1, 3), Rational(11, 6));
    EXPECT_EQ(harmonic(4, 2), Rational(17, 16));
    EXPECT_THROW(harmonic(0, 3), std::invalid_argument);
}

TEST(Harmonic, MatchesDirectSummation)
{
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned x = 0; x <= 20; ++x) EXPECT_EQ(harmonic(m, x), harmonic_by_summation(m, x)) << m << "," << x;
}

TEST(Harmonic, DenominatorDividesLcmPower)
{
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned x = 0; x <= 30; ++x) {
            const Integer bound = pow(lcm_upto(x), m);
            EXPECT_EQ(bound % reduced_denominator(harmonic(m, x)), 0) << m << "," << x;
        }
}

TEST(RationalProperties, SumDenominatorDividesLcm)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        if (a == 0 || b == 0) continue;
        const Integer l = lcm(reduced_denominator(a), reduced_denominator(b));
        EXPECT_EQ(l % reduced_denominator(a + b), 0);
    }
}

TEST(RationalProperties, ExactCancellation)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng);
        EXPECT_EQ((a + b) - b, a);
        if (b != 0) EXPECT_EQ((a * b) / b, a);
    }
}

TEST(Combinatorics, BinomialAndRising)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(6, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
    EXPECT_EQ(rising_factorial(3, 0), 1);
    EXPECT_EQ(rising_factorial(3, 3), 60);
    EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(RationalText, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng);
        EXPECT_EQ(parse_rational(to_string(a)), a);
    }
    EXPECT_EQ(to_string(Rational(-7263, 4)), "-7263/4");
    EXPECT_EQ(to_string(Rational(-120)), "-120");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
