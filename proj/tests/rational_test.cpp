#include <dynmag/combination.hpp>
#include <dynmag/memo.hpp>
#include <dynmag/rational.hpp>

#include <gtest/gtest.h>

#include <string>
#include <thread>
#include <vector>

using dynmag::Combination;
using dynmag::Rational;

TEST(Rational, ReducesOnConstruction) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rational(6, 3).to_string(), "2");
}

TEST(Rational, FractionStringAlwaysHasSlash) {
    EXPECT_EQ(Rational(3).fraction_string(), "3/1");
    EXPECT_EQ(Rational(0).fraction_string(), "0/1");
    EXPECT_EQ(Rational(-1, 720).fraction_string(), "-1/720");
}

TEST(Rational, ZeroDenominatorRejected) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"1/2", "-7/3", "0/1", "123456789012345678901234567891/2"})
        EXPECT_EQ(Rational::parse(s).fraction_string(), s);
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Rational, ArbitraryPrecision) {
    Rational big = dynmag::factorial(30);
    EXPECT_EQ(big.to_string(), "265252859812191058636308480000000");
    EXPECT_EQ((Rational(1) / big * big), Rational(1));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(1, 2), Rational(1, 3));
}

TEST(Rational, Binomial) {
    EXPECT_EQ(dynmag::binomial(5, 2), Rational(10));
    EXPECT_EQ(dynmag::binomial(4, 0), Rational(1));
    EXPECT_EQ(dynmag::binomial(3, 5), Rational(0));
}

TEST(Rational, LargestPrimeFactor) {
    EXPECT_EQ(dynmag::largest_prime_factor(mpz_class(1)), 1UL);
    EXPECT_EQ(dynmag::largest_prime_factor(mpz_class(720)), 5UL);
    EXPECT_EQ(dynmag::largest_prime_factor(mpz_class(60480)), 7UL);
    EXPECT_EQ(dynmag::largest_prime_factor(mpz_class(97)), 97UL);
}

TEST(Combination, PrunesZeros) {
    Combination<int> c;
    c.add(1, Rational(1, 2));
    c.add(1, Rational(-1, 2));
    EXPECT_TRUE(c.is_zero());
    c.add(2, Rational(3));
    c *= Rational(0);
    EXPECT_TRUE(c.is_zero());
}

TEST(Combination, Arithmetic) {
    Combination<int> a{{1, Rational(1)}, {2, Rational(2)}};
    Combination<int> b{{2, Rational(-2)}, {3, Rational(1, 3)}};
    const auto sum = a + b;
    EXPECT_EQ(sum.size(), 2U);
    EXPECT_EQ(sum.coeff(3), Rational(1, 3));
    EXPECT_EQ(sum.coeff(2), Rational(0));
    EXPECT_EQ(a - a, Combination<int>{});
    EXPECT_EQ(Rational(2) * a, a + a);
}

TEST(Memo, ConcurrentFillIsConsistent) {
    dynmag::Memo<int, std::string> memo;
    std::vector<std::thread> pool;
    std::vector<std::string> seen(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = memo.get_or_compute(7, [] { return std::string("seven"); }); });
    for (auto& th : pool) th.join();
    for (const auto& s : seen) EXPECT_EQ(s, "seven");
}
