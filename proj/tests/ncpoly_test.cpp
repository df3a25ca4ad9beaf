#include <dynmag/ncpoly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace dynmag;

namespace {

NCPolynomial random_poly(std::mt19937_64& rng) {
    NCPolynomial p;
    std::uniform_int_distribution<int> terms(1, 4), len(0, 3), letter(1, 3), num(-5, 5), den(1, 4);
    for (int t = terms(rng); t > 0; --t) {
        std::vector<Letter> w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = letter(rng);
        p.add(Word(w), Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST(Word, OrderIsLengthFirst) {
    EXPECT_LT(Word({3}), Word({1, 1}));
    EXPECT_LT(Word({1, 2}), Word({2, 1}));
    EXPECT_LT(Word{}, Word({1}));
    EXPECT_THROW(Word({0}), std::invalid_argument);
}

TEST(NCPolynomial, MultiplyConcatenates) {
    const auto x1 = nc_variable(1), x2 = nc_variable(2);
    const auto p = (x1 + x2) * (x1 - x2);
    NCPolynomial expected{{Word({1, 1}), Rational(1)}, {Word({2, 1}), Rational(1)}, {Word({1, 2}), Rational(-1)}, {Word({2, 2}), Rational(-1)}};
    EXPECT_EQ(p, expected);
}

TEST(NCPolynomial, AssociativeAndUnitalOnRandomInputs) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(nc_unit() * a, a);
        EXPECT_EQ(a * nc_unit(), a);
    }
}

TEST(NCPolynomial, TruncatedMultiply) {
    const auto x = nc_variable(1);
    const auto p = nc_unit() + x;
    EXPECT_EQ(nc_multiply(p, p, 1), nc_unit() + Rational(2) * x);
}

TEST(NCPolynomial, Commutator) {
    const auto c = nc_commutator(nc_variable(1), nc_variable(2));
    EXPECT_EQ(c.coeff(Word({1, 2})), Rational(1));
    EXPECT_EQ(c.coeff(Word({2, 1})), Rational(-1));
    EXPECT_TRUE(nc_commutator(nc_variable(1), nc_variable(1)).is_zero());
}

TEST(NCPolynomial, SymmetrizedProductAverages) {
    std::vector<NCPolynomial> f{nc_variable(1), nc_variable(2)};
    const auto s = symmetrized_product(f);
    EXPECT_EQ(s.coeff(Word({1, 2})), Rational(1, 2));
    EXPECT_EQ(s.coeff(Word({2, 1})), Rational(1, 2));
    EXPECT_EQ(symmetrized_product({}), nc_unit());
}

TEST(NCPolynomial, DegreePartAndRelabel) {
    const auto p = nc_unit() + nc_variable(1) + nc_variable(1) * nc_variable(2);
    EXPECT_EQ(degree_part(p, 1), nc_variable(1));
    std::vector<Letter> images{2, 1};
    EXPECT_EQ(relabel(p, images), nc_unit() + nc_variable(2) + nc_variable(2) * nc_variable(1));
}
