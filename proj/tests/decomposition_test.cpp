#include <dynmag/decomposition.hpp>
#include <dynmag/mu.hpp>

#include <gtest/gtest.h>

using namespace dynmag;

namespace {

NCPolynomial identity_word(int n) {
    std::vector<Letter> l(static_cast<std::size_t>(n));
    std::iota(l.begin(), l.end(), 1);
    return NCPolynomial::single(Word(l));
}

}  // namespace

TEST(Decomposition, TwoLetters) {
    // X1X2 = 1/2 (X1X2 + X2X1) + 1/2 [X1,X2]
    const auto d = decompose_word_rewriting(2);
    EXPECT_EQ(d.coeff(LiePermutation({{1, 2}})), Rational(1, 2));
    EXPECT_EQ(d.coeff(LiePermutation({{1}, {2}})), Rational(1));
    EXPECT_EQ(d.size(), 2U);
}

TEST(Decomposition, RewritingReproducesWord) {
    for (int n = 1; n <= 6; ++n) {
        NCPolynomial sum;
        for (const auto& [ip, c] : decompose_word_rewriting(n)) sum.add_scaled(evaluate_lie_permutation(ip), c);
        EXPECT_EQ(sum, identity_word(n)) << n;
    }
}

TEST(Decomposition, LinearSolveIsUniqueAndAgrees) {
    for (int n = 1; n <= 5; ++n) {
        const auto lin = decompose_word_linear(n);
        EXPECT_TRUE(lin.unique()) << n;
        EXPECT_EQ(lin.dimension, enumerate_lie_permutations(n).size());
        EXPECT_EQ(lin.coefficients, decompose_word_rewriting(n)) << n;
    }
}

TEST(Decomposition, EmptyWord) {
    const auto d = decompose_word_rewriting(0);
    EXPECT_EQ(d.size(), 1U);
    EXPECT_EQ(d.coeff(LiePermutation()), Rational(1));
}

TEST(Decomposition, EvaluateSingleBlockIsCommutator) {
    const auto e = evaluate_lie_permutation(LiePermutation({{1, 2}}));
    EXPECT_EQ(e, nc_commutator(nc_variable(1), nc_variable(2)));
    const auto s = evaluate_lie_permutation(LiePermutation({{1}, {2}}));
    std::vector<NCPolynomial> f{nc_variable(1), nc_variable(2)};
    EXPECT_EQ(s, symmetrized_product(f));
}

TEST(Decomposition, SingleBlockPartIsMu) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(mu_lieperm(n), mu_dynkin(n));
}
