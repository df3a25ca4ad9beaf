#include <dynmag/nilpotent.hpp>

#include <gtest/gtest.h>

using namespace dynmag;

namespace {

// Necklace count of Lyndon words of length n over d letters, by brute force
// over primitive necklaces: (1/n) * #{words of length n with primitive period n}.
long long primitive_words(int d, int n) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= d;
    for (int p = 1; p < n; ++p)
        if (n % p == 0) total -= primitive_words(d, p);
    return total;
}

long long free_lie_dim(int d, int k) {
    long long dim = 0;
    for (int n = 1; n <= k; ++n) dim += primitive_words(d, n) / n;
    return dim;
}

}  // namespace

TEST(FreeNilpotent, AbelianCase) {
    const auto alg = NilpotentAlgebra::free_nilpotent(2, 1);
    EXPECT_EQ(alg.dim(), 2U);
    EXPECT_TRUE(alg.bracket(0, 1).is_zero());
}

TEST(FreeNilpotent, Heisenberg) {
    const auto alg = NilpotentAlgebra::free_nilpotent(2, 2);
    ASSERT_EQ(alg.dim(), 3U);
    EXPECT_EQ(alg.grading(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(alg.bracket(0, 1), NilpotentAlgebra::Element::single(2));
    EXPECT_EQ(alg.bracket(1, 0), NilpotentAlgebra::Element::single(2, Rational(-1)));
    EXPECT_TRUE(alg.bracket(0, 2).is_zero());
    EXPECT_TRUE(alg.bracket(2, 1).is_zero());
}

TEST(FreeNilpotent, DimensionsAreNecklaceCounts) {
    for (int d = 1; d <= 3; ++d)
        for (int k = 1; k <= 4; ++k) {
            const auto alg = NilpotentAlgebra::free_nilpotent(d, k);
            EXPECT_EQ(static_cast<long long>(alg.dim()), free_lie_dim(d, k)) << d << " " << k;
            long long witt = 0;
            for (int n = 1; n <= k; ++n) witt += witt_dimension(d, n);
            EXPECT_EQ(witt, free_lie_dim(d, k));
        }
    EXPECT_EQ(NilpotentAlgebra::free_nilpotent(2, 3).dim(), 5U);
    EXPECT_EQ(NilpotentAlgebra::free_nilpotent(3, 2).dim(), 6U);
}

TEST(FreeNilpotent, GeneratorsComeFirst) {
    const auto alg = NilpotentAlgebra::free_nilpotent(3, 3);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(alg.basis()[static_cast<std::size_t>(i)], LieMonomial::leaf(i + 1));
    for (std::size_t i = 1; i < alg.dim(); ++i) EXPECT_LE(alg.degree(static_cast<int>(i - 1)), alg.degree(static_cast<int>(i)));
}

TEST(FreeNilpotent, JacobiAntisymmetryIntegrality) {
    for (auto [d, k] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 3}}) {
        const auto alg = NilpotentAlgebra::free_nilpotent(d, k);
        const int n = static_cast<int>(alg.dim());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                EXPECT_EQ(alg.bracket(i, j), -alg.bracket(j, i));
                for (const auto& [idx, c] : alg.bracket(i, j)) {
                    EXPECT_TRUE(c.is_integer());
                    EXPECT_EQ(alg.degree(idx), alg.degree(i) + alg.degree(j));
                }
                for (int l = 0; l < n; ++l) {
                    const auto a = alg.basis_element(i), b = alg.basis_element(j), c = alg.basis_element(l);
                    const auto sum = alg.bracket(a, alg.bracket(b, c)) + alg.bracket(b, alg.bracket(c, a)) + alg.bracket(c, alg.bracket(a, b));
                    EXPECT_TRUE(sum.is_zero());
                }
            }
    }
}

TEST(FreeNilpotent, TruncatesAboveK) {
    const auto alg = NilpotentAlgebra::free_nilpotent(2, 2);
    const auto z = alg.bracket(alg.generator(1), alg.generator(2));
    EXPECT_TRUE(alg.bracket(alg.generator(1), z).is_zero());
}

TEST(FreeNilpotent, EvaluateMatchesFreeBracket) {
    const auto alg = NilpotentAlgebra::free_nilpotent(3, 3);
    const auto p = lie_bracket(LiePolynomial::generator(3), lie_bracket(LiePolynomial::generator(2), LiePolynomial::generator(1)));
    std::vector<NilpotentAlgebra::Element> args{alg.generator(1), alg.generator(2), alg.generator(3)};
    EXPECT_EQ(alg.evaluate(p, args), alg.from_lie(p));
}

TEST(FreeNilpotent, RejectsBadParameters) {
    EXPECT_THROW(NilpotentAlgebra::free_nilpotent(0, 2), std::invalid_argument);
    EXPECT_THROW(NilpotentAlgebra::free_nilpotent(2, 0), std::invalid_argument);
}
