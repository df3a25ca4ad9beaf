#include <dynmag/mu.hpp>

#include <gtest/gtest.h>

#include <thread>

using namespace dynmag;

namespace {

LieMonomial X(Letter i) { return LieMonomial::leaf(i); }
LieMonomial br(const LieMonomial& a, const LieMonomial& b) { return LieMonomial::bracket(a, b); }

LiePolynomial half_x1_x2() {
    return LiePolynomial::from_canonical(LieExpr::single(br(X(1), X(2)), Rational(1, 2)));
}

LiePolynomial mu3_expected() {
    return LiePolynomial::from_canonical(LieExpr{{br(X(1), br(X(2), X(3))), Rational(1, 3)},
                                                 {br(X(2), br(X(1), X(3))), Rational(-1, 6)}});
}

}  // namespace

class EveryConstruction : public ::testing::TestWithParam<Construction> {};

TEST_P(EveryConstruction, LowDegrees) {
    EXPECT_EQ(mu(1, GetParam()), LiePolynomial::generator(1));
    EXPECT_EQ(mu(2, GetParam()), half_x1_x2());
    EXPECT_EQ(mu(3, GetParam()), mu3_expected());
}

TEST_P(EveryConstruction, MultilinearOfFullSize) {
    // (n-1)! canonical monomials for n >= 2, every variable once
    const std::size_t expected[] = {1, 1, 2, 6, 24, 120};
    for (int n = 1; n <= 6; ++n) {
        const auto& p = mu(n, GetParam());
        EXPECT_EQ(p.size(), expected[n - 1]) << n;
        for (const auto& [m, c] : p) {
            EXPECT_EQ(m.degree(), static_cast<std::size_t>(n));
            EXPECT_TRUE(m.is_multilinear());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Mu, EveryConstruction, ::testing::ValuesIn(all_constructions),
                         [](const auto& info) {
                             std::string s(construction_name(info.param));
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });

TEST(Mu, ConstructionsAgreeThroughSix) {
    for (int n = 1; n <= 6; ++n)
        for (Construction c : all_constructions) EXPECT_EQ(mu(n, c), mu(n, Construction::dynkin)) << construction_name(c) << " " << n;
}

TEST(Mu, UncachedMagnusMatchesCache) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(mu_magnus_uncached(n, Construction::magnus_L), mu(n, Construction::magnus_L));
        EXPECT_EQ(mu_magnus(n, Construction::magnus_C).value, mu(n, Construction::magnus_C));
    }
    EXPECT_THROW(mu_magnus(3, Construction::dynkin), std::invalid_argument);
}

TEST(Mu, RejectsDegreeZero) {
    for (Construction c : all_constructions) EXPECT_THROW(mu(0, c), std::invalid_argument);
    EXPECT_THROW(mu_ass_dynkin(0), std::invalid_argument);
}

TEST(Mu, ConstructionNames) {
    for (Construction c : all_constructions) EXPECT_EQ(parse_construction(construction_name(c)), c);
    EXPECT_FALSE(parse_construction("magnus-X").has_value());
}

TEST(Dynkin, AssociativeForm) {
    const NCPolynomial two{{Word({1, 2}), Rational(1, 2)}, {Word({2, 1}), Rational(-1, 2)}};
    EXPECT_EQ(mu_ass_dynkin(2), two);
    EXPECT_EQ(mu_ass_dynkin(1), nc_variable(1));
    EXPECT_EQ(mu_ass_dynkin(3).coeff(Word({1, 2, 3})), Rational(1, 3));
}

TEST(Dynkin, PivotsAndAverageAgree) {
    for (int n = 1; n <= 6; ++n) {
        const auto avg = mu_dynkin_averaged(n);
        for (int k = 1; k <= n; ++k) EXPECT_EQ(mu_dynkin(n, k), avg) << n << " " << k;
    }
    EXPECT_THROW(mu_dynkin(3, 0), std::out_of_range);
    EXPECT_THROW(mu_dynkin(3, 4), std::out_of_range);
}

TEST(Dynkin, EvaluatesToAssociativeForm) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(commutator_evaluate(mu(n, Construction::dynkin)), mu_ass_dynkin(n));
}

TEST(LogExpOracle, MatchesDescentFormula) {
    EXPECT_EQ(mu_ass_logexp_oracle(1), nc_variable(1));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(mu_ass_logexp_oracle(n), mu_ass_dynkin(n)) << n;
    EXPECT_THROW(mu_ass_logexp_oracle(6), std::invalid_argument);
}

TEST(MuIdentities, AdjacentSwap) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            std::vector<Letter> swap(static_cast<std::size_t>(n));
            std::iota(swap.begin(), swap.end(), 1);
            std::swap(swap[static_cast<std::size_t>(k - 2)], swap[static_cast<std::size_t>(k - 1)]);
            std::vector<LiePolynomial> images;
            for (int i = 1; i <= n; ++i) {
                if (i == k - 1) images.push_back(lie_bracket(LiePolynomial::generator(i), LiePolynomial::generator(i + 1)));
                else if (i != k) images.push_back(LiePolynomial::generator(i));
            }
            const auto& m = mu(n, Construction::magnus_R);
            EXPECT_EQ(m - relabel(m, swap), substitute(mu(n - 1, Construction::magnus_R), images)) << n << " " << k;
        }
}

TEST(MuIdentities, SymmetrizationVanishes) {
    for (int n = 2; n <= 6; ++n) {
        LiePolynomial sum;
        for_each_permutation(n, [&](const Permutation& s) { sum += relabel(mu(n, Construction::magnus_L), s.images()); });
        EXPECT_TRUE(sum.is_zero()) << n;
    }
}

TEST(Mu, ConcurrentAccessIsConsistent) {
    std::vector<std::thread> pool;
    std::vector<LiePolynomial> out(4);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { out[static_cast<std::size_t>(t)] = mu(5, Construction::magnus_C); });
    for (auto& th : pool) th.join();
    for (const auto& p : out) EXPECT_EQ(p, mu(5, Construction::dynkin));
}
