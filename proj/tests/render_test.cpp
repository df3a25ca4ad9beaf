#include <dynmag/mu.hpp>
#include <dynmag/pbw.hpp>
#include <dynmag/render.hpp>

#include <gtest/gtest.h>

using namespace dynmag;

TEST(Render, LiePolynomialText) {
    EXPECT_EQ(render(mu(2, Construction::dynkin), Style::text), "1/2 [X1,X2]");
    EXPECT_EQ(render(mu(3, Construction::dynkin), Style::text), "1/3 [X1,[X2,X3]] - 1/6 [X2,[X1,X3]]");
    EXPECT_EQ(render(LiePolynomial{}, Style::text), "0");
    EXPECT_EQ(render(-LiePolynomial::generator(2), Style::text), "-X2");
}

TEST(Render, LiePolynomialLatex) {
    EXPECT_EQ(render(mu(3, Construction::dynkin), Style::latex),
              "\\frac{1}{3} [X_{1},[X_{2},X_{3}]] - \\frac{1}{6} [X_{2},[X_{1},X_{3}]]");
}

TEST(Render, NamedVariables) {
    const auto s = bch_series(2);
    EXPECT_EQ(render(s[0], Style::text, {"X", "Y"}), "X + Y");
    EXPECT_EQ(render(s[1], Style::text, {"X", "Y"}), "1/2 [X,Y]");
}

TEST(Render, Words) {
    const NCPolynomial p{{Word{}, Rational(2)}, {Word({1, 2}), Rational(-1, 2)}};
    EXPECT_EQ(render(p, Style::text), "2 - 1/2 X1*X2");
    EXPECT_EQ(render(p, Style::latex), "2 - \\frac{1}{2} X_{1}X_{2}");
}

TEST(Render, CoefficientTables) {
    EXPECT_EQ(render(beta_coefficients(5), Style::text), "1, -1/2, 1/12, 0, -1/720, 0\n");
    EXPECT_EQ(render(beta_coefficients(0), Style::text), "1\n");
    EXPECT_EQ(render(alpha_coefficients(1, 1), Style::text), "1/2, 1/6\n-1/6, -1/12\n");
    EXPECT_EQ(render(alpha_coefficients(1, 1), Style::latex),
              "\\begin{pmatrix}\n\\frac{1}{2} & \\frac{1}{6} \\\\\n-\\frac{1}{6} & -\\frac{1}{12}\n\\end{pmatrix}\n");
}

TEST(Render, SymTensor) {
    const auto t = EnvelopingElement::monomial({0, 1}) + EnvelopingElement::monomial({2}, Rational(1, 2));
    const auto name = [](const int& i) { return "e" + std::to_string(i + 1); };
    EXPECT_EQ(render<int>(t, Style::text, name), "e1 . e2 + 1/2 e3");
}
