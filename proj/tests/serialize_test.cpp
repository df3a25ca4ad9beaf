#include <dynmag/mu.hpp>
#include <dynmag/serialize.hpp>

#include <gtest/gtest.h>

using namespace dynmag;

TEST(Json, LieMonomialShape) {
    const auto m = LieMonomial::bracket(LieMonomial::leaf(1), LieMonomial::bracket(LieMonomial::leaf(2), LieMonomial::leaf(3)));
    EXPECT_EQ(to_json(m).dump(), "[1,[2,3]]");
    EXPECT_EQ(lie_monomial_from_json(Json::parse("[1,[2,3]]")), m);
}

TEST(Json, LiePolynomialShape) {
    EXPECT_EQ(to_json(mu(2, Construction::dynkin)).dump(), R"([{"coeff":"1/2","term":[1,2]}])");
    EXPECT_EQ(to_json(LiePolynomial::generator(1)).dump(), R"([{"coeff":"1/1","term":1}])");
}

TEST(Json, RoundTripsAreBitExact) {
    for (int n = 1; n <= 5; ++n) {
        const auto& p = mu(n, Construction::dynkin);
        const std::string text = to_json(p).dump();
        const auto back = lie_polynomial_from_json(Json::parse(text));
        EXPECT_EQ(back, p);
        EXPECT_EQ(to_json(back).dump(), text);

        const auto ass = mu_ass_dynkin(n);
        const std::string nc = to_json(ass).dump();
        EXPECT_EQ(to_json(nc_polynomial_from_json(Json::parse(nc))).dump(), nc);
    }
    SymTensor<int> t = SymTensor<int>::unit();
    t.add({2, 0}, Rational(-3, 7));
    const std::string st = to_json(t).dump();
    EXPECT_EQ(st, R"([{"coeff":"1/1","term":[]},{"coeff":"-3/7","term":[0,2]}])");
    EXPECT_EQ(sym_tensor_from_json(Json::parse(st)), t);
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(lie_polynomial_from_json(Json::parse(R"([{"coeff":"2/4","term":[1,2]}])")), FormatError);
    EXPECT_THROW(lie_polynomial_from_json(Json::parse(R"([{"coeff":"1","term":[1,2]}])")), FormatError);
    EXPECT_THROW(lie_polynomial_from_json(Json::parse(R"([{"coeff":"1/2","term":[2,1]}])")), FormatError);
    EXPECT_THROW(lie_polynomial_from_json(Json::parse(R"([{"coeff":"0/1","term":[1,2]}])")), FormatError);
    EXPECT_THROW(lie_polynomial_from_json(Json::parse(R"([{"coeff":"1/2","term":[1,2,3]}])")), FormatError);
    EXPECT_THROW(nc_polynomial_from_json(Json::parse(R"([{"coeff":"1/2","term":[0]}])")), FormatError);
    EXPECT_THROW(nc_polynomial_from_json(Json::parse(R"([{"coeff":"1/2","term":[1]},{"coeff":"1/3","term":[1]}])")), FormatError);
    EXPECT_THROW(sym_tensor_from_json(Json::parse(R"([{"coeff":"1/2","term":[2,1]}])")), FormatError);
}

TEST(Json, StructureConstants) {
    const auto j = structure_constants_json(NilpotentAlgebra::free_nilpotent(2, 2));
    EXPECT_EQ(j["dim"], 3);
    EXPECT_EQ(j["grading"].dump(), "[1,1,2]");
    EXPECT_EQ(j["brackets"].size(), 2U);
    EXPECT_EQ(j["brackets"][0].dump(), R"({"i":1,"j":2,"value":[["1/1",3]]})");
    EXPECT_EQ(j["brackets"][1].dump(), R"({"i":2,"j":1,"value":[["-1/1",3]]})");
}

TEST(Json, Report) {
    VerificationReport r("x");
    r.record(false, [] { return std::string("w"); });
    EXPECT_EQ(to_json(r).dump(), R"({"name":"x","pass":false,"checked":1,"failures":1,"witness":"w"})");
}
