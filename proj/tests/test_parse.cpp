#include <gtest/gtest.h>

#include <random>

#include "bosonorder/json_io.hpp"
#include "bosonorder/parse.hpp"
#include "bosonorder/text.hpp"

using namespace bosonorder;

namespace {

GaussianRational q(int n, int d = 1) { return GaussianRational(Rational(n, d)); }

OperatorPoly random_operator(std::mt19937_64& rng, unsigned modes, unsigned max_power) {
  std::uniform_int_distribution<unsigned> pw(0, max_power), mode(0, modes - 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  OperatorPoly p(modes);
  for (int t = 0; t < 6; ++t) {
    std::vector<ModePower> powers;
    for (unsigned m = 0; m < modes; ++m)
      if (mode(rng) == m) powers.push_back({m, pw(rng), pw(rng)});
    p.add_term(NormalMonomial(std::move(powers)),
               GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  }
  return p;
}

PolyFunction random_function(std::mt19937_64& rng, unsigned vars, unsigned max_power) {
  std::uniform_int_distribution<unsigned> pw(0, max_power);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  PolyFunction f(vars);
  for (int t = 0; t < 6; ++t) {
    FunctionKey k(vars);
    for (auto& v : k) v = {pw(rng), pw(rng)};
    f.add_term(k, GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  }
  return f;
}

std::size_t error_position(const char* src, bool op) {
  try {
    if (op) parse_operator(src);
    else parse_function(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(ParseFunction, Examples) {
  PolyFunction f = parse_function("z* z");
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.coefficient(1, 1), q(1));
  EXPECT_EQ(error_position("z^-1", false), 1u);
}

TEST(ParseOperator, Examples) {
  OperatorPoly p = parse_operator("A*^2 A");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(NormalMonomial::single(0, 2, 1)), q(1));
}

TEST(ParseOperator, LiteralsAndPrecedence) {
  EXPECT_EQ(parse_operator("3/2"), q(3, 2) * OperatorPoly::identity(1));
  EXPECT_EQ(parse_operator("2+3i"), GaussianRational(2, 3) * OperatorPoly::identity(1));
  EXPECT_EQ(parse_operator("(1/2)i A"), GaussianRational(0, Rational(1, 2)) * parse_operator("A"));
  // ^ binds tighter than juxtaposition, and juxtaposition equals '*'.
  EXPECT_EQ(parse_operator("2 A^2"), parse_operator("2*(A A)"));
  EXPECT_EQ(parse_operator("A A*"), parse_operator("A*A + 1"));
  EXPECT_EQ(parse_operator("-(A - A*)"), parse_operator("A* - A"));
  EXPECT_EQ(parse_operator("  A\t*  A*  "), parse_operator("A A*"));
}

TEST(ParseOperator, MultimodeTokens) {
  OperatorPoly p = parse_operator("A1* A2");
  EXPECT_EQ(p.mode_count(), 2u);
  EXPECT_EQ(p, parse_operator("A* B", 2));
  EXPECT_EQ(parse_operator("A3").mode_count(), 3u);
  EXPECT_EQ(to_text(parse_operator("A3* A1")), "A1 A3*");
}

TEST(ParseErrors, PositionsAndNamespaces) {
  EXPECT_EQ(error_position("A^-1", true), 1u);
  EXPECT_EQ(error_position("A^1.5", true), 3u);
  EXPECT_EQ(error_position("(A", true), 2u);
  EXPECT_EQ(error_position("A z", true), 2u);
  EXPECT_EQ(error_position("A", false), 0u);
  EXPECT_EQ(error_position("z +", false), 3u);
  EXPECT_EQ(error_position("", false), 0u);
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(to_text(parse_operator("(A + A*)^2")), "A*^2 + 2 A*A + A^2 + 1");
  EXPECT_EQ(to_text(parse_operator("(2+3i) A - (1/3)i")), "(2 + 3i) A - (1/3)i");
  EXPECT_EQ(to_text(parse_operator("A - A")), "0");
  EXPECT_EQ(to_text(parse_function("z z*^2 - z")), "z*^2 z - z");
}

TEST(RoundTrip, RandomOperators) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 200; ++t) {
    unsigned modes = 1 + t % 4;
    OperatorPoly p = random_operator(rng, modes, 3);
    OperatorPoly back = parse_operator(to_text(p), modes);
    EXPECT_EQ(back, p) << to_text(p);
    EXPECT_EQ(to_text(back), to_text(p));
  }
}

TEST(RoundTrip, RandomFunctions) {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 200; ++t) {
    unsigned vars = 1 + t % 3;
    PolyFunction f = random_function(rng, vars, 3);
    EXPECT_EQ(parse_function(to_text(f), vars), f) << to_text(f);
  }
}

TEST(Json, OperatorRoundTripAndLayout) {
  std::mt19937_64 rng(139);
  for (int t = 0; t < 50; ++t) {
    OperatorPoly p = random_operator(rng, 1 + t % 3, 3);
    EXPECT_EQ(operator_from_json(Json::parse(to_json(p).dump())), p);
  }
  Json j = to_json(parse_operator("A*A + (1/2)i"));
  EXPECT_EQ(j.dump(),
            R"({"modes":1,"terms":[{"coeff":{"re":[1,1],"im":[0,1]},"powers":[{"mode":0,"create":1,"annihilate":1}]},)"
            R"({"coeff":{"re":[0,1],"im":[1,2]},"powers":[]}]})");
}

TEST(Json, HugeIntegersBecomeStrings) {
  Rational big(Integer("123456789012345678901234567890"), Integer(7));
  OperatorPoly p(1);
  p.add_term(NormalMonomial(), GaussianRational(big));
  Json j = to_json(p);
  EXPECT_TRUE(j["terms"][0]["coeff"]["re"][0].is_string());
  EXPECT_TRUE(j["terms"][0]["coeff"]["re"][1].is_number_integer());
  EXPECT_EQ(operator_from_json(j), p);
}

TEST(Json, BivariateGridAndMatrix) {
  auto p = BivariatePoly<GaussianRational>::from_function(parse_function("z*^2 z - (3/4)i"));
  EXPECT_EQ(bivariate_from_json(to_json(p)), p);

  QuadratureGrid g = QuadratureGrid::gaussian(6);
  QuadratureGrid back = grid_from_json(Json::parse(to_json(g).dump()));
  EXPECT_EQ(back.order, 6);
  EXPECT_EQ(back.nodes, g.nodes);
  EXPECT_EQ(back.weights, g.weights);

  Matrix m(2, 3);
  m << std::complex<double>(1, -2), 0.5, 0, std::complex<double>(0, 1e-300), -3, 7.25;
  Json mj = to_json(m);
  EXPECT_EQ(mj["entries"][1], Json::array({0.5, 0.0}));
  EXPECT_EQ(matrix_from_json(Json::parse(mj.dump())), m);
}

TEST(Json, MalformedInputRejected) {
  EXPECT_THROW(gaussian_from_json(Json::parse(R"({"re":[1,0],"im":[0,1]})")), ParseError);
  EXPECT_THROW(gaussian_from_json(Json::parse(R"({"re":[1.5,1],"im":[0,1]})")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[[1,0]]})")), ParseError);
}
