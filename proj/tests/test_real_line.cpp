#include <gtest/gtest.h>

#include "bosonorder/real_line.hpp"

using namespace bosonorder;

namespace {

RadicalNumber r(long n, long d = 1) { return RadicalNumber(GaussianRational(Rational(n, d))); }
RadicalNumber root(long n, long d = 1) { return RadicalNumber::sqrt(Rational(n, d)); }

RealPoly x(unsigned n, RadicalNumber c = 1) { return RealPoly::monomial(n, c); }

}  // namespace

TEST(RealLine, LadderExamples) {
  EXPECT_EQ(realline_apply(RealOp::a, x(2)), x(1, 2));
  EXPECT_EQ(realline_apply(RealOp::adag, x(0)), x(1));
  EXPECT_TRUE(realline_apply(RealOp::a, x(0)).is_zero());
}

TEST(RealLine, Quadratures) {
  EXPECT_EQ(realline_apply(RealOp::q, x(1)), x(2, root(1, 2)));
  // p̂ 1 = i x/√2
  EXPECT_EQ(realline_apply(RealOp::p, x(0)), x(1, RadicalNumber(GaussianRational::i()) * root(1, 2)));
}

TEST(RealLine, CanonicalCommutators) {
  const RadicalNumber i(GaussianRational::i());
  for (unsigned n = 0; n <= 8; ++n) {
    RealPoly f = x(n, r(3)) + x(n / 2, r(-1, 2));
    RealPoly qp = realline_apply(RealOp::q, realline_apply(RealOp::p, f));
    RealPoly pq = realline_apply(RealOp::p, realline_apply(RealOp::q, f));
    EXPECT_EQ(qp - pq, i * f);
    RealPoly aad = realline_apply(RealOp::a, realline_apply(RealOp::adag, f));
    RealPoly ada = realline_apply(RealOp::adag, realline_apply(RealOp::a, f));
    EXPECT_EQ(aad - ada, f);
  }
}

TEST(RealLine, LadderFromQuadratures) {
  // â = (q̂ + i p̂)/√2
  const RadicalNumber i(GaussianRational::i());
  for (unsigned n = 0; n <= 6; ++n) {
    RealPoly f = x(n);
    RealPoly combo = root(1, 2) * (realline_apply(RealOp::q, f) + i * realline_apply(RealOp::p, f));
    EXPECT_EQ(combo, realline_apply(RealOp::a, f));
  }
}

TEST(HermiteBasis, Examples) {
  EXPECT_EQ(hermite_basis(0), x(0));
  EXPECT_EQ(hermite_basis(1), x(1));
  EXPECT_EQ(hermite_basis(2), root(1, 2) * (x(2) - x(0)));
  EXPECT_EQ(to_text(hermite_basis(2)), "((1/2)sqrt(2)) x^2 - ((1/2)sqrt(2))");
}

TEST(HermiteBasis, NumberEigenvectors) {
  for (unsigned n = 0; n <= 12; ++n) {
    RealPoly e = hermite_basis(n);
    RealPoly ne = realline_apply(RealOp::adag, realline_apply(RealOp::a, e));
    EXPECT_TRUE((ne - r(n) * e).is_zero()) << n;
    if (n > 0) EXPECT_EQ(realline_apply(RealOp::a, e), root(n) * hermite_basis(n - 1));
  }
}

TEST(HermiteBasis, OrthonormalUnderGaussian) {
  // ∫ x^k γ(dx) = (k−1)!! for even k.
  auto moment = [](unsigned k) -> RadicalNumber {
    if (k % 2) return {};
    Integer v = 1;
    for (unsigned t = k; t > 1; t -= 2) v *= t - 1;
    return RadicalNumber(GaussianRational(Rational(v)));
  };
  for (unsigned m = 0; m <= 7; ++m)
    for (unsigned n = 0; n <= 7; ++n) {
      RadicalNumber ip;
      RealPoly em = hermite_basis(m), en = hermite_basis(n);
      for (const auto& [p, c] : em.terms())
        for (const auto& [q, d] : en.terms()) ip += c.conj() * d * moment(p + q);
      EXPECT_EQ(ip, r(m == n ? 1 : 0)) << m << "," << n;
    }
}

TEST(QuadratureDecomposition, AllIdentitiesHold) {
  DecompositionReport rep = quadrature_decomposition_check(6);
  EXPECT_EQ(rep.monomials, 28u);
  EXPECT_EQ(rep.checks.size(), 10u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_TRUE(rep.pass());
}

TEST(QuadratureDecomposition, Examples) {
  using Poly = BivariatePoly<GaussianRational>;
  PlanePoly one = to_plane(Poly::constant(1));
  EXPECT_TRUE(plane_apply(WaveOp::A, one).is_zero());
  PlanePoly c1 = plane_apply(WaveOp::C, one);
  EXPECT_EQ(c1, to_plane(Poly::monomial(0, 1)));
  EXPECT_EQ(c1.terms().at({1, 0}), root(1, 2));
  EXPECT_EQ(plane_apply(WaveOp::B_star, to_plane(Poly::monomial(0, 1))), to_plane(Poly::monomial(0, 2)));
}
