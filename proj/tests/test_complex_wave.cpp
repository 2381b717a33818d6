#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bosonorder/complex_wave.hpp"
#include "bosonorder/parse.hpp"
#include "bosonorder/quadrature.hpp"

using namespace bosonorder;

namespace {

using Poly = BivariatePoly<GaussianRational>;
using cd = std::complex<double>;

Poly f(const char* s) { return Poly::from_function(parse_function(s)); }
GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

const QuadratureGrid& grid() {
  static const QuadratureGrid g = QuadratureGrid::gaussian();
  return g;
}

Poly random_poly(std::mt19937_64& rng, unsigned max_degree, int terms) {
  std::uniform_int_distribution<unsigned> pw(0, max_degree);
  std::uniform_int_distribution<int> coef(-4, 4);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    unsigned j = pw(rng), k = pw(rng);
    if (j + k > max_degree) continue;
    p.add_term({j, k}, GaussianRational(Rational(coef(rng), 1 + std::abs(coef(rng))), Rational(coef(rng))));
  }
  return p;
}

}  // namespace

TEST(GaussianMoment, Examples) {
  EXPECT_EQ(gaussian_moment(0, 0), 1);
  EXPECT_EQ(gaussian_moment(3, 3), 6);
  EXPECT_EQ(gaussian_moment(2, 1), 0);
}

TEST(Quadrature, WeightsSumToOne) {
  double s = 0;
  for (double w : grid().weights) s += w;
  EXPECT_NEAR(s, 1.0, 1e-12);
  for (double w : grid().weights) EXPECT_GT(w, 0.0);
}

TEST(Quadrature, ReproducesMoments) {
  // Errors are measured relative to √(n! m!), the L² norm scale of the
  // integrand; absolute agreement is impossible once n! exceeds 1e16.
  const auto& g = grid();
  double worst = 0;
  for (unsigned n = 0; n < 64; ++n) {
    for (unsigned m = 0; n + m < 64; ++m) {
      cd sum = g.integrate([&](cd z) { return std::pow(std::conj(z), int(n)) * std::pow(z, int(m)); });
      double exact = gaussian_moment(n, m).convert_to<double>();
      double scale = std::sqrt(std::tgamma(n + 1.0) * std::tgamma(m + 1.0));
      worst = std::max(worst, std::abs(sum - exact) / scale);
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Quadrature, SmallMomentsAbsolute) {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= 6; ++m) {
      cd sum = grid().integrate([&](cd z) { return std::pow(std::conj(z), int(n)) * std::pow(z, int(m)); });
      EXPECT_NEAR(std::abs(sum - gaussian_moment(n, m).convert_to<double>()), 0.0, 1e-10) << n << "," << m;
    }
}

TEST(Quadrature, OrderGuard) {
  QuadratureGrid g = QuadratureGrid::gaussian(8);
  EXPECT_NO_THROW(g.require_order(0, 8));
  EXPECT_THROW(g.require_order(1, 8), QuadratureOrderError);
  EXPECT_THROW(gauss_hermite(0), QuadratureOrderError);
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(f("z*"), f("z*")), q(1));
  EXPECT_EQ(inner_product(f("z*^2"), f("z*^2")), q(2));
  EXPECT_EQ(inner_product(f("z"), f("z*")), q(0));
}

TEST(InnerProduct, MatchesQuadratureAndIsHermitian) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Poly x = random_poly(rng, 6, 4), y = random_poly(rng, 6, 4);
    GaussianRational exact = inner_product(x, y);
    EXPECT_EQ(exact, inner_product(y, x).conj());
    cd numeric = grid().integrate([&](cd z) { return std::conj(x.at(z)) * y.at(z); });
    EXPECT_LT(std::abs(numeric - exact.to_complex()), 1e-9);
    if (!x.is_zero()) {
      GaussianRational n = inner_product(x, x);
      EXPECT_TRUE(n.is_real());
      EXPECT_GT(n.re(), 0);
    }
  }
}

TEST(Projection, Examples) {
  EXPECT_EQ(project_antiholomorphic(f("z*^2 z")), f("2 z*"));
  EXPECT_EQ(project_antiholomorphic(f("z")), Poly{});
  EXPECT_EQ(project_antiholomorphic(f("1")), f("1"));
}

TEST(Projection, ExactTableUpToSix) {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= 6; ++m) {
      Poly p = project_antiholomorphic(Poly::monomial(n, m));
      // Oracle: expand against the orthonormal basis (α*)^k/√k!, so the
      // coefficient of (α*)^k is ⟨(α*)^k|f⟩/k!.
      Poly expected;
      for (unsigned k = 0; k <= n + m; ++k) {
        GaussianRational c = inner_product(Poly::monomial(k, 0), Poly::monomial(n, m));
        expected.add_term({k, 0}, c / GaussianRational(Rational(factorial(k))));
      }
      EXPECT_EQ(p, expected) << n << "," << m;
    }
}

TEST(Projection, IdempotentAndSelfAdjoint) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly x = random_poly(rng, 10, 6), y = random_poly(rng, 10, 6);
    Poly px = project_antiholomorphic(x);
    EXPECT_TRUE(px.is_antiholomorphic());
    EXPECT_EQ(project_antiholomorphic(px), px);
    EXPECT_EQ(inner_product(px, y), inner_product(x, project_antiholomorphic(y)));
  }
}

TEST(WaveOps, Examples) {
  EXPECT_EQ(apply_op(WaveOp::A, f("z*^2")), f("2 z*"));
  EXPECT_EQ(apply_op(WaveOp::A_star, f("1")), f("z*"));
  EXPECT_EQ(apply_op(WaveOp::C, f("z*^3 z")), f("z*^3 z^2"));
  EXPECT_EQ(apply_op(WaveOp::B_star, f("z")), f("z^2"));
  EXPECT_EQ(apply_op(WaveOp::B_star, f("z*")), f("z z* - 1"));
}

TEST(WaveOps, AnnihilatorsCharacterizeSubspaces) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Poly x = random_poly(rng, 10, 5);
    EXPECT_EQ(apply_op(WaveOp::A, x).is_zero(), x.is_holomorphic());
    EXPECT_EQ(apply_op(WaveOp::B, x).is_zero(), x.is_antiholomorphic());
  }
  EXPECT_TRUE(f("3").is_holomorphic() && f("3").is_antiholomorphic());
  EXPECT_FALSE(f("z").is_antiholomorphic());
}

TEST(CcrCheck, Examples) {
  CcrReport r = ccr_check(f("z* z"), f("z*^2"));
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(ccr_check(f("z*^3"), f("1")).pass());
}

TEST(CcrCheck, AdjointnessExample) {
  // ⟨A (α*)²|α*⟩ = ⟨(α*)²|A* α*⟩ = 2.
  CcrReport r = ccr_check(f("z*^2"), f("z*"));
  EXPECT_EQ(r.adjoint_lhs_a, q(2));
  EXPECT_EQ(r.adjoint_rhs_a, q(2));
  // With the arguments the other way round both sides vanish.
  CcrReport s = ccr_check(f("z*"), f("z*^2"));
  EXPECT_EQ(s.adjoint_lhs_a, q(0));
  EXPECT_EQ(s.adjoint_rhs_a, q(0));
  EXPECT_TRUE(r.pass() && s.pass());
}

TEST(CcrCheck, RandomPolynomials) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    CcrReport r = ccr_check(random_poly(rng, 7, 5), random_poly(rng, 7, 5));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name;
  }
}

TEST(Representer, ReproducingExamples) {
  EXPECT_EQ(inner_product(representer(q(1)), f("z*^2")), q(1));
  EXPECT_EQ(inner_product(representer(q(0)), f("z*^2")), q(0));
}

TEST(Representer, ReproducesPolynomialsExactly) {
  std::mt19937_64 rng(23);
  const GaussianRational betas[] = {q(1, 2), GaussianRational(Rational(-3, 4), Rational(1, 3)), q(0, 1) + GaussianRational::i()};
  for (const auto& beta : betas) {
    for (int trial = 0; trial < 5; ++trial) {
      Poly x = project_antiholomorphic(random_poly(rng, 8, 5));
      GaussianRational value;
      GaussianRational bc = beta.conj();
      for (const auto& [e, c] : x.terms()) value += c * bc.pow(e.conj);
      EXPECT_EQ(inner_product(representer(beta, 10), x), value);
    }
  }
}

TEST(Representer, KernelComposition) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> r(0.0, 1.5), th(0.0, 2 * M_PI);
  for (int trial = 0; trial < 20; ++trial) {
    cd beta = std::polar(r(rng), th(rng)), gamma = std::polar(r(rng), th(rng));
    cd ip = inner_product(representer(beta, 40), representer(gamma, 40));
    cd expected = std::exp(std::conj(beta) * gamma);
    EXPECT_LT(std::abs(ip - expected), 1e-10);
    EXPECT_LT(std::abs(kernel_eval(beta, gamma) - expected), 1e-14);
    // Reproducing property for the representer itself: ⟨𝕜_β|𝕜_γ⟩ = 𝕜_γ(β*).
    EXPECT_LT(std::abs(representer(gamma, 40).evaluate(std::conj(beta), 0.0) - expected), 1e-10);
  }
}

TEST(Bargmann, BasisAndVacuum) {
  std::vector<GaussianRational> e3(4);
  e3[3] = q(1);
  auto p = bargmann_map(e3);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coefficient(3, 0), RadicalNumber::sqrt(Rational(1, 6)));
  EXPECT_EQ(bargmann_map(std::vector<GaussianRational>{q(1)}), BivariatePoly<RadicalNumber>::constant(1));
}

TEST(Bargmann, ExponentialVectorMapsToRepresenter) {
  // exp(β) has components β^n/√n!; with exact radicals the image is 𝕜_β.
  GaussianRational beta(Rational(2, 3), Rational(-1, 2));
  std::vector<RadicalNumber> comps;
  BivariatePoly<RadicalNumber> image;
  GaussianRational power = q(1);
  for (unsigned n = 0; n <= 12; ++n) {
    RadicalNumber comp = RadicalNumber(power) * RadicalNumber::sqrt(Rational(1, factorial(n)));
    image.add_term({n, 0}, comp * RadicalNumber::sqrt(Rational(1, factorial(n))));
    power = power * beta;
  }
  auto rep = representer(RadicalNumber(beta), 12);
  EXPECT_EQ(image, rep);
}

TEST(Bargmann, UnitaryOnDegreeTen) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GaussianRational> psi(11), chi(11);
    GaussianRational expected;
    for (int n = 0; n <= 10; ++n) {
      psi[n] = GaussianRational(Rational(coef(rng), 3), Rational(coef(rng), 2));
      chi[n] = GaussianRational(Rational(coef(rng), 5), Rational(coef(rng)));
      expected += psi[n].conj() * chi[n];
    }
    RadicalNumber ip = inner_product(bargmann_map(psi), bargmann_map(chi));
    ASSERT_TRUE(ip.is_rational());
    EXPECT_EQ(ip.rational_value(), expected);
  }
}

TEST(Bargmann, FloatingMatchesExact) {
  std::vector<cd> v{{1, 0}, {0, 2}, {-1, 1}};
  auto p = bargmann_map(v);
  EXPECT_NEAR(std::abs(p.coefficient(2, 0) - cd(-1, 1) / std::sqrt(2.0)), 0.0, 1e-15);
}
