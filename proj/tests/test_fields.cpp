#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bosonorder/fields.hpp"
#include "bosonorder/parse.hpp"
#include "oracle.hpp"

using namespace bosonorder;

namespace {

using cd = std::complex<double>;

OperatorPoly op(const char* s, unsigned modes = 1) { return parse_operator(s, modes); }
PolyFunction fn(const char* s) { return parse_function(s); }

OneParticleVector random_vector(std::mt19937_64& rng, unsigned d) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  OneParticleVector v(d);
  for (auto& c : v) c = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return v;
}

const Matrix zero(int n) { return Matrix::Zero(n, n); }

}  // namespace

TEST(Fields, SingleModeEmbedding) {
  FockMatrix a = field(FieldKind::A, basis_vector(2, 0), 4);
  Matrix expected = oracle::kron(oracle::annihilator(4), Matrix::Identity(4, 4));
  EXPECT_LT((a.entries - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Fields, CommutationRelations) {
  const int c = 4;
  Matrix a1 = field(FieldKind::A, basis_vector(2, 0), c).entries;
  Matrix ad2 = field(FieldKind::A_star, basis_vector(2, 1), c).entries;
  EXPECT_LT(safe_max_diff(a1 * ad2 - ad2 * a1, zero(16), {c, c}, 1), 1e-12);

  std::mt19937_64 rng(73);
  for (int t = 0; t < 10; ++t) {
    OneParticleVector phi = random_vector(rng, 2), psi = random_vector(rng, 2);
    Matrix a = field(FieldKind::A, phi, c).entries, as = field(FieldKind::A_star, psi, c).entries;
    Matrix expected = inner(phi, psi).to_complex() * Matrix::Identity(16, 16);
    EXPECT_LT(safe_max_diff(a * as - as * a, expected, {c, c}, 1), 1e-12);
    // A*(φ) is the adjoint of A(φ).
    EXPECT_LT((field(FieldKind::A_star, phi, c).entries - Matrix(field(FieldKind::A, phi, c).entries.adjoint())).norm(), 1e-14);
  }
}

TEST(Fields, QuadratureCommutator) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 10; ++t) {
    OneParticleVector phi = random_vector(rng, 2), psi = random_vector(rng, 2);
    Matrix q = quadrature_q(field(FieldKind::A, phi, 5).entries);
    Matrix p = quadrature_p(field(FieldKind::A, psi, 5).entries);
    cd expected(0, 2 * to_double(inner(phi, psi).re()));
    EXPECT_LT(safe_max_diff(q * p - p * q, expected * Matrix::Identity(25, 25), {5, 5}, 2), 1e-12);
  }
}

TEST(Fields, ZIsAntiLinearAndNormal) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    OneParticleVector phi = random_vector(rng, 2), psi = random_vector(rng, 2);
    GaussianRational s(Rational(2, 3), Rational(-1, 2));
    OneParticleVector scaled = phi;
    for (auto& c : scaled) c = s * c;
    EXPECT_EQ(z_poly(scaled), s.conj() * z_poly(phi));
    CheckReport r = z_commutativity_check(phi, psi, 4);
    EXPECT_TRUE(r.pass) << r.observed;
    EXPECT_EQ(*r.d, 2);
  }
}

TEST(Fields, ZCommutatorIsExactSymbolically) {
  std::mt19937_64 rng(89);
  OneParticleVector phi = random_vector(rng, 3), psi = random_vector(rng, 3);
  OperatorPoly zs = adjoint(z_poly(psi));
  EXPECT_TRUE(commutator(z_poly(phi), zs).is_zero());
  EXPECT_TRUE(commutator(z_poly(phi), z_poly(psi)).is_zero());
}

TEST(Fields, BudgetEnforced) {
  EXPECT_THROW(z_field(OneParticleVector(5, GaussianRational(1)), 4), BudgetError);
  EXPECT_NO_THROW(z_field(OneParticleVector(2, GaussianRational(1)), 4));
}

TEST(PartialVacuum, IdentityAndAdjoint) {
  const Dims doubled{3, 3, 3, 3};
  FockMatrix id{Matrix::Identity(81, 81), doubled, 0};
  EXPECT_EQ(partial_vacuum_B(id).entries, Matrix(Matrix::Identity(9, 9)));
  std::mt19937 gen(97);
  Matrix x = Matrix::Random(81, 81);
  FockMatrix fx{x, doubled, 0}, fxa{x.adjoint(), doubled, 0};
  EXPECT_LT((partial_vacuum_B(fxa).entries - Matrix(partial_vacuum_B(fx).entries.adjoint())).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((partial_vacuum_A(fxa).entries - Matrix(partial_vacuum_A(fx).entries.adjoint())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialVacuum, MatchesSymbolicContraction) {
  // Independent route: contract the B-modes symbolically, one at a time.
  std::mt19937_64 rng(101);
  OneParticleVector phi = random_vector(rng, 2), psi = random_vector(rng, 2);
  OperatorPoly x = mul(z_poly(phi), adjoint(z_poly(psi)));
  OperatorPoly reduced = partial_vacuum_expectation(partial_vacuum_expectation(x, 3), 2);
  FockMatrix m = partial_vacuum_B(eval_poly(x, {4, 4, 4, 4}));
  EXPECT_LT(safe_max_diff(m.entries, eval_poly(reduced, {4, 4}).entries, {4, 4}, 2), 1e-12);
}

TEST(PartialVacuum, ZPairReducesToAntiWickPair) {
  std::mt19937_64 rng(103);
  OneParticleVector phi = random_vector(rng, 2), psi = random_vector(rng, 2);
  const int c = 4;
  FockMatrix x{z_field(phi, c).entries * Matrix(z_field(psi, c).entries.adjoint()), {c, c, c, c}, 2};
  Matrix ea = partial_vacuum_B(x).entries;
  Matrix expected = field(FieldKind::A, phi, c).entries * field(FieldKind::A_star, psi, c).entries;
  EXPECT_LT(safe_max_diff(ea, expected, {c, c}, 2), 1e-10);
  // 𝓔_B gives B(Jψ) B(Jφ)*.
  Matrix eb = partial_vacuum_A(x).entries;
  Matrix expected_b = field(FieldKind::B, conjugation(psi), c).entries * field(FieldKind::B_star, conjugation(phi), c).entries;
  EXPECT_LT(safe_max_diff(eb, expected_b, {c, c}, 2), 1e-10);
}

TEST(AntiWickFields, Examples) {
  OneParticleVector e1 = basis_vector(2, 0);
  CheckReport r = anti_wick_fields_check({e1}, {e1}, 4);
  EXPECT_TRUE(r.pass) << r.observed;
  // a₁a₁† = a₁†a₁ + I on the safe block.
  FockMatrix x{z_field(e1, 4).entries * Matrix(z_field(e1, 4).entries.adjoint()), {4, 4, 4, 4}, 2};
  EXPECT_LT(safe_max_diff(partial_vacuum_B(x).entries, eval_poly(op("A*A + 1", 2), {4, 4}).entries, {4, 4}, 2), 1e-12);
  EXPECT_TRUE(anti_wick_fields_check({e1}, {}, 4).pass);
}

TEST(AntiWickFields, AllShapesRandomVectors) {
  std::mt19937_64 rng(107);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 3; ++m) {
      if (n + m == 0) continue;
      std::vector<OneParticleVector> phis, psis;
      for (int j = 0; j < n; ++j) phis.push_back(random_vector(rng, 2));
      for (int k = 0; k < m; ++k) psis.push_back(random_vector(rng, 2));
      CheckReport r = anti_wick_fields_check(phis, psis, 4);
      EXPECT_TRUE(r.pass) << n << "," << m << " residual " << r.observed;
      Json j = to_json(r);
      EXPECT_EQ(j["check"], "anti_wick_fields");
      EXPECT_EQ(j["cutoff"], 4);
      EXPECT_TRUE(j.contains("max_residual"));
    }
}

TEST(ExpVectors, Overlaps) {
  OneParticleVector zero2(2), e1 = basis_vector(2, 0), e2 = basis_vector(2, 1);
  EXPECT_LT(std::abs(exp_vector_overlap(zero2, zero2, 20) - 1.0), 1e-14);
  EXPECT_LT(std::abs(exp_vector_overlap(e1, e1, 20) - std::exp(1.0)), 1e-8);
  EXPECT_LT(std::abs(exp_vector_overlap(e1, e2, 20) - 1.0), 1e-12);
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int t = 0; t < 10; ++t) {
    OneParticleVector phi(2), psi(2);
    for (int i = 0; i < 2; ++i) {
      phi[i] = GaussianRational(Rational(num(rng), 5), Rational(num(rng), 5));
      psi[i] = GaussianRational(Rational(num(rng), 5), Rational(num(rng), 5));
    }
    EXPECT_LT(std::abs(exp_vector_overlap(phi, psi, 20) - std::exp(inner(phi, psi).to_complex())), 1e-8);
  }
}

TEST(Cohen, Examples) {
  CohenReport r = cohen_factorization_check(fn("z* z"), fn("z"), 6);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(tensor(anti_wick_direct(fn("z* z")), anti_wick_direct(fn("z"))), op("A*A B + B", 2));
  CohenReport one = cohen_factorization_check(fn("1"), fn("1"), 4);
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(anti_wick_multimode(PolyFunction::constant(1, 2)), OperatorPoly::identity(2));
  CohenReport xi = cohen_factorization_check(fn("1"), fn("1"), 4, basis_vector(1, 0), basis_vector(1, 0));
  EXPECT_EQ(xi.joint_exponent, Rational(-1));
  EXPECT_EQ(xi.split_exponent, Rational(-1));
}

TEST(Cohen, RandomSymbols) {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<unsigned> pw(0, 3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    PolyFunction f1(1), f2(1);
    for (int k = 0; k < 3; ++k) {
      unsigned j1 = pw(rng), k1 = pw(rng), j2 = pw(rng), k2 = pw(rng);
      if (j1 + k1 <= 3) f1.add_term(FunctionKey{{j1, k1}}, GaussianRational(coef(rng), coef(rng)));
      if (j2 + k2 <= 3) f2.add_term(FunctionKey{{j2, k2}}, GaussianRational(coef(rng), coef(rng)));
    }
    CohenReport r = cohen_factorization_check(f1, f2, 8, random_vector(rng, 2), random_vector(rng, 3));
    EXPECT_TRUE(r.symbolic);
    EXPECT_TRUE(r.exponents);
    EXPECT_LE(r.matrix_residual, 1e-10);
  }
}

TEST(CompletePositivity, Examples) {
  using Block = std::array<std::array<PolyFunction, 2>, 2>;
  auto block_for = [](const PolyFunction& g) {
    return Block{{{PolyFunction::constant(1), g}, {g.conjugate(), g.conjugate() * g}}};
  };
  EXPECT_GE(cp_block_check(block_for(fn("z")), 20), -1e-8);
  EXPECT_GE(cp_block_check(block_for(fn("z + z*")), 20), -1e-8);
  double zero_case = cp_block_check(block_for(PolyFunction(1)), 20);
  EXPECT_NEAR(zero_case, 0.0, 1e-12);
  Block bad{{{fn("1"), fn("z")}, {fn("z"), fn("1")}}};
  EXPECT_THROW(cp_block_check(bad, 20), SymbolError);
}

TEST(CompletePositivity, RankOneRandom) {
  using Block = std::array<std::array<PolyFunction, 2>, 2>;
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<unsigned> pw(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    PolyFunction g(1), h(1);
    for (int k = 0; k < 3; ++k) {
      unsigned j = pw(rng), l = pw(rng);
      if (j + l <= 2) g.add_term(FunctionKey{{j, l}}, GaussianRational(coef(rng), coef(rng)));
      j = pw(rng), l = pw(rng);
      if (j + l <= 2) h.add_term(FunctionKey{{j, l}}, GaussianRational(coef(rng), coef(rng)));
    }
    // [g, h]† [g, h] pointwise: entries conj(g_i) g_j.
    Block b{{{g.conjugate() * g, g.conjugate() * h}, {h.conjugate() * g, h.conjugate() * h}}};
    EXPECT_GE(cp_block_check(b, 24), -1e-8);
  }
}
