#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "complex_wave.hpp"
#include "fields.hpp"
#include "fock.hpp"
#include "fourier.hpp"
#include "parse.hpp"
#include "quadrature.hpp"
#include "quantization.hpp"
#include "real_line.hpp"
#include "report.hpp"
#include "text.hpp"

namespace bosonorder {

/// Knobs shared by every suite. Unset values fall back to the per-check
/// defaults (dim 20 for the quadrature matrix, 40 elsewhere).
struct VerifyConfig {
  std::uint64_t seed = 1;
  std::optional<int> dim;
  int gh_order = 64;
  std::optional<double> tol;
  Limits limits;

  int dim_or(int fallback) const { return dim.value_or(fallback); }
  double bound_or(double fallback) const { return tol.value_or(fallback); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symbolic", "complex-wave", "fock", "fields", "fourier"};
  return names;
}

/// Random test data with small exact coefficients.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int span = 4, int den = 4) {
    return Rational(std::uniform_int_distribution<int>(-span, span)(rng_),
                    std::uniform_int_distribution<int>(1, den)(rng_));
  }
  GaussianRational gaussian(int span = 4, int den = 4) { return {rational(span, den), rational(span, den)}; }

  /// Symbol with up to `terms` monomials of total degree ≤ degree.
  PolyFunction symbol(unsigned degree, int terms = 4) {
    std::uniform_int_distribution<unsigned> pw(0, degree);
    PolyFunction f(1);
    for (int t = 0; t < terms; ++t) {
      unsigned j = pw(rng_), k = pw(rng_);
      if (j + k <= degree) f.add_term(FunctionKey{{j, k}}, gaussian(3, 3));
    }
    if (f.is_zero()) f.add_term(FunctionKey{{0, 0}}, GaussianRational(1));
    return f;
  }

  BivariatePoly<GaussianRational> poly(unsigned degree, int terms = 5) {
    return BivariatePoly<GaussianRational>::from_function(symbol(degree, terms));
  }

  OneParticleVector vector(unsigned d) {
    OneParticleVector v(d);
    for (auto& c : v) c = gaussian();
    return v;
  }

  /// Uniform in the disc of radius r.
  std::complex<double> point(double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r * std::sqrt(u(rng_)), 2 * std::numbers::pi * u(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

namespace detail {

inline CheckReport exact_report(std::string check, std::size_t failures, std::size_t cases, Json params = Json::object()) {
  params["cases"] = cases;
  return upper_bound_report(std::move(check), double(failures), 0.0, std::move(params));
}

inline double relative(std::complex<double> got, std::complex<double> expected) {
  return std::abs(got - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace detail

// Symbolic CCR algebra.

/// The dilation route and the direct anti-Wick expansion agree with exact
/// coefficients on every monomial of total degree ≤ max_degree.
inline CheckReport check_dilation_theorem(const VerifyConfig& cfg, unsigned max_degree = 8) {
  std::size_t cases = 0, failures = 0;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned n = 0; n <= d; ++n) {
      PolyFunction f = PolyFunction::monomial(n, d - n);
      ++cases;
      if (!(anti_wick_via_dilation(f, cfg.limits) == anti_wick_direct(f, cfg.limits))) ++failures;
    }
  return detail::exact_report("dilation_theorem", failures, cases, {{"max_degree", max_degree}});
}

/// 𝒜 of a product of symbols in separate modes is the tensor product of
/// the single-mode quantizations, exactly.
inline CheckReport check_factor_symbolic(const VerifyConfig& cfg, int trials = 10) {
  Sampler s(cfg.seed + 11);
  std::size_t failures = 0;
  for (int t = 0; t < trials; ++t) {
    PolyFunction f1 = s.symbol(3), f2 = s.symbol(3);
    OperatorPoly joint = anti_wick_multimode(f1.embedded(2, 0) * f2.embedded(2, 1), cfg.limits);
    if (!(joint == tensor(anti_wick_direct(f1, cfg.limits), anti_wick_direct(f2, cfg.limits)))) ++failures;
  }
  return detail::exact_report("factor_property_symbolic", failures, std::size_t(trials));
}

inline std::vector<CheckReport> symbolic_suite(const VerifyConfig& cfg) {
  return {check_dilation_theorem(cfg), check_factor_symbolic(cfg)};
}

// Complex-wave representation.

/// 𝒫 (α*)^n α^m = n!/(n−m)! (α*)^{n−m} (zero for m > n) and the Gaussian
/// moments δ_nm n!, exactly for n, m ≤ max_power.
inline CheckReport check_projection_exact(unsigned max_power = 6) {
  using Poly = BivariatePoly<GaussianRational>;
  std::size_t cases = 0, failures = 0;
  for (unsigned n = 0; n <= max_power; ++n)
    for (unsigned m = 0; m <= max_power; ++m) {
      ++cases;
      Poly expected;
      if (m <= n) expected = Poly::monomial(n - m, 0, GaussianRational(Rational(factorial(n) / factorial(n - m))));
      if (!(project_antiholomorphic(Poly::monomial(n, m)) == expected)) ++failures;
      Integer moment = n == m ? factorial(n) : Integer(0);
      if (inner_product(Poly::constant(1), Poly::monomial(n, m)) != GaussianRational(Rational(moment))) ++failures;
      if (gaussian_moment(n, m) != moment) ++failures;
    }
  return detail::exact_report("projection_exact", failures, cases, {{"max_power", max_power}});
}

/// Quadrature values of the moments and of the projection overlaps
/// ⟨(α*)^k|(α*)^n α^m⟩ = δ_{m+k,n} n!.
inline CheckReport check_projection_quadrature(const VerifyConfig& cfg, unsigned max_power = 6) {
  QuadratureGrid g = QuadratureGrid::gaussian(cfg.gh_order);
  g.require_order(3 * max_power, 2);
  double worst = 0.0;
  for (unsigned n = 0; n <= max_power; ++n)
    for (unsigned m = 0; m <= max_power; ++m)
      for (unsigned k = 0; k <= max_power; ++k) {
        auto v = g.integrate([&](std::complex<double> a) {
          return std::pow(a, int(k)) * std::pow(std::conj(a), int(n)) * std::pow(a, int(m));
        });
        double expected = n == m + k ? to_double(Rational(factorial(n))) : 0.0;
        worst = std::max(worst, std::abs(v - expected));
      }
  return upper_bound_report("projection_quadrature", worst, cfg.bound_or(1e-10),
                            {{"max_power", max_power}, {"gh_order", cfg.gh_order}});
}

/// Runs ccr_check on random polynomial pairs of degree ≤ max_degree and
/// groups the identities into commutators, multiplication and adjointness.
inline std::vector<CheckReport> check_wave_operators(const VerifyConfig& cfg, unsigned max_degree = 6, int trials = 10) {
  Sampler s(cfg.seed + 23);
  std::size_t ccr = 0, mult = 0, adj = 0;
  for (int t = 0; t < trials; ++t) {
    CcrReport r = ccr_check(s.poly(max_degree, 6), s.poly(max_degree, 6));
    for (const auto& c : r.checks) {
      if (c.pass) continue;
      if (c.name.starts_with("[")) ++ccr;
      else if (c.name.starts_with("<")) ++adj;
      else ++mult;
    }
  }
  Json params{{"max_degree", max_degree}};
  return {detail::exact_report("ccr_relations", ccr, std::size_t(trials), params),
          detail::exact_report("c_multiplication", mult, std::size_t(trials), params),
          detail::exact_report("adjointness", adj, std::size_t(trials), params)};
}

inline CheckReport check_quadrature_decomposition(unsigned max_degree = 6) {
  DecompositionReport r = quadrature_decomposition_check(max_degree);
  std::size_t failures = 0;
  for (const auto& c : r.checks) failures += !c.pass;
  return detail::exact_report("quadrature_decomposition", failures, r.checks.size(), {{"max_degree", max_degree}});
}

/// ⟨𝕜_β|𝕜_γ⟩ = e^{β*γ} at truncation T, plus the reproducing property
/// ⟨𝕜_β|f⟩ = f(β*) for random anti-holomorphic f.
inline std::vector<CheckReport> check_rkhs(const VerifyConfig& cfg, unsigned truncation = 40, int trials = 20) {
  Sampler s(cfg.seed + 29);
  double composition = 0.0, reproducing = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto beta = s.point(1.5), gamma = s.point(1.5);
    auto kb = representer(beta, truncation), kg = representer(gamma, truncation);
    composition = std::max(composition, detail::relative(inner_product(kb, kg), kernel_eval(beta, gamma)));
    auto f = project_antiholomorphic(s.poly(8, 5)).to_float();
    reproducing = std::max(reproducing, detail::relative(inner_product(kb, f), f.evaluate(std::conj(beta), 0.0)));
  }
  Json params{{"truncation", truncation}, {"radius", 1.5}, {"trials", trials}};
  return {upper_bound_report("kernel_composition", composition, cfg.bound_or(1e-10), params),
          upper_bound_report("reproducing_property", reproducing, cfg.bound_or(1e-10), params)};
}

/// ⟨Uψ|Uχ⟩ = ⟨ψ|χ⟩ exactly for states supported on levels ≤ max_level.
inline CheckReport check_bargmann_unitarity(const VerifyConfig& cfg, unsigned max_level = 10, int trials = 10) {
  Sampler s(cfg.seed + 31);
  std::size_t failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<GaussianRational> psi(max_level + 1), chi(max_level + 1);
    GaussianRational expected;
    for (unsigned n = 0; n <= max_level; ++n) {
      psi[n] = s.gaussian();
      chi[n] = s.gaussian();
      expected += psi[n].conj() * chi[n];
    }
    RadicalNumber ip = inner_product(bargmann_map(psi), bargmann_map(chi));
    if (!ip.is_rational() || ip.rational_value() != expected) ++failures;
  }
  return detail::exact_report("bargmann_unitarity", failures, std::size_t(trials), {{"max_level", max_level}});
}

inline std::vector<CheckReport> complex_wave_suite(const VerifyConfig& cfg) {
  std::vector<CheckReport> out{check_projection_exact(), check_projection_quadrature(cfg)};
  for (auto& r : check_wave_operators(cfg)) out.push_back(std::move(r));
  out.push_back(check_quadrature_decomposition());
  for (auto& r : check_rkhs(cfg)) out.push_back(std::move(r));
  out.push_back(check_bargmann_unitarity(cfg));
  return out;
}

// Truncated Fock space.

/// Quadrature matrix of every monomial with n + m ≤ max_degree against the
/// symbolic anti-Wick matrix on the safe block.
inline CheckReport check_anti_wick_integral(const VerifyConfig& cfg, unsigned max_degree = 4) {
  const int dim = cfg.dim_or(20);
  QuadratureGrid g = QuadratureGrid::gaussian(cfg.gh_order);
  double worst = 0.0;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned n = 0; n <= d; ++n) {
      PolyFunction f = PolyFunction::monomial(n, d - n);
      FockMatrix q = anti_wick_integral(f, g, dim);
      worst = std::max(worst, safe_max_diff(q.entries, eval_poly(anti_wick_direct(f, cfg.limits), {dim}).entries, {dim}, int(d)));
    }
  return upper_bound_report("anti_wick_integral", worst, cfg.bound_or(1e-6),
                            {{"dim", dim}, {"gh_order", cfg.gh_order}, {"max_degree", max_degree}});
}

/// Coherent matrix elements of a quantized symbol against f(α*, β). The
/// identity is tested for anti-Wick order and, as diagnostics, for Wick
/// order and for the normal symbol of the anti-Wick operator.
inline std::vector<CheckReport> check_coherent_identity(const VerifyConfig& cfg, int symbols = 10, int points = 20) {
  const int dim = cfg.dim_or(40);
  Sampler s(cfg.seed + 37);
  double anti = 0.0, wick = 0.0, normal = 0.0;
  for (int t = 0; t < symbols; ++t) {
    PolyFunction f = s.symbol(4);
    OperatorPoly aw = anti_wick_direct(f, cfg.limits);
    OperatorPoly nw = wick_quantize(f);
    PolyFunction sym = normal_symbol(aw);
    for (int p = 0; p < points; ++p) {
      auto alpha = s.point(1.5), beta = s.point(1.5);
      auto expected = f.evaluate(std::conj(alpha), beta);
      anti = std::max(anti, detail::relative(coherent_ratio(aw, alpha, beta, dim), expected));
      wick = std::max(wick, detail::relative(coherent_ratio(nw, alpha, beta, dim), expected));
      normal = std::max(normal, detail::relative(coherent_ratio(aw, alpha, beta, dim), sym.evaluate(std::conj(alpha), beta)));
    }
  }
  Json params{{"dim", dim}, {"symbols", symbols}, {"points", points}, {"radius", 1.5}};
  const double bound = cfg.bound_or(1e-8);
  return {upper_bound_report("coherent_identity_antiwick", anti, bound, params),
          upper_bound_report("coherent_identity_wick", wick, bound, params),
          upper_bound_report("coherent_normal_symbol_antiwick", normal, bound, params)};
}

/// antiwick = e^{−|β|²/2}·weyl and wick = e^{|β|²/2}·weyl for displacement
/// matrices on their common safe block.
inline CheckReport check_displacement_cohen(const VerifyConfig& cfg, int trials = 10) {
  const int dim = cfg.dim_or(40);
  Sampler s(cfg.seed + 41);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto beta = s.point(1.0);
    FockMatrix w = displacement_matrix(beta, QuantizationRule::weyl, dim);
    for (auto rule : {QuantizationRule::antiwick, QuantizationRule::wick}) {
      FockMatrix m = displacement_matrix(beta, rule, dim);
      double factor = std::exp(to_double(cohen_exponent(rule)) * std::norm(beta));
      worst = std::max(worst, safe_max_diff(m.entries, factor * w.entries, {dim}, std::max(w.safe_degree, m.safe_degree)));
    }
  }
  return upper_bound_report("displacement_cohen", worst, cfg.bound_or(1e-10), {{"dim", dim}, {"trials", trials}, {"radius", 1.0}});
}

/// Smallest safe-block eigenvalue of 𝒜(|g|²) over random g of degree ≤ 2.
inline CheckReport check_positivity(const VerifyConfig& cfg, int trials = 20) {
  const int dim = cfg.dim_or(40);
  Sampler s(cfg.seed + 43);
  double lowest = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    PolyFunction g = s.symbol(2, 3);
    lowest = std::min(lowest, positivity_check(g.conjugate() * g, dim));
  }
  return lower_bound_report("positivity", lowest, -cfg.bound_or(1e-8), {{"dim", dim}, {"trials", trials}});
}

inline std::vector<CheckReport> fock_suite(const VerifyConfig& cfg) {
  std::vector<CheckReport> out{check_anti_wick_integral(cfg)};
  for (auto& r : check_coherent_identity(cfg)) out.push_back(std::move(r));
  out.push_back(check_displacement_cohen(cfg));
  out.push_back(check_positivity(cfg));
  return out;
}

// Fields over a finite one-particle space.

/// Every word shape with 1 ≤ n + m ≤ max_word, random vectors in ℂ^d.
inline CheckReport check_anti_wick_fields(const VerifyConfig& cfg, unsigned d = 2, int cutoff = 4, unsigned max_word = 3) {
  Sampler s(cfg.seed + 47);
  double worst = 0.0;
  Json shapes = Json::array();
  for (unsigned n = 0; n <= max_word; ++n)
    for (unsigned m = 0; n + m <= max_word; ++m) {
      if (n + m == 0) continue;
      std::vector<OneParticleVector> phis, psis;
      for (unsigned j = 0; j < n; ++j) phis.push_back(s.vector(d));
      for (unsigned k = 0; k < m; ++k) psis.push_back(s.vector(d));
      worst = std::max(worst, anti_wick_fields_check(phis, psis, cutoff).observed);
      shapes.push_back({n, m});
    }
  return detail::field_report("anti_wick_fields", int(d), cutoff, {{"shapes", shapes}}, worst, cfg.bound_or(1e-9));
}

inline CheckReport check_z_commutativity(const VerifyConfig& cfg, unsigned d = 2, int cutoff = 4, int trials = 10) {
  Sampler s(cfg.seed + 53);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) worst = std::max(worst, z_commutativity_check(s.vector(d), s.vector(d), cutoff).observed);
  return detail::field_report("z_commutativity", int(d), cutoff, {{"trials", trials}}, worst, cfg.bound_or(1e-12));
}

/// Factor property as matrices plus the exact split of the Cohen exponent.
inline CheckReport check_factor_matrices(const VerifyConfig& cfg, int cutoff = 8, int trials = 10) {
  Sampler s(cfg.seed + 59);
  double worst = 0.0;
  std::size_t exact_failures = 0;
  for (int t = 0; t < trials; ++t) {
    CohenReport r = cohen_factorization_check(s.symbol(3), s.symbol(3), cutoff, s.vector(2), s.vector(3));
    worst = std::max(worst, r.matrix_residual);
    exact_failures += !r.symbolic + !r.exponents;
  }
  CheckReport r = upper_bound_report("factor_property_matrices", worst, cfg.bound_or(1e-10),
                                     {{"cutoff", cutoff}, {"trials", trials}, {"exact_failures", exact_failures}});
  r.pass = r.pass && exact_failures == 0;
  return r;
}

/// 2×2 blocks [conj(g_i) g_j] quantize to a positive block operator.
inline CheckReport check_cp_block(const VerifyConfig& cfg, int trials = 10) {
  const int dim = cfg.dim_or(40);
  Sampler s(cfg.seed + 61);
  double lowest = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    PolyFunction g = s.symbol(2, 3), h = s.symbol(2, 3);
    std::array<std::array<PolyFunction, 2>, 2> b{
        {{g.conjugate() * g, g.conjugate() * h}, {h.conjugate() * g, h.conjugate() * h}}};
    lowest = std::min(lowest, cp_block_check(b, dim));
  }
  return lower_bound_report("cp_block", lowest, -cfg.bound_or(1e-8), {{"dim", dim}, {"trials", trials}});
}

inline std::vector<CheckReport> fields_suite(const VerifyConfig& cfg) {
  return {check_anti_wick_fields(cfg), check_z_commutativity(cfg), check_factor_matrices(cfg), check_cp_block(cfg)};
}

// Fourier pair.

inline const std::vector<const char*>& fourier_symbols() {
  static const std::vector<const char*> s{"1", "z* z", "z*^2 - i z", "z*^3 z^2 + (2/3) z* z^3 - 5"};
  return s;
}

/// Double transform at random points, and the quadrature transform against
/// the closed form.
inline std::vector<CheckReport> fourier_suite(const VerifyConfig& cfg, int points = 20) {
  QuadratureGrid g = QuadratureGrid::gaussian(cfg.gh_order);
  Sampler s(cfg.seed + 67);
  std::vector<std::complex<double>> pts;
  for (int i = 0; i < points; ++i) pts.push_back(s.point(1.5));
  double inversion = 0.0, analytic = 0.0;
  for (const char* src : fourier_symbols()) {
    auto p = BivariatePoly<GaussianRational>::from_function(parse_function(src));
    GaussianRecord r = fourier_analytic(p);
    auto back = inverse_fourier_transform(r, g, pts);
    auto num = fourier_transform(p, g, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      inversion = std::max(inversion, std::abs(back[i] - p.at(pts[i])));
      analytic = std::max(analytic, std::abs(num[i] - r.evaluate(pts[i])));
    }
  }
  Json params{{"points", points}, {"gh_order", cfg.gh_order}, {"symbols", fourier_symbols()}};
  return {upper_bound_report("fourier_inversion", inversion, cfg.bound_or(1e-6), params),
          upper_bound_report("fourier_analytic_quadrature", analytic, cfg.bound_or(1e-8), params)};
}

/// Runs one suite by name, or all of them for "all".
inline std::vector<CheckReport> run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "symbolic") return symbolic_suite(cfg);
  if (name == "complex-wave") return complex_wave_suite(cfg);
  if (name == "fock") return fock_suite(cfg);
  if (name == "fields") return fields_suite(cfg);
  if (name == "fourier") return fourier_suite(cfg);
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& s : suite_names())
      for (auto& r : run_suite(s, cfg)) out.push_back(std::move(r));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace bosonorder
