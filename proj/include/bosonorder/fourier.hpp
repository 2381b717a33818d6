#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bivariate_poly.hpp"
#include "quadrature.hpp"

namespace bosonorder {

/// ϖ(α, β) = e^{α*β − β*α}, unimodular.
inline std::complex<double> varpi(std::complex<double> alpha, std::complex<double> beta) {
  return std::exp(std::conj(alpha) * beta - std::conj(beta) * alpha);
}

/// A function of the form poly(α*, α)·e^{c|α|²}.
struct GaussianRecord {
  BivariatePoly<GaussianRational> poly;
  int exponent = -1;

  std::complex<double> evaluate(std::complex<double> alpha) const {
    return poly.at(alpha) * std::exp(exponent * std::norm(alpha));
  }
};

inline std::string to_text(const GaussianRecord& r) {
  std::string e = r.exponent == -1 ? "-" : std::to_string(r.exponent) + " ";
  return "(" + to_text(r.poly) + ") exp(" + e + "z* z)";
}

/// Closed form of f̃(α) = ∫ f(β*, β) ϖ(α, β) ℙ[dβ] for polynomial f.
/// From ∫ e^{uβ* + vβ} ℙ[dβ] = e^{uv} at u = −α, v = α*, the monomial
/// (β*)^j β^k maps to e^{−|α|²} Σ_i C(j,i) C(k,i) i! (α*)^{j−i} (−α)^{k−i}.
inline GaussianRecord fourier_analytic(const BivariatePoly<GaussianRational>& f) {
  GaussianRecord out;
  for (const auto& [e, c] : f.terms()) {
    for (unsigned i = 0; i <= std::min(e.conj, e.plain); ++i) {
      Integer w = binomial(e.conj, i) * binomial(e.plain, i) * factorial(i);
      if ((e.plain - i) % 2) w = -w;
      out.poly.add_term({e.conj - i, e.plain - i}, c * GaussianRational(Rational(w)));
    }
  }
  return out;
}

/// f̃ sampled at `points` by quadrature. The grid must satisfy
/// order ≥ 2·deg(f) + 8.
template <Scalar T>
std::vector<std::complex<double>> fourier_transform(const BivariatePoly<T>& f, const QuadratureGrid& grid,
                                                    const std::vector<std::complex<double>>& points) {
  grid.require_order(f.degree(), 8);
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f.at(grid.nodes[i]);
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (auto alpha : points) {
    std::complex<double> sum{};
    for (std::size_t i = 0; i < grid.size(); ++i) sum += grid.weights[i] * values[i] * varpi(alpha, grid.nodes[i]);
    out.push_back(sum);
  }
  return out;
}

/// Inverse of fourier_analytic by quadrature. ϖ is an involutive kernel for
/// the flat measure d²β/π, so with f̃ = p·e^{−|β|²},
///   f(α) = e^{|α|²} ∫ p(β*, β) ϖ(α, β) ℙ[dβ].
inline std::vector<std::complex<double>> inverse_fourier_transform(const GaussianRecord& r, const QuadratureGrid& grid,
                                                                   const std::vector<std::complex<double>>& points) {
  if (r.exponent != -1) throw NotRepresentable("inverse transform expects a record with exponent -1");
  auto raw = fourier_transform(r.poly, grid, points);
  for (std::size_t i = 0; i < points.size(); ++i) raw[i] *= std::exp(std::norm(points[i]));
  return raw;
}

}  // namespace bosonorder
