#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bosonorder {

/// Gauss–Hermite nodes and weights for ∫ g(t) e^{−t²} dt, n points.
/// Newton iteration on the orthonormal Hermite recurrence, which keeps the
/// tail weights accurate to full relative precision.
inline std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n) {
  if (n < 1) throw QuadratureOrderError("Gauss-Hermite order must be positive");
  constexpr double pim4 = 0.7511255444649425;  // π^{-1/4}
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(double(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];
    double pp = 0.0;
    int it = 0;
    for (; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 3e-14 * std::max(1.0, std::abs(z))) break;
    }
    if (it == 100) throw QuadratureOrderError("Gauss-Hermite Newton iteration did not converge");
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
  }
  return {x, w};
}

/// Tensor Gauss–Hermite rule for the Gaussian probability measure
/// e^{−|α|²} d²α/π on ℂ. With α = (x + iy)/√2 and per-axis weight
/// e^{−x²/2}dx/√(2π), each axis uses x = √2·t_i with weight w_i/√π, so the
/// complex nodes are α = t_a + i·t_b. Polynomials in (α*, α) of degree
/// below 2·order per axis are integrated exactly.
struct QuadratureGrid {
  std::vector<std::complex<double>> nodes;
  std::vector<double> weights;
  int order = 0;

  static QuadratureGrid gaussian(int order = 64) {
    auto [t, w] = gauss_hermite(order);
    QuadratureGrid g;
    g.order = order;
    g.nodes.reserve(std::size_t(order) * order);
    g.weights.reserve(std::size_t(order) * order);
    const double inv_pi = 1.0 / std::numbers::pi;
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        g.nodes.emplace_back(t[a], t[b]);
        g.weights.push_back(w[a] * w[b] * inv_pi);
      }
    }
    return g;
  }

  std::size_t size() const { return nodes.size(); }

  /// Σ_i w_i g(α_i).
  template <class F>
  auto integrate(F&& g) const {
    using R = decltype(g(nodes[0]));
    R sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
    return sum;
  }

  /// Throws unless the rule is exact for total polynomial degree `degree`
  /// in (α*, α) plus `margin`.
  void require_order(unsigned degree, unsigned margin) const {
    if (unsigned(order) < 2 * degree + margin)
      throw QuadratureOrderError("quadrature order " + std::to_string(order) + " below required " +
                                 std::to_string(2 * degree + margin));
  }
};

}  // namespace bosonorder
