#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "operator_poly.hpp"
#include "poly_function.hpp"
#include "quadrature.hpp"
#include "quantization.hpp"

namespace bosonorder {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<int>;

inline int total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

/// Flat indices of basis states whose every mode occupation is at most
/// dims[m] − 1 − degree. Mode 0 is the most significant digit.
inline std::vector<int> safe_indices(const Dims& dims, int degree) {
  std::vector<int> keep;
  const int total = total_dimension(dims);
  for (int i = 0; i < total; ++i) {
    int rest = i;
    bool ok = true;
    for (int m = int(dims.size()) - 1; m >= 0; --m) {
      if (rest % dims[m] > dims[m] - 1 - degree) ok = false;
      rest /= dims[m];
    }
    if (ok) keep.push_back(i);
  }
  return keep;
}

inline Matrix restrict(const Matrix& x, const std::vector<int>& idx) {
  Matrix r(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = x(idx[i], idx[j]);
  return r;
}

/// Largest entry modulus of x − y on the safe block.
inline double safe_max_diff(const Matrix& x, const Matrix& y, const Dims& dims, int degree) {
  auto idx = safe_indices(dims, degree);
  double worst = 0;
  for (int i : idx)
    for (int j : idx) worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
  return worst;
}

/// A truncated Fock-space matrix. Entries whose mode indices all lie at or
/// below dim − 1 − safe_degree agree with the untruncated operator.
struct FockMatrix {
  Matrix entries;
  Dims dims;
  int safe_degree = 0;

  int dimension() const { return int(entries.rows()); }
  std::vector<int> safe() const { return safe_indices(dims, safe_degree); }
  Matrix safe_block() const { return restrict(entries, safe()); }
};

struct FockVector {
  Vector entries;
  Dims dims;
};

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) r.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return r;
}

inline Vector kron(const Vector& x, const Vector& y) {
  Vector r(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) r.segment(i * y.size(), y.size()) = x(i) * y;
  return r;
}

inline Matrix annihilation_matrix(int dim) {
  if (dim < 2) throw DimensionError("ladder dimension must be at least 2, got " + std::to_string(dim));
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

/// (a, a†) on span{e_0, …, e_{dim−1}}.
inline std::pair<FockMatrix, FockMatrix> ladder(int dim) {
  Matrix a = annihilation_matrix(dim);
  return {FockMatrix{a, {dim}, 1}, FockMatrix{a.adjoint(), {dim}, 1}};
}

/// Places a single-mode matrix on `mode` of the tensor product.
inline Matrix embed(const Matrix& local, unsigned mode, const Dims& dims) {
  Matrix r = Matrix::Identity(1, 1);
  for (unsigned m = 0; m < dims.size(); ++m) r = kron(r, m == mode ? local : Matrix(Matrix::Identity(dims[m], dims[m])));
  return r;
}

/// Substitutes truncated ladder matrices into a normal-ordered polynomial.
/// Each monomial Π (a_m†)^j a_m^k is exact in every entry; the safe degree
/// records the polynomial degree so products of evaluations can be compared.
inline FockMatrix eval_poly(const OperatorPoly& p, const Dims& dims) {
  if (p.mode_count() != dims.size())
    throw DimensionError("polynomial has " + std::to_string(p.mode_count()) + " modes but " +
                         std::to_string(dims.size()) + " dimensions were given");
  std::vector<Matrix> a(dims.size());
  for (unsigned m = 0; m < dims.size(); ++m) a[m] = annihilation_matrix(dims[m]);
  std::map<std::array<unsigned, 3>, Matrix> cache;
  auto local = [&](unsigned m, unsigned j, unsigned k) -> const Matrix& {
    auto [it, inserted] = cache.try_emplace({m, j, k});
    if (inserted) {
      Matrix r = Matrix::Identity(dims[m], dims[m]);
      Matrix ad = a[m].adjoint();
      for (unsigned t = 0; t < j; ++t) r = r * ad;
      for (unsigned t = 0; t < k; ++t) r = r * a[m];
      it->second = std::move(r);
    }
    return it->second;
  };
  const int total = total_dimension(dims);
  Matrix out = Matrix::Zero(total, total);
  for (const auto& [mono, c] : p.terms()) {
    Matrix t = Matrix::Identity(1, 1);
    for (unsigned m = 0; m < dims.size(); ++m) {
      const ModePower mp = mono.at(m);
      t = kron(t, local(m, mp.create, mp.annihilate));
    }
    out += c.to_complex() * t;
  }
  return {out, dims, int(p.degree())};
}

/// Σ_{n ≥ dim} |β|^{2n}/n!, the squared norm discarded by truncation.
inline double exponential_tail(double r2, int dim) {
  double term = std::exp(dim * std::log(std::max(r2, 1e-300)) - std::lgamma(dim + 1.0));
  if (r2 == 0) return 0;
  double sum = 0;
  for (int n = dim; n < dim + 2000 && term > 1e-300; ++n) {
    sum += term;
    term *= r2 / (n + 1);
  }
  return sum;
}

/// Components β^n/√n! for n < dim, without the tail check.
inline Vector exponential_components(std::complex<double> beta, int dim) {
  Vector v(dim);
  std::complex<double> c = 1.0;
  for (int n = 0; n < dim; ++n) {
    v(n) = c;
    c *= beta / std::sqrt(double(n + 1));
  }
  return v;
}

/// |exp(β)⟩ = Σ β^n/√n! |e_n⟩ truncated to dim levels; throws
/// TruncationError when the discarded mass exceeds 1e−12.
inline FockVector exponential_vector(std::complex<double> beta, int dim) {
  double tail = exponential_tail(std::norm(beta), dim);
  if (tail > 1e-12) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "exponential vector tail %.3g exceeds 1e-12 at |beta| = %.4g, dim %d", tail,
                  std::abs(beta), dim);
    throw TruncationError(buf);
  }
  return {exponential_components(beta, dim), {dim}};
}

/// ⟨exp(α)|X|exp(β)⟩ / ⟨exp(α)|exp(β)⟩ for a single-mode operator.
inline std::complex<double> coherent_ratio(const OperatorPoly& x, std::complex<double> alpha,
                                           std::complex<double> beta, int dim) {
  Matrix m = eval_poly(x, {dim}).entries;
  Vector ea = exponential_vector(alpha, dim).entries, eb = exponential_vector(beta, dim).entries;
  return ea.dot(m * eb) / ea.dot(eb);
}

/// The same ratio for X = 𝒜(f). It equals the normal symbol of 𝒜(f) at
/// (α*, β), which differs from f(α*, β) by the contractions
/// Σ_{i≥1} C(j,i) C(k,i) i! (α*)^{j−i} β^{k−i}; only X = 𝒩(f) reproduces f.
inline std::complex<double> coherent_ratio(const PolyFunction& f, std::complex<double> alpha,
                                           std::complex<double> beta, int dim) {
  return coherent_ratio(anti_wick_direct(f), alpha, beta, dim);
}

/// 𝒜(f) = ∫ f(α*, α) |exp(α)⟩⟨exp(α)| ℙ[dα] as a quadrature sum. Entries
/// ⟨e_m|·|e_n⟩ are polynomial integrals, so no tail check applies.
inline FockMatrix anti_wick_integral(const PolyFunction& f, const QuadratureGrid& grid, int dim) {
  if (f.variable_count() != 1) throw DimensionError("anti_wick_integral expects a single-variable symbol");
  if (dim < 2) throw DimensionError("dimension must be at least 2");
  grid.require_order(f.degree(), 16);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::complex<double> weight = grid.weights[i] * f.at(grid.nodes[i]);
    if (weight == 0.0) continue;
    Vector v = exponential_components(grid.nodes[i], dim);
    out.noalias() += weight * v * v.adjoint();
  }
  return {out, {dim}, int(f.degree())};
}

/// Smallest eigenvalue of 𝒜(f) on the safe block; f must be real-valued.
inline double positivity_check(const PolyFunction& f, int dim) {
  if (!f.is_real_symbol()) throw SymbolError("positivity check needs a real-valued symbol (f_jk = conj f_kj)");
  FockMatrix m = eval_poly(anti_wick_direct(f), {dim});
  Matrix block = m.safe_block();
  Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// e^X by scaling and squaring with a Taylor series truncated once the next
/// term is below 1e−12 relative to the partial sum.
inline Matrix expm(const Matrix& x) {
  double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  Matrix scaled = x / std::ldexp(1.0, squarings);
  Matrix sum = Matrix::Identity(x.rows(), x.cols());
  Matrix term = sum;
  for (int k = 1; k < 60; ++k) {
    term = term * scaled / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-17 * std::max(1.0, sum.cwiseAbs().maxCoeff())) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Largest index s such that every product ⟨e_m|e^{−β*a}|e_k⟩⟨e_k|e^{βa†}|e_n⟩
/// with m, n ≤ s summed over the discarded levels k ≥ dim stays below tol.
inline int displacement_safe_index(double r, int dim, double tol = 1e-12) {
  if (r == 0) return dim - 1;
  auto log_term = [&](int m, int n, int k) {
    return (2.0 * k - m - n) * std::log(r) + std::lgamma(k + 1.0) - std::lgamma(k - m + 1.0) -
           std::lgamma(k - n + 1.0) - 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
  };
  auto tail = [&](int m, int n) {
    double sum = 0;
    for (int k = dim; k < dim + 4000; ++k) {
      double t = std::exp(log_term(m, n, k));
      sum += t;
      if (k > dim + 10 && t < 1e-30 * std::max(sum, 1e-300)) break;
    }
    return sum;
  };
  int s = -1;
  for (int c = 0; c < dim; ++c) {
    double worst = 0;
    for (int m = 0; m <= c; ++m) worst = std::max(worst, tail(m, c));
    if (worst > tol) break;
    s = c;
  }
  return s;
}

/// Truncated displacement-type operator for the chosen ordering:
///   weyl      e^{βa† − β*a}
///   wick      e^{βa†} e^{−β*a}
///   antiwick  e^{−β*a} e^{βa†}
/// The safe degree leaves indices ≤ displacement_safe_index(|β|, dim).
inline FockMatrix displacement_matrix(std::complex<double> beta, QuantizationRule rule, int dim) {
  Matrix a = annihilation_matrix(dim);
  Matrix ad = a.adjoint();
  Matrix out;
  switch (rule) {
    case QuantizationRule::weyl: out = expm(beta * ad - std::conj(beta) * a); break;
    case QuantizationRule::wick: out = expm(beta * ad) * expm(-std::conj(beta) * a); break;
    case QuantizationRule::antiwick: out = expm(-std::conj(beta) * a) * expm(beta * ad); break;
  }
  int s = displacement_safe_index(std::abs(beta), dim);
  if (s < 0) throw TruncationError("no displacement matrix entry is reliable at dim " + std::to_string(dim));
  return {out, {dim}, dim - 1 - s};
}

/// ⟨Ω|e^{iuQ}|Ω⟩ with Q = A(φ) + A*(φ); only ‖φ‖ matters, so a single mode
/// carries the field.
inline std::complex<double> vacuum_characteristic(double phi_norm, double u, int dim) {
  if (std::abs(u) * phi_norm > 2.0) throw TruncationError("vacuum characteristic requires |u|·‖φ‖ ≤ 2");
  Matrix a = annihilation_matrix(dim);
  Matrix q = phi_norm * (a + Matrix(a.adjoint()));
  // Level dim is reached only at order dim of the series, weight ≲ 4^dim/dim!.
  Matrix e = expm(std::complex<double>(0, u) * q);
  return e(0, 0);
}

}  // namespace bosonorder
