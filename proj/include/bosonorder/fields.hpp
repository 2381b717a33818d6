#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "fock.hpp"
#include "operator_poly.hpp"
#include "quantization.hpp"
#include "report.hpp"

namespace bosonorder {

/// Test function in 𝔥 ≅ ℂ^d with exact components.
using OneParticleVector = std::vector<GaussianRational>;

/// J: componentwise complex conjugation.
inline OneParticleVector conjugation(const OneParticleVector& phi) {
  OneParticleVector r;
  r.reserve(phi.size());
  for (const auto& c : phi) r.push_back(c.conj());
  return r;
}

/// ⟨φ|ψ⟩ = Σ φ_i* ψ_i.
inline GaussianRational inner(const OneParticleVector& phi, const OneParticleVector& psi) {
  if (phi.size() != psi.size()) throw DimensionError("one-particle vectors differ in dimension");
  GaussianRational s;
  for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i].conj() * psi[i];
  return s;
}

inline OneParticleVector basis_vector(unsigned d, unsigned i) {
  OneParticleVector v(d);
  v.at(i) = GaussianRational(1);
  return v;
}

inline OneParticleVector direct_sum(const OneParticleVector& x, const OneParticleVector& y) {
  OneParticleVector r = x;
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

/// Largest total dimension of a truncated multimode space.
inline constexpr long field_budget = 65536;

inline long checked_dimension(int modes, int cutoff) {
  if (modes < 1) throw DimensionError("at least one mode is required");
  if (cutoff < 2) throw DimensionError("cutoff must be at least 2");
  long total = 1;
  for (int m = 0; m < modes; ++m) {
    total *= cutoff;
    if (total > field_budget)
      throw BudgetError("truncated space " + std::to_string(cutoff) + "^" + std::to_string(modes) +
                        " exceeds the budget of " + std::to_string(field_budget));
  }
  return total;
}

enum class FieldKind { A, A_star, B, B_star };

/// Symbolic field on d modes: A(φ) = Σ φ_i* a_i, A*(φ) = Σ φ_i a_i†.
/// B-kinds have the same form on their own copy; `offset` shifts the modes.
inline OperatorPoly field_poly(FieldKind kind, const OneParticleVector& phi, unsigned mode_count, unsigned offset = 0) {
  OperatorPoly p(mode_count);
  const bool create = kind == FieldKind::A_star || kind == FieldKind::B_star;
  for (unsigned i = 0; i < phi.size(); ++i) {
    GaussianRational c = create ? phi[i] : phi[i].conj();
    p.add_term(NormalMonomial::single(offset + i, create ? 1 : 0, create ? 0 : 1), c);
  }
  return p;
}

/// Field operator on one truncated copy (d modes, uniform cutoff).
inline FockMatrix field(FieldKind kind, const OneParticleVector& phi, int cutoff) {
  const unsigned d = unsigned(phi.size());
  checked_dimension(int(d), cutoff);
  return eval_poly(field_poly(kind, phi, d), Dims(d, cutoff));
}

/// Field on the doubled space 𝔉_A ⊗ 𝔉_B, A-modes first.
inline FockMatrix doubled_field(FieldKind kind, const OneParticleVector& phi, int cutoff) {
  const unsigned d = unsigned(phi.size());
  checked_dimension(int(2 * d), cutoff);
  const bool is_b = kind == FieldKind::B || kind == FieldKind::B_star;
  return eval_poly(field_poly(kind, phi, 2 * d, is_b ? d : 0), Dims(2 * d, cutoff));
}

/// Z(φ) = A(φ) ⊗ I_B + I_A ⊗ B(Jφ)*, as a symbolic polynomial on 2d modes.
inline OperatorPoly z_poly(const OneParticleVector& phi) {
  const unsigned d = unsigned(phi.size());
  return field_poly(FieldKind::A, phi, 2 * d) + field_poly(FieldKind::B_star, conjugation(phi), 2 * d, d);
}

inline FockMatrix z_field(const OneParticleVector& phi, int cutoff) {
  const unsigned d = unsigned(phi.size());
  checked_dimension(int(2 * d), cutoff);
  return eval_poly(z_poly(phi), Dims(2 * d, cutoff));
}

/// Q(φ) = X(φ) + X(φ)* and P(φ) = (X(φ) − X(φ)*)/i for X ∈ {A on one copy, Z}.
inline Matrix quadrature_q(const Matrix& x) { return x + Matrix(x.adjoint()); }
inline Matrix quadrature_p(const Matrix& x) { return std::complex<double>(0, -1) * (x - Matrix(x.adjoint())); }

/// 𝓔_A: ⟨u|𝓔_A(X)|v⟩ = ⟨u ⊗ Ω_B|X|v ⊗ Ω_B⟩, an operator on 𝔉_A.
inline FockMatrix partial_vacuum_B(const FockMatrix& x) {
  if (x.dims.size() % 2) throw DimensionError("partial vacuum expectation needs a doubled space");
  const std::size_t d = x.dims.size() / 2;
  Dims a_dims(x.dims.begin(), x.dims.begin() + d);
  Dims b_dims(x.dims.begin() + d, x.dims.end());
  const int na = total_dimension(a_dims), nb = total_dimension(b_dims);
  Matrix r(na, na);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < na; ++v) r(u, v) = x.entries(u * nb, v * nb);
  return {r, a_dims, x.safe_degree};
}

/// 𝓔_B: contraction against Ω_A, an operator on 𝔉_B.
inline FockMatrix partial_vacuum_A(const FockMatrix& x) {
  if (x.dims.size() % 2) throw DimensionError("partial vacuum expectation needs a doubled space");
  const std::size_t d = x.dims.size() / 2;
  Dims b_dims(x.dims.begin() + d, x.dims.end());
  const int nb = total_dimension(b_dims);
  return {x.entries.topLeftCorner(nb, nb), b_dims, x.safe_degree};
}

namespace detail {

inline Json vectors_json(const std::vector<OneParticleVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back({to_double(c.re()), to_double(c.im())});
    arr.push_back(row);
  }
  return arr;
}

inline CheckReport field_report(std::string check, int d, int cutoff, Json params, double residual, double bound) {
  CheckReport r = upper_bound_report(std::move(check), residual, bound, std::move(params));
  r.d = d;
  r.cutoff = cutoff;
  return r;
}

}  // namespace detail

/// Compares 𝓔_A(Π_j Z(φ_j) Π_k Z(ψ_k)*) with the anti-Wick word
/// Π_j A(φ_j) Π_k A*(ψ_k), both as the literal truncated product and as the
/// canonical normal-ordered polynomial on the safe block; then checks that
/// every permutation of the commuting Z-word gives the same 𝓔_A image on the
/// safe block. The residual is the largest of the three comparisons.
inline CheckReport anti_wick_fields_check(const std::vector<OneParticleVector>& phis,
                                          const std::vector<OneParticleVector>& psis, int cutoff,
                                          double bound = 1e-9) {
  if (phis.empty() && psis.empty()) throw DimensionError("empty field word");
  const unsigned d = unsigned((phis.empty() ? psis : phis).front().size());
  const int modes = int(2 * d);
  checked_dimension(modes, cutoff);
  const Dims doubled(modes, cutoff), single(d, cutoff);
  const int degree = int(phis.size() + psis.size());

  // Z-word factors in their stated order.
  std::vector<Matrix> factors;
  for (const auto& phi : phis) factors.push_back(z_field(phi, cutoff).entries);
  for (const auto& psi : psis) factors.push_back(Matrix(z_field(psi, cutoff).entries.adjoint()));
  auto product = [&](const std::vector<int>& order) {
    Matrix m = Matrix::Identity(total_dimension(doubled), total_dimension(doubled));
    for (int i : order) m = m * factors[i];
    return m;
  };
  std::vector<int> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  FockMatrix reduced = partial_vacuum_B({product(order), doubled, degree});

  Matrix literal = Matrix::Identity(total_dimension(single), total_dimension(single));
  OperatorPoly symbolic = OperatorPoly::identity(d);
  for (const auto& phi : phis) {
    literal = literal * field(FieldKind::A, phi, cutoff).entries;
    symbolic = mul(symbolic, field_poly(FieldKind::A, phi, d));
  }
  for (const auto& psi : psis) {
    literal = literal * field(FieldKind::A_star, psi, cutoff).entries;
    symbolic = mul(symbolic, field_poly(FieldKind::A_star, psi, d));
  }
  double residual = (reduced.entries - literal).cwiseAbs().maxCoeff();
  residual = std::max(residual, safe_max_diff(reduced.entries, eval_poly(symbolic, single).entries, single, degree));

  std::vector<int> perm = order;
  while (std::next_permutation(perm.begin(), perm.end())) {
    Matrix other = partial_vacuum_B({product(perm), doubled, degree}).entries;
    residual = std::max(residual, safe_max_diff(other, reduced.entries, single, degree));
  }

  Json params;
  params["n"] = phis.size();
  params["m"] = psis.size();
  params["phis"] = detail::vectors_json(phis);
  params["psis"] = detail::vectors_json(psis);
  return detail::field_report("anti_wick_fields", int(d), cutoff, params, residual, bound);
}

/// Largest safe-block entry of [Z(φ), Z(ψ)] and [Z(φ), Z(ψ)*].
inline CheckReport z_commutativity_check(const OneParticleVector& phi, const OneParticleVector& psi, int cutoff,
                                         double bound = 1e-12) {
  const unsigned d = unsigned(phi.size());
  const Dims doubled(2 * d, cutoff);
  Matrix zp = z_field(phi, cutoff).entries, zq = z_field(psi, cutoff).entries;
  Matrix zq_star = zq.adjoint();
  const Matrix zero = Matrix::Zero(zp.rows(), zp.cols());
  double r = std::max(safe_max_diff(zp * zq - zq * zp, zero, doubled, 2),
                      safe_max_diff(zp * zq_star - zq_star * zp, zero, doubled, 2));
  Matrix qz = quadrature_q(zp), pz = quadrature_p(zq);
  r = std::max(r, safe_max_diff(qz * pz - pz * qz, zero, doubled, 2));
  Json params;
  params["phi"] = detail::vectors_json({phi})[0];
  params["psi"] = detail::vectors_json({psi})[0];
  return detail::field_report("z_commutativity", int(d), cutoff, params, r, bound);
}

/// ⟨exp(φ)|exp(ψ)⟩ with |exp(φ)⟩ = ⊗_i |exp(φ_i)⟩ on d truncated modes.
inline std::complex<double> exp_vector_overlap(const OneParticleVector& phi, const OneParticleVector& psi, int cutoff) {
  if (phi.size() != psi.size()) throw DimensionError("one-particle vectors differ in dimension");
  checked_dimension(int(phi.size()), cutoff);
  Vector x = Vector::Ones(1), y = Vector::Ones(1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    x = kron(x, exponential_vector(phi[i].to_complex(), cutoff).entries);
    y = kron(y, exponential_vector(psi[i].to_complex(), cutoff).entries);
  }
  return x.dot(y);
}

/// The factor property of anti-Wick quantization for two single-mode
/// symbols: symbolic equality, exact equality of the Cohen exponents
/// c‖φ₁ ⊕ φ₂‖² = c‖φ₁‖² + c‖φ₂‖², and the matrix tensor identity on the
/// safe block.
struct CohenReport {
  bool symbolic = false;
  bool exponents = false;
  Rational joint_exponent, split_exponent;
  double matrix_residual = 0.0;
  double bound = 1e-10;

  bool pass() const { return symbolic && exponents && matrix_residual <= bound; }
};

inline CohenReport cohen_factorization_check(const PolyFunction& f1, const PolyFunction& f2, int cutoff,
                                             const OneParticleVector& phi1 = {GaussianRational(1)},
                                             const OneParticleVector& phi2 = {GaussianRational(1)}) {
  if (f1.variable_count() != 1 || f2.variable_count() != 1)
    throw DimensionError("cohen_factorization_check expects single-mode symbols");
  checked_dimension(2, cutoff);
  CohenReport r;
  PolyFunction joint = f1.embedded(2, 0) * f2.embedded(2, 1);
  OperatorPoly together = anti_wick_multimode(joint);
  OperatorPoly split = tensor(anti_wick_direct(f1), anti_wick_direct(f2));
  r.symbolic = together == split;

  const Rational c = cohen_exponent(QuantizationRule::antiwick);
  auto norm2 = [](const OneParticleVector& v) { return inner(v, v).re(); };
  r.joint_exponent = c * norm2(direct_sum(phi1, phi2));
  r.split_exponent = c * norm2(phi1) + c * norm2(phi2);
  r.exponents = r.joint_exponent == r.split_exponent;

  const Dims dims{cutoff, cutoff};
  Matrix m_joint = eval_poly(together, dims).entries;
  Matrix m_split = kron(eval_poly(anti_wick_direct(f1), {cutoff}).entries, eval_poly(anti_wick_direct(f2), {cutoff}).entries);
  r.matrix_residual = safe_max_diff(m_joint, m_split, dims, int(joint.degree()));
  return r;
}

/// Smallest eigenvalue of the block operator [𝒜(f_ij)] restricted to the
/// safe block of each entry. The symbol matrix must be Hermitian.
inline double cp_block_check(const std::array<std::array<PolyFunction, 2>, 2>& symbols, int dim) {
  int degree = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (symbols[i][j].variable_count() != 1) throw DimensionError("cp_block_check expects single-mode symbols");
      if (!(symbols[i][j].conjugate() == symbols[j][i]))
        throw SymbolError("symbol matrix is not Hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      degree = std::max(degree, int(symbols[i][j].degree()));
    }
  const auto idx = safe_indices({dim}, degree);
  const int s = int(idx.size());
  if (s == 0) throw TruncationError("no safe block at dim " + std::to_string(dim));
  Matrix block(2 * s, 2 * s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      block.block(i * s, j * s, s, s) = restrict(eval_poly(anti_wick_direct(symbols[i][j]), {dim}).entries, idx);
  Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace bosonorder
