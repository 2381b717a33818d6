#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bivariate_poly.hpp"
#include "radical.hpp"
#include "rational.hpp"

namespace bosonorder {

/// ∫ (α*)^n α^m ℙ[dα] = δ_{nm} n!.
inline Integer gaussian_moment(unsigned n, unsigned m) { return n == m ? factorial(n) : Integer(0); }

/// ⟨f|g⟩ = ∫ f* g ℙ[dα], evaluated exactly through the moments.
template <Scalar T>
T inner_product(const BivariatePoly<T>& f, const BivariatePoly<T>& g) {
  T sum{};
  for (const auto& [ef, cf] : f.terms()) {
    T cfc = conj(cf);
    for (const auto& [eg, cg] : g.terms()) {
      // conj((α*)^j α^k) (α*)^j' α^k' = (α*)^{k+j'} α^{j+k'}
      unsigned n = ef.plain + eg.conj, m = ef.conj + eg.plain;
      if (n != m) continue;
      sum += cfc * cg * from_integer<T>(factorial(n));
    }
  }
  return sum;
}

/// Orthogonal projection onto the anti-holomorphic subspace:
/// (α*)^n α^m ↦ n!/(n−m)! (α*)^{n−m} for n ≥ m, and 0 otherwise.
template <Scalar T>
BivariatePoly<T> project_antiholomorphic(const BivariatePoly<T>& f) {
  BivariatePoly<T> out;
  for (const auto& [e, c] : f.terms()) {
    if (e.conj < e.plain) continue;
    out.add_term({e.conj - e.plain, 0}, c * from_integer<T>(factorial(e.conj) / factorial(e.conj - e.plain)));
  }
  return out;
}

/// Operators of the complex-wave representation:
///   A = ∂/∂α*,  A* = α* − ∂/∂α,  B = ∂/∂α,  B* = α − ∂/∂α*,
///   C = A + B*, C* = A* + B.
enum class WaveOp { A, A_star, B, B_star, C, C_star };

inline std::string to_string(WaveOp op) {
  switch (op) {
    case WaveOp::A: return "A";
    case WaveOp::A_star: return "A*";
    case WaveOp::B: return "B";
    case WaveOp::B_star: return "B*";
    case WaveOp::C: return "C";
    case WaveOp::C_star: return "C*";
  }
  return "?";
}

namespace wave {

template <Scalar T>
BivariatePoly<T> d_conj(const BivariatePoly<T>& f) {
  BivariatePoly<T> out;
  for (const auto& [e, c] : f.terms())
    if (e.conj) out.add_term({e.conj - 1, e.plain}, c * from_integer<T>(e.conj));
  return out;
}

template <Scalar T>
BivariatePoly<T> d_plain(const BivariatePoly<T>& f) {
  BivariatePoly<T> out;
  for (const auto& [e, c] : f.terms())
    if (e.plain) out.add_term({e.conj, e.plain - 1}, c * from_integer<T>(e.plain));
  return out;
}

template <Scalar T>
BivariatePoly<T> times_conj(const BivariatePoly<T>& f) {
  BivariatePoly<T> out;
  for (const auto& [e, c] : f.terms()) out.add_term({e.conj + 1, e.plain}, c);
  return out;
}

template <Scalar T>
BivariatePoly<T> times_plain(const BivariatePoly<T>& f) {
  BivariatePoly<T> out;
  for (const auto& [e, c] : f.terms()) out.add_term({e.conj, e.plain + 1}, c);
  return out;
}

}  // namespace wave

template <Scalar T>
BivariatePoly<T> apply_op(WaveOp op, const BivariatePoly<T>& f) {
  using namespace wave;
  switch (op) {
    case WaveOp::A: return d_conj(f);
    case WaveOp::A_star: return times_conj(f) - d_plain(f);
    case WaveOp::B: return d_plain(f);
    case WaveOp::B_star: return times_plain(f) - d_conj(f);
    case WaveOp::C: return apply_op(WaveOp::A, f) + apply_op(WaveOp::B_star, f);
    case WaveOp::C_star: return apply_op(WaveOp::A_star, f) + apply_op(WaveOp::B, f);
  }
  return {};
}

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

/// Exact checks of the commutation relations, of C and C* acting as
/// multiplication, and of the adjoint pairs (A, A*) and (B, B*) with
/// respect to the Gaussian inner product, on caller-supplied polynomials.
struct CcrReport {
  std::vector<IdentityCheck> checks;
  GaussianRational adjoint_lhs_a, adjoint_rhs_a;  // ⟨A f|g⟩, ⟨f|A* g⟩
  GaussianRational adjoint_lhs_b, adjoint_rhs_b;  // ⟨B f|g⟩, ⟨f|B* g⟩

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline CcrReport ccr_check(const BivariatePoly<GaussianRational>& f, const BivariatePoly<GaussianRational>& g) {
  CcrReport r;
  auto comm = [&](WaveOp x, WaveOp y) { return apply_op(x, apply_op(y, f)) - apply_op(y, apply_op(x, f)); };
  auto add = [&](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };
  add("[A,A*] = I", comm(WaveOp::A, WaveOp::A_star) == f);
  add("[B,B*] = I", comm(WaveOp::B, WaveOp::B_star) == f);
  const WaveOp as[] = {WaveOp::A, WaveOp::A_star};
  const WaveOp bs[] = {WaveOp::B, WaveOp::B_star};
  for (WaveOp x : as)
    for (WaveOp y : bs) add("[" + to_string(x) + "," + to_string(y) + "] = 0", comm(x, y).is_zero());
  add("[C,C*] = 0", comm(WaveOp::C, WaveOp::C_star).is_zero());
  add("C = multiplication by z", apply_op(WaveOp::C, f) == wave::times_plain(f));
  add("C* = multiplication by z*", apply_op(WaveOp::C_star, f) == wave::times_conj(f));
  r.adjoint_lhs_a = inner_product(apply_op(WaveOp::A, f), g);
  r.adjoint_rhs_a = inner_product(f, apply_op(WaveOp::A_star, g));
  r.adjoint_lhs_b = inner_product(apply_op(WaveOp::B, f), g);
  r.adjoint_rhs_b = inner_product(f, apply_op(WaveOp::B_star, g));
  add("<Af|g> = <f|A*g>", r.adjoint_lhs_a == r.adjoint_rhs_a);
  add("<Bf|g> = <f|B*g>", r.adjoint_lhs_b == r.adjoint_rhs_b);
  add("<A*f|g> = <f|Ag>", inner_product(apply_op(WaveOp::A_star, f), g) == inner_product(f, apply_op(WaveOp::A, g)));
  add("<B*f|g> = <f|Bg>", inner_product(apply_op(WaveOp::B_star, f), g) == inner_product(f, apply_op(WaveOp::B, g)));
  return r;
}

/// K(α*, β) = e^{α* β}.
inline std::complex<double> kernel_eval(std::complex<double> alpha, std::complex<double> beta) {
  return std::exp(std::conj(alpha) * beta);
}

/// Representer 𝕜_β(α*) = e^{α*β} truncated to Σ_{n≤T} β^n (α*)^n / n!.
template <Scalar T>
BivariatePoly<T> representer(const T& beta, unsigned truncation = 40) {
  BivariatePoly<T> out;
  T power = T(1);
  Integer fact = 1;
  for (unsigned n = 0; n <= truncation; ++n) {
    if (n > 0) {
      power = power * beta;
      fact *= n;
    }
    if constexpr (std::is_same_v<T, std::complex<double>>)
      out.add_term({n, 0}, power / fact.convert_to<double>());
    else
      out.add_term({n, 0}, power / GaussianRational(Rational(fact)));
  }
  return out;
}

/// Bargmann–Segal map |ψ⟩ ↦ Σ_n ⟨n|ψ⟩ (α*)^n / √n!, exact.
inline BivariatePoly<RadicalNumber> bargmann_map(const std::vector<GaussianRational>& state) {
  BivariatePoly<RadicalNumber> out;
  for (unsigned n = 0; n < state.size(); ++n)
    out.add_term({n, 0}, RadicalNumber(state[n]) * RadicalNumber::sqrt(Rational(1, factorial(n))));
  return out;
}

inline BivariatePoly<std::complex<double>> bargmann_map(const std::vector<std::complex<double>>& state) {
  BivariatePoly<std::complex<double>> out;
  double fact = 1.0;
  for (unsigned n = 0; n < state.size(); ++n) {
    if (n > 0) fact *= n;
    out.add_term({n, 0}, state[n] / std::sqrt(fact));
  }
  return out;
}

}  // namespace bosonorder
