#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bivariate_poly.hpp"
#include "complex_wave.hpp"
#include "radical.hpp"
#include "text.hpp"

namespace bosonorder {

/// Polynomial Σ c_n x^n in L²(ℝ, γ), γ the standard Gaussian measure.
class RealPoly {
 public:
  using TermMap = std::map<unsigned, RadicalNumber, std::greater<>>;

  RealPoly() = default;
  static RealPoly monomial(unsigned n, RadicalNumber c = 1) {
    RealPoly p;
    p.add_term(n, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  RadicalNumber coefficient(unsigned n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? RadicalNumber{} : it->second;
  }

  void add_term(unsigned n, const RadicalNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  RealPoly& operator+=(const RealPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  RealPoly& operator-=(const RealPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  RealPoly& operator*=(const RadicalNumber& s) {
    RealPoly r;
    for (const auto& [n, c] : terms_) r.add_term(n, c * s);
    return *this = std::move(r);
  }
  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(const RadicalNumber& s, RealPoly a) { return a *= s; }
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

inline std::string to_text(const RealPoly& p) {
  std::vector<std::pair<RadicalNumber, std::string>> terms;
  for (const auto& [n, c] : p.terms()) terms.emplace_back(c, n == 0 ? "" : text::power("x", n));
  return text::join_terms(terms);
}

enum class RealOp { a, adag, q, p };

namespace detail {

inline const RadicalNumber& inv_sqrt2() {
  static const RadicalNumber v = RadicalNumber::sqrt(Rational(1, 2));
  return v;
}
inline const RadicalNumber& sqrt2() {
  static const RadicalNumber v = RadicalNumber::sqrt(Rational(2));
  return v;
}
inline RadicalNumber imag_unit() { return RadicalNumber(GaussianRational::i()); }

inline RealPoly derivative(const RealPoly& f) {
  RealPoly r;
  for (const auto& [n, c] : f.terms())
    if (n) r.add_term(n - 1, c * RadicalNumber(int(n)));
  return r;
}

inline RealPoly times_x(const RealPoly& f) {
  RealPoly r;
  for (const auto& [n, c] : f.terms()) r.add_term(n + 1, c);
  return r;
}

}  // namespace detail

/// â = d/dx, â* = x − d/dx, q̂ = x/√2, p̂ = −i(√2 d/dx − x/√2).
inline RealPoly realline_apply(RealOp op, const RealPoly& f) {
  using namespace detail;
  switch (op) {
    case RealOp::a: return derivative(f);
    case RealOp::adag: return times_x(f) - derivative(f);
    case RealOp::q: return inv_sqrt2() * times_x(f);
    case RealOp::p: return (-imag_unit()) * (sqrt2() * derivative(f) - inv_sqrt2() * times_x(f));
  }
  return {};
}

/// e_n = (â*)^n Ω / √n!, Ω = 1.
inline RealPoly hermite_basis(unsigned n) {
  RealPoly e = RealPoly::monomial(0);
  for (unsigned k = 0; k < n; ++k) e = realline_apply(RealOp::adag, e);
  return RadicalNumber::sqrt(Rational(1, factorial(n))) * e;
}

/// Polynomial Σ c_{mn} x^m y^n on ℝ², the tensor square of RealPoly.
class PlanePoly {
 public:
  using Key = std::array<unsigned, 2>;
  using TermMap = std::map<Key, RadicalNumber>;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Key k, const RadicalNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PlanePoly& operator+=(const PlanePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PlanePoly& operator-=(const PlanePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  PlanePoly& operator*=(const PlanePoly& o) {
    PlanePoly r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) r.add_term({ka[0] + kb[0], ka[1] + kb[1]}, ca * cb);
    return *this = std::move(r);
  }
  PlanePoly& operator*=(const RadicalNumber& s) {
    PlanePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return *this = std::move(r);
  }
  friend PlanePoly operator+(PlanePoly a, const PlanePoly& b) { return a += b; }
  friend PlanePoly operator-(PlanePoly a, const PlanePoly& b) { return a -= b; }
  friend PlanePoly operator*(PlanePoly a, const PlanePoly& b) { return a *= b; }
  friend PlanePoly operator*(const RadicalNumber& s, PlanePoly a) { return a *= s; }
  friend bool operator==(const PlanePoly& a, const PlanePoly& b) { return a.terms_ == b.terms_; }

  /// Applies a real-line operator to the x (axis 0) or y (axis 1) factor.
  PlanePoly apply(RealOp op, unsigned axis) const {
    std::map<unsigned, RealPoly> slices;  // other-axis power → polynomial in this axis
    for (const auto& [k, c] : terms_) slices[k[1 - axis]].add_term(k[axis], c);
    PlanePoly r;
    for (const auto& [other, f] : slices) {
      RealPoly g = realline_apply(op, f);
      for (const auto& [n, c] : g.terms()) {
        Key k;
        k[axis] = n;
        k[1 - axis] = other;
        r.add_term(k, c);
      }
    }
    return r;
  }

 private:
  TermMap terms_;
};

/// Substitutes α = (x + iy)/√2 into a polynomial in (α*, α).
template <Scalar T>
PlanePoly to_plane(const BivariatePoly<T>& f) {
  using namespace detail;
  PlanePoly alpha, alpha_conj;
  alpha.add_term({1, 0}, inv_sqrt2());
  alpha.add_term({0, 1}, imag_unit() * inv_sqrt2());
  alpha_conj.add_term({1, 0}, inv_sqrt2());
  alpha_conj.add_term({0, 1}, -imag_unit() * inv_sqrt2());
  PlanePoly out;
  for (const auto& [e, c] : f.terms()) {
    PlanePoly t;
    t.add_term({0, 0}, RadicalNumber(c));
    for (unsigned p = 0; p < e.conj; ++p) t *= alpha_conj;
    for (unsigned p = 0; p < e.plain; ++p) t *= alpha;
    out += t;
  }
  return out;
}

/// Realization of the complex-wave operators on L²(ℝ,γ) ⊗ L²(ℝ,γ):
///   Â = (â_x + i â_y)/√2,  Â* = (â*_x − i â*_y)/√2,
///   B̂ = (â_x − i â_y)/√2,  B̂* = (â*_x + i â*_y)/√2,
///   Ĉ = q̂_x + i q̂_y,       Ĉ* = q̂_x − i q̂_y.
inline PlanePoly plane_apply(WaveOp op, const PlanePoly& f) {
  using namespace detail;
  const RadicalNumber i = imag_unit();
  auto combo = [&](RealOp x, RealOp y, const RadicalNumber& cy, const RadicalNumber& scale) {
    return scale * (f.apply(x, 0) + cy * f.apply(y, 1));
  };
  switch (op) {
    case WaveOp::A: return combo(RealOp::a, RealOp::a, i, inv_sqrt2());
    case WaveOp::A_star: return combo(RealOp::adag, RealOp::adag, -i, inv_sqrt2());
    case WaveOp::B: return combo(RealOp::a, RealOp::a, -i, inv_sqrt2());
    case WaveOp::B_star: return combo(RealOp::adag, RealOp::adag, i, inv_sqrt2());
    case WaveOp::C: return combo(RealOp::q, RealOp::q, i, 1);
    case WaveOp::C_star: return combo(RealOp::q, RealOp::q, -i, 1);
  }
  return {};
}

struct DecompositionReport {
  std::vector<IdentityCheck> checks;
  unsigned monomials = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

/// Verifies on every monomial (α*)^j α^k with j + k ≤ max_degree that the
/// differential operators agree with their two-axis realizations, and that
/// the quadratures split as
///   X_A = (q_x − p_y)/√2,  Y_A = (p_x + q_y)/√2,
///   X_B = (q_x + p_y)/√2,  Y_B = (p_x − q_y)/√2.
inline DecompositionReport quadrature_decomposition_check(unsigned max_degree = 6) {
  using namespace detail;
  using Poly = BivariatePoly<GaussianRational>;
  const RadicalNumber i = imag_unit();
  const RadicalNumber minus_i_over_sqrt2 = -i * inv_sqrt2();
  const WaveOp ops[] = {WaveOp::A, WaveOp::A_star, WaveOp::B, WaveOp::B_star, WaveOp::C, WaveOp::C_star};

  DecompositionReport r;
  std::map<std::string, bool> ok;
  for (WaveOp o : ops) ok[to_string(o)] = true;
  for (const char* q : {"X_A", "Y_A", "X_B", "Y_B"}) ok[q] = true;

  for (unsigned d = 0; d <= max_degree; ++d) {
    for (unsigned j = 0; j <= d; ++j) {
      Poly m = Poly::monomial(j, d - j);
      PlanePoly pm = to_plane(m);
      ++r.monomials;
      for (WaveOp o : ops)
        if (!(to_plane(apply_op(o, m)) == plane_apply(o, pm))) ok[to_string(o)] = false;

      PlanePoly a = to_plane(apply_op(WaveOp::A, m)), as = to_plane(apply_op(WaveOp::A_star, m));
      PlanePoly b = to_plane(apply_op(WaveOp::B, m)), bs = to_plane(apply_op(WaveOp::B_star, m));
      PlanePoly qx = pm.apply(RealOp::q, 0), px = pm.apply(RealOp::p, 0);
      PlanePoly qy = pm.apply(RealOp::q, 1), py = pm.apply(RealOp::p, 1);
      auto check = [&](const char* name, const PlanePoly& lhs, const PlanePoly& rhs) {
        if (!(lhs == rhs)) ok[name] = false;
      };
      check("X_A", inv_sqrt2() * (a + as), inv_sqrt2() * (qx - py));
      check("Y_A", minus_i_over_sqrt2 * (a - as), inv_sqrt2() * (px + qy));
      check("X_B", inv_sqrt2() * (b + bs), inv_sqrt2() * (qx + py));
      check("Y_B", minus_i_over_sqrt2 * (b - bs), inv_sqrt2() * (px - qy));
    }
  }
  for (const auto& [name, pass] : ok) r.checks.push_back({name, pass});
  return r;
}

}  // namespace bosonorder
