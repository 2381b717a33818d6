#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bosonorder {

/// Powers of (α_v*, α_v) for one variable.
struct VarPower {
  unsigned conj = 0;
  unsigned plain = 0;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Dense per-variable exponent vector; length equals the variable count.
using FunctionKey = std::vector<VarPower>;

/// Total degree descending, then dense key descending.
struct FunctionKeyOrder {
  static unsigned degree(const FunctionKey& k) {
    unsigned d = 0;
    for (const auto& v : k) d += v.conj + v.plain;
    return d;
  }
  bool operator()(const FunctionKey& x, const FunctionKey& y) const {
    unsigned dx = degree(x), dy = degree(y);
    if (dx != dy) return dx > dy;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (x[i].conj != y[i].conj) return x[i].conj > y[i].conj;
      if (x[i].plain != y[i].plain) return x[i].plain > y[i].plain;
    }
    return x.size() > y.size();
  }
};

/// Commutative polynomial f(α*, α) = Σ f_key Π_v (α_v*)^{j_v} α_v^{k_v}
/// with exact coefficients.
class PolyFunction {
 public:
  using TermMap = std::map<FunctionKey, GaussianRational, FunctionKeyOrder>;

  explicit PolyFunction(unsigned variable_count = 1) : vars_(variable_count) {
    if (variable_count == 0) throw DimensionError("PolyFunction: variable_count must be positive");
  }

  static PolyFunction constant(const GaussianRational& c, unsigned variable_count = 1) {
    PolyFunction f(variable_count);
    f.add_term(FunctionKey(variable_count), c);
    return f;
  }

  /// c·(α*)^j α^k in a single variable.
  static PolyFunction monomial(unsigned j, unsigned k, const GaussianRational& c = 1) {
    PolyFunction f(1);
    f.add_term({{j, k}}, c);
    return f;
  }

  unsigned variable_count() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree() const { return terms_.empty() ? 0 : FunctionKeyOrder::degree(terms_.begin()->first); }

  GaussianRational coefficient(const FunctionKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }
  /// Single-variable coefficient f_{jk}.
  GaussianRational coefficient(unsigned j, unsigned k) const { return coefficient(FunctionKey{{j, k}}); }

  void add_term(const FunctionKey& k, const GaussianRational& c) {
    if (k.size() != vars_)
      throw DimensionError("PolyFunction key has " + std::to_string(k.size()) + " variables, expected " +
                           std::to_string(vars_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyFunction& operator+=(const PolyFunction& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PolyFunction& operator-=(const PolyFunction& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  PolyFunction& operator*=(const PolyFunction& o) {
    require_same(o);
    PolyFunction r(vars_);
    for (const auto& [kx, cx] : terms_) {
      for (const auto& [ky, cy] : o.terms_) {
        FunctionKey k = kx;
        for (std::size_t v = 0; v < k.size(); ++v) {
          k[v].conj += ky[v].conj;
          k[v].plain += ky[v].plain;
        }
        r.add_term(k, cx * cy);
      }
    }
    return *this = std::move(r);
  }
  PolyFunction& operator*=(const GaussianRational& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
  friend PolyFunction operator*(PolyFunction a, const PolyFunction& b) { return a *= b; }
  friend PolyFunction operator*(const GaussianRational& s, PolyFunction a) { return a *= s; }
  PolyFunction operator-() const { return GaussianRational(-1) * *this; }

  friend bool operator==(const PolyFunction& a, const PolyFunction& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  PolyFunction pow(unsigned n) const {
    PolyFunction r = constant(1, vars_);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Pointwise complex conjugate: conj(f)(α*, α) = Σ conj(f_{jk}) (α*)^k α^j.
  PolyFunction conjugate() const {
    PolyFunction r(vars_);
    for (const auto& [k, c] : terms_) {
      FunctionKey s = k;
      for (auto& v : s) std::swap(v.conj, v.plain);
      r.add_term(s, c.conj());
    }
    return r;
  }

  /// f is real-valued on the diagonal α* = conj(α).
  bool is_real_symbol() const { return conjugate() == *this; }

  /// f with α* and α treated as independent variables.
  std::complex<double> evaluate(std::span<const std::complex<double>> conj_args,
                                std::span<const std::complex<double>> args) const {
    if (conj_args.size() != vars_ || args.size() != vars_)
      throw DimensionError("PolyFunction::evaluate: argument count mismatch");
    std::complex<double> sum{};
    for (const auto& [k, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (unsigned v = 0; v < vars_; ++v) {
        for (unsigned p = 0; p < k[v].conj; ++p) t *= conj_args[v];
        for (unsigned p = 0; p < k[v].plain; ++p) t *= args[v];
      }
      sum += t;
    }
    return sum;
  }

  /// Single-variable f(α*, α) at independent values.
  std::complex<double> evaluate(std::complex<double> conj_arg, std::complex<double> arg) const {
    return evaluate(std::span(&conj_arg, 1), std::span(&arg, 1));
  }

  /// Value on the diagonal, α* = conj(α).
  std::complex<double> at(std::complex<double> alpha) const { return evaluate(std::conj(alpha), alpha); }

  /// Embeds f into `variable_count` variables, its variable v going to v + offset.
  PolyFunction embedded(unsigned variable_count, unsigned offset) const {
    if (offset + vars_ > variable_count) throw DimensionError("PolyFunction::embedded: out of range");
    PolyFunction r(variable_count);
    for (const auto& [k, c] : terms_) {
      FunctionKey e(variable_count);
      for (unsigned v = 0; v < vars_; ++v) e[v + offset] = k[v];
      r.add_term(e, c);
    }
    return r;
  }

  void require_same(const PolyFunction& o) const {
    if (o.vars_ != vars_) throw DimensionError("PolyFunction variable_count mismatch");
  }

 private:
  unsigned vars_;
  TermMap terms_;
};

}  // namespace bosonorder
