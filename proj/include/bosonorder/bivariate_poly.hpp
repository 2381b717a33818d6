#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "poly_function.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace bosonorder {

/// Exponent pair (j, k) of (α*)^j α^k.
struct Exponents {
  unsigned conj = 0;
  unsigned plain = 0;
  unsigned degree() const { return conj + plain; }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

struct ExponentsOrder {
  bool operator()(const Exponents& x, const Exponents& y) const {
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    if (x.conj != y.conj) return x.conj > y.conj;
    return x.plain > y.plain;
  }
};

/// Polynomial Σ c_{jk} (α*)^j α^k on the complex plane, as an element of
/// the Gaussian L² space. Holomorphic polynomials have no α* and
/// anti-holomorphic ones no α.
template <Scalar T>
class BivariatePoly {
 public:
  using TermMap = std::map<Exponents, T, ExponentsOrder>;

  BivariatePoly() = default;

  static BivariatePoly monomial(unsigned j, unsigned k, T c = T(1)) {
    BivariatePoly p;
    p.add_term({j, k}, std::move(c));
    return p;
  }
  static BivariatePoly constant(T c) { return monomial(0, 0, std::move(c)); }

  /// Converts a single-variable exact symbol.
  static BivariatePoly from_function(const PolyFunction& f) {
    if (f.variable_count() != 1) throw DimensionError("BivariatePoly expects a single-variable function");
    BivariatePoly p;
    for (const auto& [k, c] : f.terms()) {
      if constexpr (std::is_same_v<T, std::complex<double>>)
        p.add_term({k[0].conj, k[0].plain}, c.to_complex());
      else
        p.add_term({k[0].conj, k[0].plain}, T(c));
    }
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  T coefficient(unsigned j, unsigned k) const {
    auto it = terms_.find({j, k});
    return it == terms_.end() ? T{} : it->second;
  }

  void add_term(Exponents e, const T& c) {
    if (bosonorder::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (bosonorder::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_holomorphic() const {
    for (const auto& [e, c] : terms_)
      if (e.conj) return false;
    return true;
  }
  bool is_antiholomorphic() const {
    for (const auto& [e, c] : terms_)
      if (e.plain) return false;
    return true;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BivariatePoly& operator*=(const T& s) {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return *this = std::move(r);
  }
  BivariatePoly& operator*=(const BivariatePoly& o) {
    BivariatePoly r;
    for (const auto& [ex, cx] : terms_)
      for (const auto& [ey, cy] : o.terms_) r.add_term({ex.conj + ey.conj, ex.plain + ey.plain}, cx * cy);
    return *this = std::move(r);
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
  friend BivariatePoly operator*(const T& s, BivariatePoly a) { return a *= s; }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  /// Value with α* and α given independently.
  std::complex<double> evaluate(std::complex<double> conj_arg, std::complex<double> arg) const {
    std::complex<double> sum{};
    for (const auto& [e, c] : terms_) {
      std::complex<double> t = to_complex(c);
      for (unsigned p = 0; p < e.conj; ++p) t *= conj_arg;
      for (unsigned p = 0; p < e.plain; ++p) t *= arg;
      sum += t;
    }
    return sum;
  }

  std::complex<double> at(std::complex<double> alpha) const { return evaluate(std::conj(alpha), alpha); }

  BivariatePoly<std::complex<double>> to_float() const {
    BivariatePoly<std::complex<double>> r;
    for (const auto& [e, c] : terms_) r.add_term(e, to_complex(c));
    return r;
  }

 private:
  TermMap terms_;
};

/// `Σ c · z*^j z^k`, the same text form as single-variable functions.
template <Scalar T>
std::string to_text(const BivariatePoly<T>& p) {
  std::vector<std::pair<T, std::string>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(c, to_text(FunctionKey{{e.conj, e.plain}}));
  return text::join_terms(terms);
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const BivariatePoly<T>& p) {
  return os << to_text(p);
}

}  // namespace bosonorder
