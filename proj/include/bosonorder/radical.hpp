#pragma once

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace bosonorder {

namespace detail {

/// Splits n > 0 into (s, f) with n = s²·f and f square-free. Trial division
/// covers primes below 2^16; a larger leftover cofactor is treated as
/// square-free unless it is itself a perfect square. Radicands met here are
/// factorials and powers of two, which are smooth.
inline std::pair<Integer, Integer> square_free_split(Integer n) {
  Integer square = 1, free = 1;
  for (unsigned p = 2; p < 65536u && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) free *= p;
  }
  if (n > 1) {
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n)
      square *= r;
    else
      free *= n;
  }
  return {square, free};
}

}  // namespace detail

/// Exact element of Q(i)(√2, √3, √5, ...): a finite sum Σ c_r·√r over
/// distinct square-free radicands r with Gaussian rational coefficients.
/// Closed under +, −, ×; used where normalisations such as 1/√n! or 1/√2
/// must stay exact.
class RadicalNumber {
 public:
  RadicalNumber() = default;
  RadicalNumber(int v) : RadicalNumber(GaussianRational(v)) {}  // NOLINT
  RadicalNumber(GaussianRational c) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(Integer(1), std::move(c));
  }

  /// √q for rational q ≥ 0.
  static RadicalNumber sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("RadicalNumber::sqrt of negative rational");
    if (q == 0) return {};
    const Integer& num = boost::multiprecision::numerator(q);
    const Integer& den = boost::multiprecision::denominator(q);
    auto [s, f] = detail::square_free_split(num * den);
    RadicalNumber r;
    r.terms_.emplace(f, GaussianRational(Rational(s, den)));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  /// A single real multiple c·√r.
  bool is_real_monomial() const { return terms_.size() == 1 && terms_.begin()->second.is_real(); }
  int leading_sign() const {
    if (terms_.empty()) return 0;
    const auto& c = terms_.begin()->second;
    return c.re() != 0 ? (c.re() > 0 ? 1 : -1) : (c.im() > 0 ? 1 : -1);
  }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

  /// Gaussian rational value; throws NotRepresentable if an irrational part remains.
  GaussianRational rational_value() const {
    if (!is_rational()) throw NotRepresentable("RadicalNumber has an irrational part: " + to_string());
    return terms_.empty() ? GaussianRational{} : terms_.begin()->second;
  }

  RadicalNumber conj() const {
    RadicalNumber r;
    for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, c.conj());
    return r;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z{};
    for (const auto& [rad, c] : terms_) z += c.to_complex() * std::sqrt(rad.convert_to<double>());
    return z;
  }

  RadicalNumber operator-() const {
    RadicalNumber r;
    for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, -c);
    return r;
  }

  RadicalNumber& operator+=(const RadicalNumber& o) {
    for (const auto& [rad, c] : o.terms_) add_term(rad, c);
    return *this;
  }
  RadicalNumber& operator-=(const RadicalNumber& o) { return *this += -o; }

  RadicalNumber& operator*=(const RadicalNumber& o) {
    RadicalNumber r;
    for (const auto& [ra, ca] : terms_) {
      for (const auto& [rb, cb] : o.terms_) {
        // ra, rb square-free: ra·rb = g²·(ra/g)(rb/g) with the cofactor square-free.
        Integer g = boost::multiprecision::gcd(ra, rb);
        r.add_term((ra / g) * (rb / g), ca * cb * GaussianRational(Rational(g)));
      }
    }
    return *this = std::move(r);
  }

  RadicalNumber& operator/=(const GaussianRational& d) {
    for (auto& [rad, c] : terms_) c /= d;
    return *this;
  }

  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
  friend RadicalNumber operator/(RadicalNumber a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [rad, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string cs = bosonorder::to_string(c);
      if (rad == 1) {
        out += cs;
      } else {
        if (!c.is_real() || c.re() != 1) out += "(" + cs + ")";
        out += "sqrt(" + rad.str() + ")";
      }
    }
    return out;
  }

 private:
  void add_term(const Integer& rad, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(rad, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Integer, GaussianRational> terms_;
};

}  // namespace bosonorder
