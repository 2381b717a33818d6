#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "operator_poly.hpp"
#include "poly_function.hpp"
#include "radical.hpp"

namespace bosonorder {

namespace text {

/// A coefficient split into sign and magnitude text. `compound` marks
/// values printed in parentheses (complex with both parts, radicals), for
/// which no sign is extracted.
struct Coefficient {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1
  bool compound = false;
  std::string body;
};

inline Coefficient split(const GaussianRational& c) {
  Coefficient out;
  if (c.is_real() || c.re() == 0) {
    out.negative = c.re() < 0 || (c.re() == 0 && c.im() < 0);
    GaussianRational mag = out.negative ? -c : c;
    out.unit = mag.is_real() && mag.re() == 1;
    out.body = to_string(mag);
  } else {
    out.compound = true;
    out.body = "(" + to_string(c) + ")";
  }
  return out;
}

inline Coefficient split(const RadicalNumber& c) {
  if (c.is_rational()) return split(c.rational_value());
  if (c.is_real_monomial() && c.leading_sign() < 0) return {true, false, true, "(" + (-c).to_string() + ")"};
  return {false, false, true, "(" + c.to_string() + ")"};
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Coefficient split(const std::complex<double>& c) {
  if (c.imag() == 0.0) {
    Coefficient out;
    out.negative = std::signbit(c.real());
    out.unit = std::abs(c.real()) == 1.0;
    out.body = format_double(std::abs(c.real()));
    return out;
  }
  std::string im = format_double(std::abs(c.imag()));
  return {false, false, true,
          "(" + format_double(c.real()) + (c.imag() < 0 ? " - " : " + ") + im + "i)"};
}

/// Joins (coefficient, monomial-text) pairs into `c m + c m - ...`.
template <class Coeff>
std::string join_terms(const std::vector<std::pair<Coeff, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    Coefficient s = split(c);
    if (first)
      out += s.negative ? "-" : "";
    else
      out += s.negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += s.body;
    else if (s.unit)
      out += mono;
    else
      out += s.body + " " + mono;
  }
  return out;
}

/// Appends factors: no separator unless the previous text ends in a digit.
inline void append_factor(std::string& out, const std::string& factor, bool always_space) {
  if (!out.empty() && (always_space || std::isdigit(static_cast<unsigned char>(out.back())))) out += ' ';
  out += factor;
}

inline std::string power(const std::string& base, unsigned p) {
  return p == 1 ? base : base + "^" + std::to_string(p);
}

}  // namespace text

/// Generator name for `mode`: A for one mode, A/B for two, A1.. otherwise.
inline std::string mode_name(unsigned mode, unsigned mode_count) {
  if (mode_count == 1 && mode == 0) return "A";
  if (mode_count == 2 && mode < 2) return mode == 0 ? "A" : "B";
  return "A" + std::to_string(mode + 1);
}

inline std::string variable_name(unsigned var, unsigned var_count) {
  return var_count == 1 ? std::string("z") : "z" + std::to_string(var + 1);
}

inline std::string to_text(const NormalMonomial& m, unsigned mode_count) {
  std::string out;
  for (const auto& p : m.powers()) {
    std::string name = mode_name(p.mode, mode_count);
    if (p.create) text::append_factor(out, text::power(name + "*", p.create), false);
    if (p.annihilate) text::append_factor(out, text::power(name, p.annihilate), false);
  }
  return out;
}

/// Canonical text: terms in canonical order, exact rational coefficients.
inline std::string to_text(const OperatorPoly& p) {
  std::vector<std::pair<GaussianRational, std::string>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(c, to_text(m, p.mode_count()));
  return text::join_terms(terms);
}

inline std::string to_text(const FunctionKey& k) {
  std::string out;
  for (unsigned v = 0; v < k.size(); ++v) {
    std::string name = variable_name(v, unsigned(k.size()));
    if (k[v].conj) text::append_factor(out, text::power(name + "*", k[v].conj), true);
    if (k[v].plain) text::append_factor(out, text::power(name, k[v].plain), true);
  }
  return out;
}

inline std::string to_text(const PolyFunction& f) {
  std::vector<std::pair<GaussianRational, std::string>> terms;
  for (const auto& [k, c] : f.terms()) terms.emplace_back(c, to_text(k));
  return text::join_terms(terms);
}

inline std::ostream& operator<<(std::ostream& os, const OperatorPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const PolyFunction& f) { return os << to_text(f); }

}  // namespace bosonorder
