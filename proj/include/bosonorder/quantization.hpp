#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "operator_poly.hpp"
#include "poly_function.hpp"

namespace bosonorder {

/// (α*)^j α^k ↦ (a†)^j a^k, variable v acting on mode v.
inline OperatorPoly wick_quantize(const PolyFunction& f) {
  OperatorPoly out(f.variable_count());
  for (const auto& [key, c] : f.terms()) {
    std::vector<ModePower> pw;
    for (unsigned v = 0; v < key.size(); ++v) pw.push_back({v, key[v].conj, key[v].plain});
    out.add_term(NormalMonomial(std::move(pw)), c);
  }
  return out;
}

/// Inverse of wick_quantize: the normal symbol (a†)^j a^k ↦ (α*)^j α^k.
inline PolyFunction normal_symbol(const OperatorPoly& x) {
  PolyFunction out(x.mode_count());
  for (const auto& [mono, c] : x.terms()) {
    FunctionKey key(x.mode_count());
    for (const auto& mp : mono.powers()) key[mp.mode] = {mp.create, mp.annihilate};
    out.add_term(key, c);
  }
  return out;
}

/// Anti-Wick quantization over any number of variables: within each mode
/// the annihilators stand left of the creators, a_v^{k} (a_v†)^{j}, and the
/// result is brought to canonical form.
inline OperatorPoly anti_wick_multimode(const PolyFunction& f, const Limits& limits = {}) {
  const unsigned modes = f.variable_count();
  OperatorPoly out(modes);
  for (const auto& [key, c] : f.terms()) {
    Word w;
    for (unsigned v = 0; v < modes; ++v) {
      w.insert(w.end(), key[v].plain, Generator::annihilate(v));
      w.insert(w.end(), key[v].conj, Generator::create(v));
    }
    out += c * canonicalize(w, modes, limits);
  }
  return out;
}

/// (α*)^n α^m ↦ a^m (a†)^n, canonicalised.
inline OperatorPoly anti_wick_direct(const PolyFunction& f, const Limits& limits = {}) {
  if (f.variable_count() != 1) throw DimensionError("anti_wick_direct expects a single-variable symbol");
  return anti_wick_multimode(f, limits);
}

/// The commuting dilation variables C = a + b† and C* = a† + b on the
/// two-mode space (mode 0 = A, mode 1 = B).
enum class DilationFactor { c, c_star };

inline OperatorPoly dilation_variable(DilationFactor which) {
  if (which == DilationFactor::c)
    return OperatorPoly::generator(2, Generator::annihilate(0)) + OperatorPoly::generator(2, Generator::create(1));
  return OperatorPoly::generator(2, Generator::create(0)) + OperatorPoly::generator(2, Generator::annihilate(1));
}

/// Product of dilation variables in the given order.
inline OperatorPoly dilate_word(const std::vector<DilationFactor>& factors, const Limits& limits = {}) {
  OperatorPoly out = OperatorPoly::identity(2);
  const OperatorPoly c = dilation_variable(DilationFactor::c);
  const OperatorPoly cs = dilation_variable(DilationFactor::c_star);
  for (auto f : factors) out = mul(out, f == DilationFactor::c ? c : cs, limits);
  return out;
}

/// f(α*, α) ↦ f(C*, C) on the two-mode space.
inline OperatorPoly dilate(const PolyFunction& f, const Limits& limits = {}) {
  if (f.variable_count() != 1) throw DimensionError("dilate expects a single-variable symbol");
  const OperatorPoly c = dilation_variable(DilationFactor::c);
  const OperatorPoly cs = dilation_variable(DilationFactor::c_star);
  std::vector<OperatorPoly> c_pow{OperatorPoly::identity(2)}, cs_pow{OperatorPoly::identity(2)};
  OperatorPoly out(2);
  for (const auto& [key, coeff] : f.terms()) {
    while (cs_pow.size() <= key[0].conj) cs_pow.push_back(mul(cs_pow.back(), cs, limits));
    while (c_pow.size() <= key[0].plain) c_pow.push_back(mul(c_pow.back(), c, limits));
    out += coeff * mul(cs_pow[key[0].conj], c_pow[key[0].plain], limits);
  }
  return out;
}

/// Contraction against the Fock vacuum of one mode: keeps the terms in
/// which that mode is absent, then drops the mode.
inline OperatorPoly partial_vacuum_expectation(const OperatorPoly& x, unsigned traced_mode) {
  if (traced_mode >= x.mode_count()) throw DimensionError("traced mode out of range");
  if (x.mode_count() < 2) throw DimensionError("cannot trace out the only mode");
  OperatorPoly out(x.mode_count() - 1);
  for (const auto& [m, c] : x.terms())
    if (m.at(traced_mode).degree() == 0) out.add_term(m.without(traced_mode), c);
  return out;
}

/// Anti-Wick quantization realised as dilation followed by the B-vacuum
/// expectation.
inline OperatorPoly anti_wick_via_dilation(const PolyFunction& f, const Limits& limits = {}) {
  return partial_vacuum_expectation(dilate(f, limits), 1);
}

enum class QuantizationRule { weyl, wick, antiwick };

inline std::string to_string(QuantizationRule r) {
  switch (r) {
    case QuantizationRule::weyl: return "weyl";
    case QuantizationRule::wick: return "wick";
    case QuantizationRule::antiwick: return "antiwick";
  }
  return "?";
}

/// scalar · e^{a†β} e^{−β* a} with scalar = e^{exponent·|β|²}.
struct DisplacementForm {
  std::complex<double> beta;
  Rational exponent;  // multiple of |β|²
  QuantizationRule rule = QuantizationRule::wick;

  double prefactor() const { return std::exp(to_double(exponent) * std::norm(beta)); }
};

/// Wick-ordered form of the quantized unimodular exponential
/// e^{α*β − β*α} under each rule (exponents 0, −1/2, −1 for wick, weyl,
/// anti-Wick).
inline DisplacementForm quantize_displacement(std::complex<double> beta, QuantizationRule rule) {
  switch (rule) {
    case QuantizationRule::wick: return {beta, Rational(0), rule};
    case QuantizationRule::weyl: return {beta, Rational(-1, 2), rule};
    case QuantizationRule::antiwick: return {beta, Rational(-1), rule};
  }
  throw std::invalid_argument("unknown quantization rule");
}

/// Cohen multiplier exponent relative to Weyl: Ξ(φ) = e^{c‖φ‖²}.
inline Rational cohen_exponent(QuantizationRule rule) {
  return quantize_displacement(0.0, rule).exponent - quantize_displacement(0.0, QuantizationRule::weyl).exponent;
}

}  // namespace bosonorder
