#pragma once

#include <complex>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "bivariate_poly.hpp"
#include "fields.hpp"
#include "fock.hpp"
#include "fourier.hpp"
#include "operator_poly.hpp"
#include "poly_function.hpp"
#include "quadrature.hpp"
#include "report.hpp"

namespace bosonorder {

namespace json_detail {

// Integers that fit int64 are written as JSON numbers, larger ones as strings.
inline Json integer(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

inline Integer read_integer(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw ParseError(0, "expected integer in JSON");
}

inline Json rational(const Rational& q) {
  return Json::array({integer(boost::multiprecision::numerator(q)), integer(boost::multiprecision::denominator(q))});
}

inline Rational read_rational(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError(0, "expected [num, den] in JSON");
  Integer den = read_integer(j[1]);
  if (den == 0) throw ParseError(0, "zero denominator in JSON");
  return Rational(read_integer(j[0]), den);
}

}  // namespace json_detail

inline Json to_json(const GaussianRational& c) {
  Json j;
  j["re"] = json_detail::rational(c.re());
  j["im"] = json_detail::rational(c.im());
  return j;
}

inline GaussianRational gaussian_from_json(const Json& j) {
  return {json_detail::read_rational(j.at("re")), json_detail::read_rational(j.at("im"))};
}

inline Json to_json(const OperatorPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json powers = Json::array();
    for (const auto& mp : m.powers()) powers.push_back({{"mode", mp.mode}, {"create", mp.create}, {"annihilate", mp.annihilate}});
    Json t;
    t["coeff"] = to_json(c);
    t["powers"] = std::move(powers);
    terms.push_back(std::move(t));
  }
  Json j;
  j["modes"] = p.mode_count();
  j["terms"] = std::move(terms);
  return j;
}

inline OperatorPoly operator_from_json(const Json& j) {
  OperatorPoly p(j.at("modes").get<unsigned>());
  for (const auto& t : j.at("terms")) {
    std::vector<ModePower> powers;
    for (const auto& mp : t.at("powers"))
      powers.push_back({mp.at("mode").get<unsigned>(), mp.at("create").get<unsigned>(), mp.at("annihilate").get<unsigned>()});
    p.add_term(NormalMonomial(std::move(powers)), gaussian_from_json(t.at("coeff")));
  }
  return p;
}

/// Coefficient map keyed by exponents; `conj` counts z*, `plain` counts z.
template <Scalar T>
Json to_json(const BivariatePoly<T>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["conj"] = e.conj;
    t["plain"] = e.plain;
    if constexpr (std::is_same_v<T, GaussianRational>) {
      t["coeff"] = to_json(c);
    } else {
      auto z = to_complex(c);
      t["coeff"] = {{"re", z.real()}, {"im", z.imag()}};
    }
    terms.push_back(std::move(t));
  }
  return {{"terms", std::move(terms)}};
}

inline BivariatePoly<GaussianRational> bivariate_from_json(const Json& j) {
  BivariatePoly<GaussianRational> p;
  for (const auto& t : j.at("terms"))
    p.add_term({t.at("conj").get<unsigned>(), t.at("plain").get<unsigned>()}, gaussian_from_json(t.at("coeff")));
  return p;
}

inline Json to_json(const PolyFunction& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json powers = Json::array();
    for (const auto& v : k) powers.push_back({{"conj", v.conj}, {"plain", v.plain}});
    terms.push_back({{"coeff", to_json(c)}, {"powers", std::move(powers)}});
  }
  return {{"variables", f.variable_count()}, {"terms", std::move(terms)}};
}

inline Json to_json(const GaussianRecord& r) {
  return {{"poly", to_json(r.poly)}, {"exponent", r.exponent}};
}

inline Json to_json(const QuadratureGrid& g) {
  Json re = Json::array(), im = Json::array(), w = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    re.push_back(g.nodes[i].real());
    im.push_back(g.nodes[i].imag());
    w.push_back(g.weights[i]);
  }
  return {{"order", g.order}, {"nodes", {{"re", std::move(re)}, {"im", std::move(im)}}}, {"weights", std::move(w)}};
}

inline QuadratureGrid grid_from_json(const Json& j) {
  QuadratureGrid g;
  g.order = j.at("order").get<int>();
  const auto& re = j.at("nodes").at("re");
  const auto& im = j.at("nodes").at("im");
  const auto& w = j.at("weights");
  if (re.size() != im.size() || re.size() != w.size()) throw ParseError(0, "grid arrays differ in length");
  for (std::size_t i = 0; i < re.size(); ++i) {
    g.nodes.emplace_back(re[i].get<double>(), im[i].get<double>());
    g.weights.push_back(w[i].get<double>());
  }
  return g;
}

inline Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

/// Row-major list of [re, im] pairs.
inline Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(to_json(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>(), cols = j.at("cols").get<Eigen::Index>();
  const auto& e = j.at("entries");
  if (Eigen::Index(e.size()) != rows * cols) throw ParseError(0, "matrix entry count mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = {e[k][0].get<double>(), e[k][1].get<double>()};
  return m;
}

inline Json to_json(const FockMatrix& m) {
  Json j = to_json(m.entries);
  j["dims"] = m.dims;
  j["safe_degree"] = m.safe_degree;
  j["safe_indices"] = safe_indices(m.dims, m.safe_degree);
  return j;
}

/// One-particle vectors as arrays of exact complex entries.
inline Json to_json(const OneParticleVector& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_json(c));
  return j;
}

/// Plain-text table; entries `re+imi` with six significant digits.
inline std::string to_table(const Matrix& m) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::ostringstream cell;
      cell << std::setprecision(6) << m(r, c).real() << (m(r, c).imag() < 0 ? "-" : "+") << std::abs(m(r, c).imag())
           << "i";
      os << (c ? " " : "") << std::setw(16) << cell.str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bosonorder
