#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "complex_wave.hpp"
#include "fock.hpp"
#include "fourier.hpp"
#include "json_io.hpp"
#include "parse.hpp"
#include "quantization.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace bosonorder::cli {

enum ExitCode : int { ok = 0, parse_failure = 1, verification_failure = 2, invalid_configuration = 3 };

/// Reads BOSONORDER_MAX_DEGREE; absent means the library default.
inline Limits limits_from_env() {
  Limits limits;
  const char* raw = std::getenv("BOSONORDER_MAX_DEGREE");
  if (!raw || !*raw) return limits;
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(raw, &used);
  } catch (const std::exception&) {
  }
  if (v <= 0 || used != std::string(raw).size())
    throw std::invalid_argument(std::string("BOSONORDER_MAX_DEGREE must be a positive integer, got '") + raw + "'");
  limits.max_degree = unsigned(v);
  return limits;
}

/// Accepts `x`, `yi`, `x+yi`, `x-yi`, `i`, `-i` with decimal or exponent
/// notation.
inline std::complex<double> parse_point(std::string s) {
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  auto number = [&](const std::string& t, bool imaginary) {
    if (imaginary && (t.empty() || t == "+")) return 1.0;
    if (imaginary && t == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw ParseError(0, "bad point '" + s + "'");
    return v;
  };
  if (s.empty()) throw ParseError(0, "empty point");
  if (s.back() != 'i') return {number(s, false), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {0.0, number(body, true)};
  return {number(body.substr(0, cut), false), number(body.substr(cut), true)};
}

inline std::string point_text(std::complex<double> z) {
  return text::format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + text::format_double(std::abs(z.imag())) + "i";
}

inline OperatorPoly quantize(const PolyFunction& f, const std::string& rule, const Limits& limits) {
  if (rule == "wick") return wick_quantize(f);
  if (rule == "antiwick") return f.variable_count() == 1 ? anti_wick_direct(f, limits) : anti_wick_multimode(f, limits);
  return anti_wick_via_dilation(f, limits);
}

inline void print_checks(const std::vector<CheckReport>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    char line[200];
    std::snprintf(line, sizeof line, "%-4s  %-32s observed %-12.4e bound %.1e", c.pass ? "PASS" : "FAIL", c.check.c_str(),
                  c.observed, c.bound);
    out << line << '\n';
  }
}

/// Runs one command line (without the program name) and returns the exit
/// code. Output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orderings of boson operators: quantization, dilation, truncated matrices and checks", "bosonorder"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string expr, rule;
  auto* quantize_cmd = app.add_subcommand("quantize", "Quantize a symbol in z, z*");
  quantize_cmd->add_option("--rule", rule, "Ordering rule")
      ->required()
      ->check(CLI::IsMember({"wick", "antiwick", "antiwick-dilation"}));
  quantize_cmd->add_option("expr", expr, "Symbol")->required();

  auto* normal_cmd = app.add_subcommand("normal-order", "Bring an operator expression to normal order");
  normal_cmd->add_option("expr", expr, "Operator expression in A, A*, B, B*")->required();

  auto* dilate_cmd = app.add_subcommand("dilate", "Evaluate a symbol at C* = A* + B, C = A + B*");
  dilate_cmd->add_option("expr", expr, "Symbol")->required();

  auto* project_cmd = app.add_subcommand("project", "Orthogonal projection onto anti-holomorphic polynomials");
  project_cmd->add_option("expr", expr, "Symbol")->required();

  int dim = 0;
  auto* matrix_cmd = app.add_subcommand("matrix", "Truncated Fock matrix of an operator expression");
  matrix_cmd->add_option("--dim", dim, "Levels per mode")->required()->check(CLI::Range(1, 4096));
  matrix_cmd->add_option("expr", expr, "Operator expression")->required();

  std::vector<std::string> points;
  int fourier_order = 64;
  auto* fourier_cmd = app.add_subcommand("fourier", "Closed-form Fourier transform, optionally sampled");
  fourier_cmd->add_option("--points", points, "Sample points such as 0.5-1i")->delimiter(',');
  fourier_cmd->add_option("--gh-order", fourier_order, "Gauss-Hermite order per axis")->capture_default_str();
  fourier_cmd->add_option("expr", expr, "Symbol")->required();

  VerifyConfig cfg;
  std::string suite = "all";
  int verify_dim = 0;
  double tol = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  auto* dim_opt = verify_cmd->add_option("--dim", verify_dim, "Fock truncation override")->check(CLI::Range(2, 400));
  verify_cmd->add_option("--gh-order", cfg.gh_order, "Gauss-Hermite order per axis")->check(CLI::Range(1, 200))->capture_default_str();
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "Override every numerical bound")->check(CLI::PositiveNumber);

  // Expressions such as "-A + 1" would otherwise read as short flags; a
  // leading space is insignificant to the expression grammar.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  for (auto& a : reversed)
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return invalid_configuration;
  }

  const bool json = format == "json";
  try {
    const Limits limits = limits_from_env();
    if (*quantize_cmd) {
      OperatorPoly x = quantize(parse_function(expr), rule, limits);
      if (json) out << to_json(x).dump(2) << '\n';
      else out << to_text(x) << '\n';
    } else if (*normal_cmd) {
      OperatorPoly x = parse_operator(expr, 1, limits);
      if (json) out << to_json(x).dump(2) << '\n';
      else out << to_text(x) << '\n';
    } else if (*dilate_cmd) {
      OperatorPoly x = dilate(parse_function(expr), limits);
      if (json) out << to_json(x).dump(2) << '\n';
      else out << to_text(x) << '\n';
    } else if (*project_cmd) {
      auto p = project_antiholomorphic(BivariatePoly<GaussianRational>::from_function(parse_function(expr)));
      if (json) out << to_json(p).dump(2) << '\n';
      else out << to_text(p) << '\n';
    } else if (*matrix_cmd) {
      OperatorPoly x = parse_operator(expr, 1, limits);
      FockMatrix m = eval_poly(x, Dims(x.mode_count(), dim));
      if (json) {
        out << to_json(m).dump(2) << '\n';
      } else {
        auto safe = m.safe();
        out << "# dims " << dim << "^" << x.mode_count() << ", safe indices " << safe.size() << " of " << m.dimension()
            << '\n'
            << to_table(m.entries);
      }
    } else if (*fourier_cmd) {
      auto p = BivariatePoly<GaussianRational>::from_function(parse_function(expr));
      GaussianRecord r = fourier_analytic(p);
      std::vector<std::complex<double>> zs;
      for (const auto& s : points) zs.push_back(parse_point(s));
      std::vector<std::complex<double>> numeric;
      if (!zs.empty()) numeric = fourier_transform(p, QuadratureGrid::gaussian(fourier_order), zs);
      if (json) {
        Json j;
        j["transform"] = to_json(r);
        Json samples = Json::array();
        for (std::size_t i = 0; i < zs.size(); ++i)
          samples.push_back({{"z", to_json(zs[i])}, {"analytic", to_json(r.evaluate(zs[i]))}, {"quadrature", to_json(numeric[i])}});
        j["points"] = std::move(samples);
        out << j.dump(2) << '\n';
      } else {
        out << to_text(r) << '\n';
        for (std::size_t i = 0; i < zs.size(); ++i)
          out << "z = " << point_text(zs[i]) << "  analytic " << point_text(r.evaluate(zs[i])) << "  quadrature "
              << point_text(numeric[i]) << '\n';
      }
    } else if (*verify_cmd) {
      if (*dim_opt) cfg.dim = verify_dim;
      if (*tol_opt) cfg.tol = tol;
      cfg.limits = limits;
      auto checks = run_suite(suite, cfg);
      bool all = std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
      if (json) {
        Json j;
        j["suite"] = suite;
        j["seed"] = cfg.seed;
        Json list = Json::array();
        for (const auto& c : checks) list.push_back(to_json(c));
        j["checks"] = std::move(list);
        j["pass"] = all;
        out << j.dump(2) << '\n';
      } else {
        print_checks(checks, out);
        std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const CheckReport& c) { return !c.pass; });
        out << (all ? "all " + std::to_string(checks.size()) + " checks passed"
                    : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed")
            << '\n';
      }
      return all ? ok : verification_failure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return invalid_configuration;
  }
  return ok;
}

}  // namespace bosonorder::cli
