#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "operator_poly.hpp"
#include "poly_function.hpp"

namespace bosonorder {

// Grammar (whitespace insignificant except after a variable name):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' uint)?
//   atom   := uint ['/' uint] | 'i' | var | '(' expr ')'
// A '*' written directly after a variable name marks the conjugate / creator
// (`z*`, `A*`); a '*' anywhere else is explicit multiplication. Functions use
// the variables z, z1, z2, ...; operators use A, B, A1, A2, ...

namespace detail {

enum class Namespace { function, op };

struct Node {
  enum Kind { number, variable, add, sub, neg, mul, pow } kind = number;
  GaussianRational value;
  unsigned index = 0;    // variable: variable or mode index
  bool starred = false;  // variable: α* / creator
  unsigned exponent = 0;
  std::vector<Node> children;
};

class Parser {
 public:
  Parser(std::string_view src, Namespace ns) : src_(src), ns_(ns) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return n;
  }

  unsigned max_index() const { return max_index_; }
  bool saw_variable() const { return saw_variable_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Node expr() {
    Node acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = Node{Node::neg, {}, 0, false, 0, {std::move(acc)}};
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Node rhs = term();
      acc = Node{c == '+' ? Node::add : Node::sub, {}, 0, false, 0, {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Node term() {
    Node acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_atom(peek())) fail("expected a factor after '*'");
      } else if (!starts_atom(c)) {
        break;
      }
      Node rhs = factor();
      acc = Node{Node::mul, {}, 0, false, 0, {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  Node factor() {
    Node base = atom();
    if (peek() == '^') {
      std::size_t caret = pos_++;
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail_at(caret, "exponent must be a non-negative integer literal");
      unsigned long long e = number_literal();
      if (e > 4096) fail_at(caret, "exponent too large");
      base = Node{Node::pow, {}, 0, false, unsigned(e), {std::move(base)}};
    }
    return base;
  }

  unsigned long long number_literal() {
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (v > 100000000000000000ull) fail_at(start, "integer literal too large");
      v = v * 10 + unsigned(src_[pos_++] - '0');
    }
    return v;
  }

  Node atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      Rational v(number_literal());
      std::size_t save = pos_;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          fail("expected denominator after '/'");
        unsigned long long d = number_literal();
        if (d == 0) fail_at(start, "zero denominator");
        v /= Rational(d);
      } else {
        pos_ = save;
      }
      return Node{Node::number, GaussianRational(v), 0, false, 0, {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Node variable() {
    std::size_t start = pos_;
    char letter = src_[pos_++];
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
    bool starred = pos_ < src_.size() && src_[pos_] == '*';
    if (letter == 'i' && digits.empty()) {
      if (starred) fail_at(start, "'i' cannot be conjugated");
      return Node{Node::number, GaussianRational::i(), 0, false, 0, {}};
    }
    if (starred) ++pos_;
    unsigned index = 0;
    if (!digits.empty()) {
      if (digits.size() > 6 || std::stoul(digits) == 0) fail_at(start, "bad variable index '" + digits + "'");
      index = unsigned(std::stoul(digits)) - 1;
    }
    bool ok = false;
    if (ns_ == Namespace::function) {
      ok = letter == 'z';
    } else if (letter == 'A') {
      ok = true;
    } else if (letter == 'B') {
      ok = digits.empty();
      index = 1;
    }
    if (!ok) {
      fail_at(start, std::string("unknown symbol '") + letter + digits + "'" +
                         (ns_ == Namespace::function ? " (function variables are z, z1, z2, ...)"
                                                     : " (operators are A, B, A1, A2, ...)"));
    }
    saw_variable_ = true;
    max_index_ = std::max(max_index_, index);
    return Node{Node::variable, {}, index, starred, 0, {}};
  }

  std::string_view src_;
  Namespace ns_;
  std::size_t pos_ = 0;
  unsigned max_index_ = 0;
  bool saw_variable_ = false;
};

inline PolyFunction lower_function(const Node& n, unsigned vars) {
  switch (n.kind) {
    case Node::number: return PolyFunction::constant(n.value, vars);
    case Node::variable: {
      FunctionKey k(vars);
      (n.starred ? k[n.index].conj : k[n.index].plain) = 1;
      PolyFunction f(vars);
      f.add_term(k, 1);
      return f;
    }
    case Node::add: return lower_function(n.children[0], vars) + lower_function(n.children[1], vars);
    case Node::sub: return lower_function(n.children[0], vars) - lower_function(n.children[1], vars);
    case Node::neg: return -lower_function(n.children[0], vars);
    case Node::mul: return lower_function(n.children[0], vars) * lower_function(n.children[1], vars);
    case Node::pow: return lower_function(n.children[0], vars).pow(n.exponent);
  }
  return PolyFunction(vars);
}

inline OperatorPoly lower_operator(const Node& n, unsigned modes, const Limits& limits) {
  switch (n.kind) {
    case Node::number: return OperatorPoly::scalar(modes, n.value);
    case Node::variable:
      return OperatorPoly::generator(modes, n.starred ? Generator::create(n.index) : Generator::annihilate(n.index));
    case Node::add: return lower_operator(n.children[0], modes, limits) + lower_operator(n.children[1], modes, limits);
    case Node::sub: return lower_operator(n.children[0], modes, limits) - lower_operator(n.children[1], modes, limits);
    case Node::neg: return -lower_operator(n.children[0], modes, limits);
    case Node::mul:
      return mul(lower_operator(n.children[0], modes, limits), lower_operator(n.children[1], modes, limits), limits);
    case Node::pow: {
      OperatorPoly base = lower_operator(n.children[0], modes, limits);
      OperatorPoly r = OperatorPoly::identity(modes);
      for (unsigned i = 0; i < n.exponent; ++i) r = mul(r, base, limits);
      return r;
    }
  }
  return OperatorPoly(modes);
}

}  // namespace detail

/// Parses a commutative symbol in z, z* (or z1, z1*, ...). The variable
/// count is the largest index used, at least `min_variables`.
inline PolyFunction parse_function(std::string_view src, unsigned min_variables = 1) {
  detail::Parser p(src, detail::Namespace::function);
  detail::Node ast = p.parse();
  unsigned vars = std::max(min_variables, p.saw_variable() ? p.max_index() + 1 : 1u);
  return detail::lower_function(ast, vars);
}

/// Parses an operator expression in A, A*, B, B* (or A1, A1*, ...) and
/// returns its canonical normal-ordered form.
inline OperatorPoly parse_operator(std::string_view src, unsigned min_modes = 1, const Limits& limits = {}) {
  detail::Parser p(src, detail::Namespace::op);
  detail::Node ast = p.parse();
  unsigned modes = std::max(min_modes, p.saw_variable() ? p.max_index() + 1 : 1u);
  return detail::lower_operator(ast, modes, limits);
}

}  // namespace bosonorder
