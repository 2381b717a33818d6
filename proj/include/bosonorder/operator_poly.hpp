#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bosonorder {

enum class Ladder { create, annihilate };

/// One letter of an operator word: a creator or annihilator of one mode.
struct Generator {
  unsigned mode = 0;
  Ladder kind = Ladder::annihilate;

  static Generator create(unsigned mode) { return {mode, Ladder::create}; }
  static Generator annihilate(unsigned mode) { return {mode, Ladder::annihilate}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

struct ModePower {
  unsigned mode = 0;
  unsigned create = 0;
  unsigned annihilate = 0;

  unsigned degree() const { return create + annihilate; }
  friend bool operator==(const ModePower&, const ModePower&) = default;
};

/// Π_m (a_m†)^{create_m} a_m^{annihilate_m}, creators left of annihilators
/// within every mode. Entries are sorted by mode; modes with both powers
/// zero are absent, so the empty monomial is the identity.
class NormalMonomial {
 public:
  NormalMonomial() = default;

  explicit NormalMonomial(std::vector<ModePower> powers) : powers_(std::move(powers)) {
    std::erase_if(powers_, [](const ModePower& p) { return p.degree() == 0; });
    std::sort(powers_.begin(), powers_.end(), [](auto& a, auto& b) { return a.mode < b.mode; });
    for (std::size_t i = 1; i < powers_.size(); ++i)
      if (powers_[i].mode == powers_[i - 1].mode)
        throw std::invalid_argument("NormalMonomial: duplicate mode " + std::to_string(powers_[i].mode));
  }

  static NormalMonomial single(unsigned mode, unsigned create, unsigned annihilate) {
    return NormalMonomial({{mode, create, annihilate}});
  }

  const std::vector<ModePower>& powers() const noexcept { return powers_; }
  bool is_identity() const noexcept { return powers_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.degree();
    return d;
  }

  /// Powers of `mode`, (0,0) when absent.
  ModePower at(unsigned mode) const {
    for (const auto& p : powers_)
      if (p.mode == mode) return p;
    return {mode, 0, 0};
  }

  /// One past the largest mode id present (0 for the identity).
  unsigned mode_span() const { return powers_.empty() ? 0 : powers_.back().mode + 1; }

  NormalMonomial with(unsigned mode, unsigned create, unsigned annihilate) const {
    std::vector<ModePower> p;
    p.reserve(powers_.size() + 1);
    for (const auto& q : powers_)
      if (q.mode != mode) p.push_back(q);
    p.push_back({mode, create, annihilate});
    return NormalMonomial(std::move(p));
  }

  NormalMonomial adjoint() const {
    NormalMonomial r = *this;
    for (auto& p : r.powers_) std::swap(p.create, p.annihilate);
    return r;
  }

  /// Drops `mode` and renumbers the modes above it down by one.
  NormalMonomial without(unsigned mode) const {
    NormalMonomial r;
    for (const auto& p : powers_) {
      if (p.mode == mode) continue;
      r.powers_.push_back({p.mode > mode ? p.mode - 1 : p.mode, p.create, p.annihilate});
    }
    return r;
  }

  NormalMonomial shifted(unsigned offset) const {
    NormalMonomial r = *this;
    for (auto& p : r.powers_) p.mode += offset;
    return r;
  }

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;

 private:
  std::vector<ModePower> powers_;
};

/// Canonical term order: total degree descending, then the dense key
/// (c_0, a_0, c_1, a_1, ...) descending lexicographically.
struct CanonicalOrder {
  bool operator()(const NormalMonomial& x, const NormalMonomial& y) const {
    unsigned dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx > dy;
    const auto& px = x.powers();
    const auto& py = y.powers();
    std::size_t i = 0, j = 0;
    while (i < px.size() || j < py.size()) {
      unsigned mx = i < px.size() ? px[i].mode : ~0u;
      unsigned my = j < py.size() ? py[j].mode : ~0u;
      unsigned m = std::min(mx, my);
      ModePower a = mx == m ? px[i++] : ModePower{m, 0, 0};
      ModePower b = my == m ? py[j++] : ModePower{m, 0, 0};
      if (a.create != b.create) return a.create > b.create;
      if (a.annihilate != b.annihilate) return a.annihilate > b.annihilate;
    }
    return false;
  }
};

struct Limits {
  /// Largest total degree a produced monomial may have.
  unsigned max_degree = 32;
};

/// Multimode operator polynomial in normal-ordered canonical form with exact
/// coefficients. No zero coefficient is ever stored.
class OperatorPoly {
 public:
  using TermMap = std::map<NormalMonomial, GaussianRational, CanonicalOrder>;

  explicit OperatorPoly(unsigned mode_count = 1) : modes_(mode_count) {
    if (mode_count == 0) throw DimensionError("OperatorPoly: mode_count must be positive");
  }

  static OperatorPoly scalar(unsigned mode_count, const GaussianRational& c) {
    OperatorPoly p(mode_count);
    p.add_term(NormalMonomial{}, c);
    return p;
  }
  static OperatorPoly identity(unsigned mode_count) { return scalar(mode_count, 1); }

  static OperatorPoly monomial(unsigned mode_count, const NormalMonomial& m, const GaussianRational& c = 1) {
    OperatorPoly p(mode_count);
    p.add_term(m, c);
    return p;
  }

  static OperatorPoly generator(unsigned mode_count, Generator g) {
    return monomial(mode_count, g.kind == Ladder::create ? NormalMonomial::single(g.mode, 1, 0)
                                                         : NormalMonomial::single(g.mode, 0, 1));
  }

  unsigned mode_count() const noexcept { return modes_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  unsigned degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();  // canonical order: highest first
  }

  GaussianRational coefficient(const NormalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  void add_term(const NormalMonomial& m, const GaussianRational& c) {
    if (m.mode_span() > modes_)
      throw DimensionError("monomial refers to mode " + std::to_string(m.mode_span() - 1) +
                           " but mode_count is " + std::to_string(modes_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OperatorPoly& operator+=(const OperatorPoly& o) {
    require_same_modes(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  OperatorPoly& operator-=(const OperatorPoly& o) {
    require_same_modes(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  OperatorPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(const GaussianRational& s, OperatorPoly p) { return p *= s; }
  OperatorPoly operator-() const { return GaussianRational(-1) * *this; }

  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.modes_ == b.modes_ && a.terms_ == b.terms_;
  }

  void require_same_modes(const OperatorPoly& o) const {
    if (o.modes_ != modes_)
      throw DimensionError("mode_count mismatch: " + std::to_string(modes_) + " vs " + std::to_string(o.modes_));
  }

 private:
  unsigned modes_;
  TermMap terms_;
};

namespace detail {

inline void check_degree(const NormalMonomial& m, const Limits& limits) {
  if (m.degree() > limits.max_degree)
    throw DegreeOverflow("monomial degree " + std::to_string(m.degree()) + " exceeds cap " +
                         std::to_string(limits.max_degree));
}

/// Expands (a†)^j1 a^k1 (a†)^j2 a^k2 for a single mode:
///   Σ_i C(k1,i) C(j2,i) i! (a†)^{j1+j2−i} a^{k1+k2−i}.
inline std::vector<std::pair<ModePower, Integer>> mode_product(const ModePower& x, const ModePower& y) {
  std::vector<std::pair<ModePower, Integer>> out;
  unsigned top = std::min(x.annihilate, y.create);
  for (unsigned i = 0; i <= top; ++i) {
    out.push_back({{x.mode, x.create + y.create - i, x.annihilate + y.annihilate - i},
                   binomial(x.annihilate, i) * binomial(y.create, i) * factorial(i)});
  }
  return out;
}

}  // namespace detail

/// Canonical product p·q.
inline OperatorPoly mul(const OperatorPoly& p, const OperatorPoly& q, const Limits& limits = {}) {
  p.require_same_modes(q);
  OperatorPoly out(p.mode_count());
  for (const auto& [mx, cx] : p.terms()) {
    for (const auto& [my, cy] : q.terms()) {
      // Modes commute, so the product factorises mode by mode.
      std::vector<std::pair<std::vector<ModePower>, Integer>> partial{{{}, Integer(1)}};
      const auto& px = mx.powers();
      const auto& py = my.powers();
      std::size_t i = 0, j = 0;
      while (i < px.size() || j < py.size()) {
        unsigned m = std::min(i < px.size() ? px[i].mode : ~0u, j < py.size() ? py[j].mode : ~0u);
        ModePower a = (i < px.size() && px[i].mode == m) ? px[i++] : ModePower{m, 0, 0};
        ModePower b = (j < py.size() && py[j].mode == m) ? py[j++] : ModePower{m, 0, 0};
        auto expansion = detail::mode_product(a, b);
        std::vector<std::pair<std::vector<ModePower>, Integer>> next;
        next.reserve(partial.size() * expansion.size());
        for (const auto& [pw, w] : partial) {
          for (const auto& [mp, w2] : expansion) {
            auto pw2 = pw;
            pw2.push_back(mp);
            next.emplace_back(std::move(pw2), w * w2);
          }
        }
        partial = std::move(next);
      }
      GaussianRational c = cx * cy;
      for (auto& [pw, w] : partial) {
        NormalMonomial m(std::move(pw));
        detail::check_degree(m, limits);
        out.add_term(m, c * GaussianRational(Rational(w)));
      }
    }
  }
  return out;
}

/// Right multiplication of a canonical polynomial by one generator, using
/// a^k a† = a† a^k + k a^{k−1} within the generator's mode.
inline OperatorPoly times_generator(const OperatorPoly& p, Generator g, const Limits& limits = {}) {
  if (g.mode >= p.mode_count())
    throw DimensionError("generator mode " + std::to_string(g.mode) + " out of range");
  OperatorPoly out(p.mode_count());
  for (const auto& [m, c] : p.terms()) {
    ModePower mp = m.at(g.mode);
    if (g.kind == Ladder::annihilate) {
      NormalMonomial n = m.with(g.mode, mp.create, mp.annihilate + 1);
      detail::check_degree(n, limits);
      out.add_term(n, c);
    } else {
      NormalMonomial n = m.with(g.mode, mp.create + 1, mp.annihilate);
      detail::check_degree(n, limits);
      out.add_term(n, c);
      if (mp.annihilate > 0) out.add_term(m.with(g.mode, mp.create, mp.annihilate - 1), c * GaussianRational(int(mp.annihilate)));
    }
  }
  return out;
}

/// Normal-ordered polynomial equal to the word under the CCR.
inline OperatorPoly canonicalize(const Word& word, unsigned mode_count, const Limits& limits = {}) {
  OperatorPoly out = OperatorPoly::identity(mode_count);
  for (const auto& g : word) out = times_generator(out, g, limits);
  return out;
}

inline OperatorPoly adjoint(const OperatorPoly& p) {
  OperatorPoly out(p.mode_count());
  for (const auto& [m, c] : p.terms()) out.add_term(m.adjoint(), c.conj());
  return out;
}

inline OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q, const Limits& limits = {}) {
  return mul(p, q, limits) - mul(q, p, limits);
}

/// p ⊗ q: q's modes are renumbered to follow p's.
inline OperatorPoly tensor(const OperatorPoly& p, const OperatorPoly& q) {
  OperatorPoly out(p.mode_count() + q.mode_count());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      std::vector<ModePower> pw = mp.powers();
      NormalMonomial moved = mq.shifted(p.mode_count());
      pw.insert(pw.end(), moved.powers().begin(), moved.powers().end());
      out.add_term(NormalMonomial(std::move(pw)), cp * cq);
    }
  }
  return out;
}

}  // namespace bosonorder
