#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klb/zint.hpp"

namespace klb {

// Exponent in Z^2 with the lexicographic order: the t-direction dominates.
// The monomial V has exponent (1,0), the monomial v has exponent (0,1).
struct GammaExp {
  std::int64_t tdeg = 0;
  std::int64_t sdeg = 0;

  friend constexpr GammaExp operator+(GammaExp a, GammaExp b) {
    return {a.tdeg + b.tdeg, a.sdeg + b.sdeg};
  }
  friend constexpr GammaExp operator-(GammaExp a, GammaExp b) {
    return {a.tdeg - b.tdeg, a.sdeg - b.sdeg};
  }
  constexpr GammaExp operator-() const { return {-tdeg, -sdeg}; }
  constexpr auto operator<=>(const GammaExp&) const = default;
  constexpr bool is_zero() const { return tdeg == 0 && sdeg == 0; }
};

inline std::strong_ordering lex_compare(GammaExp a, GammaExp b) { return a <=> b; }

constexpr GammaExp scale(GammaExp e, std::int64_t k) { return {k * e.tdeg, k * e.sdeg}; }

// Exponent in Z, for the one-parameter specialization.
using MonoExp = std::int64_t;
constexpr MonoExp scale(MonoExp e, std::int64_t k) { return k * e; }

// Laurent polynomial with Zint coefficients over a totally ordered exponent
// group E. Terms are kept sorted by strictly descending exponent with no zero
// coefficients, so deg/val are endpoint reads and equality is structural.
template <class E>
class LaurentPoly {
 public:
  using Term = std::pair<E, Zint>;

  LaurentPoly() = default;  // zero

  static LaurentPoly monomial(E e, Zint c = Zint(1)) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
    return p;
  }
  static LaurentPoly constant(Zint c) { return monomial(E{}, std::move(c)); }
  static LaurentPoly one() { return constant(Zint(1)); }

  // Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> ts) {
    LaurentPoly p;
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == E{} && terms_[0].second.is_one();
  }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // deg 0 is minus infinity, val 0 is plus infinity; both are reported as an
  // absent optional rather than any encoded extreme exponent.
  std::optional<E> deg() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }
  std::optional<E> val() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }

  Zint coeff(E e) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), e,
        [](const Term& t, const E& x) { return t.first > x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Zint(0);
  }
  Zint constant_coeff() const { return coeff(E{}); }
  Zint leading_coeff() const {
    return terms_.empty() ? Zint(0) : terms_.front().second;
  }

  // The automorphism induced by negating every exponent.
  LaurentPoly bar() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      p.terms_.emplace_back(-it->first, it->second);
    return p;
  }

  LaurentPoly negative_part() const {
    LaurentPoly p;
    for (const auto& t : terms_)
      if (t.first < E{}) p.terms_.push_back(t);
    return p;
  }
  LaurentPoly nonnegative_part() const {
    LaurentPoly p;
    for (const auto& t : terms_)
      if (!(t.first < E{})) p.terms_.push_back(t);
    return p;
  }

  // Membership in A_{<0}; the zero polynomial qualifies (empty support).
  bool strictly_negative() const {
    return terms_.empty() || terms_.front().first < E{};
  }
  // Membership in A_{>=0} with coefficient exactly 1 on the unit exponent.
  bool nonneg_with_unit_constant() const {
    if (terms_.empty()) return false;
    if (terms_.back().first < E{}) return false;
    return terms_.back().first == E{} && terms_.back().second.is_one();
  }
  // Support contained in the pure second direction (no first-direction shift).
  // Only meaningful for GammaExp instantiations; see has_tdeg_zero below.

  LaurentPoly shifted(E d) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first = t.first + d;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = o.terms_;
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
      if (a->first > b->first) {
        out.push_back(*a++);
      } else if (b->first > a->first) {
        out.push_back(*b++);
      } else {
        Zint c = a->second + b->second;
        if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, o.terms_.end());
    terms_ = std::move(out);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        acc.emplace_back(ta.first + tb.first, ta.second * tb.second);
    return from_terms(std::move(acc));
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  LaurentPoly scaled(const Zint& c) const {
    if (c.is_zero()) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
  }
  // add c * v^e in place
  void add_term(E e, const Zint& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), e,
        [](const Term& t, const E& x) { return t.first > x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.emplace(it, e, c);
    }
  }
  // *this += p * c
  void add_scaled(const LaurentPoly& p, const Zint& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
      *this += p;
      return;
    }
    *this += p.scaled(c);
  }

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

using BiLaurent = LaurentPoly<GammaExp>;
using MonoLaurent = LaurentPoly<MonoExp>;

inline BiLaurent bi_V(std::int64_t k = 1) { return BiLaurent::monomial({k, 0}); }
inline BiLaurent bi_v(std::int64_t k = 1) { return BiLaurent::monomial({0, k}); }

// Every exponent lies on the v-axis, i.e. the value is in Z[v, v^-1].
inline bool has_tdeg_zero(const BiLaurent& p) {
  for (const auto& t : p.terms())
    if (t.first.tdeg != 0) return false;
  return true;
}
// Membership in v^-1 Z[v^-1].
inline bool in_neg_v_only(const BiLaurent& p) {
  for (const auto& t : p.terms())
    if (t.first.tdeg != 0 || t.first.sdeg >= 0) return false;
  return true;
}

// --- canonical text rendering ------------------------------------------
//
// Terms in descending order, each as c*V^i*v^j with *V^0, *v^0, ^1 and a
// coefficient of 1 elided; zero renders as "0". This is the byte-exact
// format used by golden files and the command line tools.

inline std::string monomial_str(GammaExp e) {
  std::string s;
  if (e.tdeg != 0) {
    s += "V";
    if (e.tdeg != 1) s += "^" + std::to_string(e.tdeg);
  }
  if (e.sdeg != 0) {
    if (!s.empty()) s += "*";
    s += "v";
    if (e.sdeg != 1) s += "^" + std::to_string(e.sdeg);
  }
  return s;
}

inline std::string monomial_str(MonoExp e) {
  if (e == 0) return "";
  std::string s = "v";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

template <class E>
std::string to_string(const LaurentPoly<E>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = neg ? (-c).str() : c.str();
    std::string mono = monomial_str(e);
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

}  // namespace klb
