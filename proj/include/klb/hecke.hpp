#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "klb/coxeter.hpp"
#include "klb/laurent.hpp"

namespace klb {

// Element of the Hecke algebra in the T-basis: a finite sum of terms
// (group element, coefficient). Terms are kept sorted by ascending element
// id with no zero coefficients; ids ascend with length, so the last term is
// always one of maximal length.
template <class E>
struct HeckeElem {
  using Poly = LaurentPoly<E>;
  using Term = std::pair<ElemId, Poly>;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }

  Poly coeff(ElemId x) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), x,
                               [](const Term& t, ElemId v) { return t.first < v; });
    if (it != terms.end() && it->first == x) return it->second;
    return {};
  }

  static HeckeElem from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    HeckeElem h;
    for (auto& t : ts) {
      if (t.second.is_zero()) continue;
      if (!h.terms.empty() && h.terms.back().first == t.first) {
        h.terms.back().second += t.second;
        if (h.terms.back().second.is_zero()) h.terms.pop_back();
      } else {
        h.terms.push_back(std::move(t));
      }
    }
    return h;
  }

  HeckeElem& operator+=(const HeckeElem& o) {
    if (o.terms.empty()) return *this;
    if (terms.empty()) {
      terms = o.terms;
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms.size() + o.terms.size());
    auto a = terms.begin(), b = o.terms.begin();
    while (a != terms.end() && b != o.terms.end()) {
      if (a->first < b->first) {
        out.push_back(*a++);
      } else if (b->first < a->first) {
        out.push_back(*b++);
      } else {
        Poly c = a->second + b->second;
        if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    out.insert(out.end(), a, terms.end());
    out.insert(out.end(), b, o.terms.end());
    terms = std::move(out);
    return *this;
  }
  HeckeElem& operator-=(const HeckeElem& o) {
    *this += o.scaled(Poly::constant(Zint(-1)));
    return *this;
  }
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { a += b; return a; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { a -= b; return a; }

  HeckeElem scaled(const Poly& p) const {
    HeckeElem h;
    if (p.is_zero()) return h;
    h.terms.reserve(terms.size());
    for (const auto& t : terms) h.terms.emplace_back(t.first, t.second * p);
    return h;
  }
  void add_scaled(const HeckeElem& o, const Poly& p) {
    if (p.is_zero()) return;
    if (p.is_one()) {
      *this += o;
      return;
    }
    *this += o.scaled(p);
  }
  void add_term(ElemId x, const Poly& p) {
    if (p.is_zero()) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), x,
                               [](const Term& t, ElemId v) { return t.first < v; });
    if (it != terms.end() && it->first == x) {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    } else {
      terms.emplace(it, x, p);
    }
  }

  bool operator==(const HeckeElem&) const = default;
};

// The Hecke algebra of an enumerated Coxeter group with a positive weight
// attached to each generator. Multiplication is driven by the two relations
//   T_s T_w = T_{sw}                        when sw > w,
//   T_s T_w = T_{sw} + (v^L - v^{-L}) T_w   when sw < w,
// everything else (general products, inverses, the bar involution) folds
// over reduced words.
template <class E>
class HeckeAlgebra {
 public:
  using Poly = LaurentPoly<E>;
  using Elem = HeckeElem<E>;

  HeckeAlgebra(const CoxeterTable& G, std::vector<E> gen_weights)
      : G_(G), gen_weight_(std::move(gen_weights)) {
    if (static_cast<int>(gen_weight_.size()) != G_.num_gens())
      throw std::invalid_argument("one weight per generator required");
    for (const E& w : gen_weight_)
      if (!(E{} < w)) throw std::invalid_argument("generator weights must be positive");
    xi_.reserve(gen_weight_.size());
    for (const E& w : gen_weight_)
      xi_.push_back(Poly::monomial(w) - Poly::monomial(-w));
    weight_.resize(G_.size());
    weight_[0] = E{};
    for (ElemId x = 1; x < G_.size(); ++x)
      weight_[x] = weight_[G_.parent(x)] + gen_weight_[G_.parent_gen(x)];
  }

  const CoxeterTable& group() const { return G_; }
  const E& gen_weight(int local) const { return gen_weight_[local]; }
  const E& weight(ElemId x) const { return weight_[x]; }
  const Poly& xi(int local) const { return xi_[local]; }

  Elem unit() const { return basis(0); }
  Elem basis(ElemId w) const {
    Elem h;
    h.terms.emplace_back(w, Poly::one());
    return h;
  }

  Elem mul_gen_left(int g, const Elem& h) const {
    std::vector<typename Elem::Term> out;
    out.reserve(2 * h.terms.size());
    for (const auto& [w, p] : h.terms) {
      ElemId sw = G_.lmul(g, w);
      out.emplace_back(sw, p);
      if (G_.length(sw) < G_.length(w)) out.emplace_back(w, xi_[g] * p);
    }
    return Elem::from_terms(std::move(out));
  }

  Elem mul_gen_right(const Elem& h, int g) const {
    std::vector<typename Elem::Term> out;
    out.reserve(2 * h.terms.size());
    for (const auto& [w, p] : h.terms) {
      ElemId ws = G_.rmul(w, g);
      out.emplace_back(ws, p);
      if (G_.length(ws) < G_.length(w)) out.emplace_back(w, xi_[g] * p);
    }
    return Elem::from_terms(std::move(out));
  }

  // T_w * h along a reduced word of w
  Elem mul_T_left(ElemId w, Elem h) const {
    std::vector<int> word = G_.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = mul_gen_left(*it, h);
    return h;
  }
  // h * T_w
  Elem mul_T_right(Elem h, ElemId w) const {
    std::vector<int> word = G_.word(w);
    for (int g : word) h = mul_gen_right(h, g);
    return h;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem acc;
    for (const auto& [w, p] : a.terms) acc.add_scaled(mul_T_left(w, b), p);
    return acc;
  }

  // T_w^{-1}, built from T_s^{-1} = T_s - (v^L - v^{-L})
  Elem invert_basis(ElemId w) const {
    Elem h = unit();
    std::vector<int> word = G_.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int g = *it;
      Elem next = mul_gen_right(h, g);
      next.add_scaled(h, -xi_[g]);
      h = std::move(next);
    }
    return h;
  }

  // bar(T_x) = (T_{x^{-1}})^{-1}, cached for the whole group
  const Elem& bar_basis(ElemId x) const {
    build_bar_table();
    return bar_T_[x];
  }

  Elem bar(const Elem& h) const {
    build_bar_table();
    Elem acc;
    for (const auto& [w, p] : h.terms) acc.add_scaled(bar_T_[w], p.bar());
    return acc;
  }

  Poly tau(const Elem& h) const {
    if (!h.terms.empty() && h.terms.front().first == 0) return h.terms.front().second;
    return {};
  }

  Elem project_T(const Elem& h, Filtration f) const {
    Elem out;
    for (const auto& t : h.terms)
      if (f.admits(G_.t_len(t.first))) out.terms.push_back(t);
    return out;
  }

 private:
  const CoxeterTable& G_;
  std::vector<E> gen_weight_;
  std::vector<Poly> xi_;
  std::vector<E> weight_;
  mutable std::vector<Elem> bar_T_;

  void build_bar_table() const {
    if (!bar_T_.empty()) return;
    bar_T_.resize(G_.size());
    bar_T_[0] = unit();
    for (ElemId x = 1; x < G_.size(); ++x) {
      const int g = G_.parent_gen(x);
      const Elem& tail = bar_T_[G_.parent(x)];
      Elem next = mul_gen_left(g, tail);
      next.add_scaled(tail, -xi_[g]);
      bar_T_[x] = std::move(next);
    }
  }
};

// Canonical golden-file rendering: one "+ (poly) T[window]" line per term,
// ascending in (length, window); the zero element renders as "0".
template <class E>
std::string hecke_str(const HeckeAlgebra<E>& H, const HeckeElem<E>& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [w, p] : h.terms) {
    if (!out.empty()) out += "\n";
    out += "+ (" + to_string(p) + ") T" + H.group().elem(w).str();
  }
  return out;
}

// Membership in the two-sided ideal spanned by the Kazhdan-Lusztig basis
// elements of full t-length, tested by (T_t - V) T_sigma h = 0 over the
// symmetric group part.
template <class E>
bool in_cn_ideal(const HeckeAlgebra<E>& H, const BnData& B, const HeckeElem<E>& h) {
  const int tg = H.group().local_gen(0);
  if (tg < 0) throw std::invalid_argument("algebra lacks the generator t");
  using Poly = LaurentPoly<E>;
  const Poly big_v = Poly::monomial(H.gen_weight(tg));
  for (ElemId sigma : B.sn_elements()) {
    HeckeElem<E> u = H.mul_T_left(sigma, h);
    HeckeElem<E> r = H.mul_gen_left(tg, u);
    r.add_scaled(u, -big_v);
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace klb
