#include "klb/rs.hpp"

#include <algorithm>
#include <stdexcept>

#include "klb/coxeter.hpp"

namespace klb {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i - 1] < parts[i]))
      throw std::invalid_argument("not weakly decreasing positive parts");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty()) return Partition();
  c.resize(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance order needs equal partition sizes");
  int sa = 0, sb = 0;
  std::size_t k = std::max(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < k; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

int a_lambda(const Partition& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    s += static_cast<int>(i) * lambda.parts[i];
  return s;
}

std::string Bipartition::str() const { return "(" + plus.str() + "|" + minus.str() + ")"; }

Partition Tableau::shape() const {
  std::vector<int> p;
  p.reserve(rows.size());
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

std::string Tableau::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(rows[i][j]);
    }
    s += "]";
  }
  s += "]";
  return s;
}

std::pair<int, int> row_insert(Tableau& t, int value) {
  int v = value;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(v, *it);  // bump
  }
  t.rows.push_back({v});
  return {static_cast<int>(t.rows.size()) - 1, 0};
}

std::pair<Tableau, Tableau> rs_insert(const std::vector<int>& word,
                                      const std::vector<int>& labels) {
  Tableau p, q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    auto [r, c] = row_insert(p, word[k]);
    if (r == static_cast<int>(q.rows.size())) q.rows.emplace_back();
    q.rows[r].insert(q.rows[r].begin() + c, labels[k]);
  }
  return {p, q};
}

Partition rs_shape(const std::vector<int>& word) {
  Tableau p;
  for (int v : word) row_insert(p, v);
  return p.shape();
}

std::pair<BiTableau, BiTableau> rs_map(const SignedPerm& w) {
  std::vector<int> plus_word, plus_pos, minus_word, minus_pos;
  for (int i = 1; i <= w.rank(); ++i) {
    int v = w(i);
    if (v > 0) {
      plus_word.push_back(v);
      plus_pos.push_back(i);
    } else {
      minus_word.push_back(-v);
      minus_pos.push_back(i);
    }
  }
  auto [pp, qp] = rs_insert(plus_word, plus_pos);
  auto [pm, qm] = rs_insert(minus_word, minus_pos);
  return {BiTableau{pp, pm}, BiTableau{qp, qm}};
}

Bipartition shape_of(const SignedPerm& w) {
  const BnData& B = BnData::get(w.rank());
  const Decomposition& d = B.decompose(B.table().id(w));
  auto [lo, hi] = B.split_sigma(d);
  Partition plus = rs_shape(hi.window());
  Partition minus = rs_shape(lo.window()).conjugate();
  return {plus, minus};
}

Bipartition shape_of_rs(const SignedPerm& w) {
  auto [p, q] = rs_map(w);
  return {p.plus.shape(), p.minus.shape()};
}

int a_sym(const SignedPerm& sigma) {
  if (sigma.t_length() != 0)
    throw std::invalid_argument("a_sym expects an unsigned permutation");
  return a_lambda(rs_shape(sigma.window()));
}

GammaExp alpha(const SignedPerm& z) {
  const int n = z.rank();
  const BnData& B = BnData::get(n);
  const CoxeterTable& W = B.table();
  const Decomposition& d = B.decompose(W.id(z));
  const SignedPerm sigma = W.elem(d.sigma);
  const SignedPerm sl_sigma = W.elem(B.sigma_l(d.l)) * sigma;
  GammaExp route1{d.l, 2 * a_sym(sigma) - a_sym(sl_sigma)};

  Bipartition lam = shape_of(z);
  GammaExp route2{lam.minus.size(),
                  a_lambda(lam.plus) + 2 * a_lambda(lam.minus.conjugate()) -
                      a_lambda(lam.minus)};
  if (!(route1 == route2))
    throw std::logic_error("alpha routes disagree at " + z.str());
  return route1;
}

}  // namespace klb
