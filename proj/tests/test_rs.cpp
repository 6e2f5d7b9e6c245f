#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "klb/coxeter.hpp"
#include "klb/rs.hpp"

using namespace klb;

namespace {

// all partitions of k, as an enumeration oracle
std::vector<Partition> partitions_of(int k, int max_part = -1) {
  if (max_part < 0) max_part = k;
  std::vector<Partition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = std::min(k, max_part); first >= 1; --first)
    for (const Partition& rest : partitions_of(k - first, first)) {
      std::vector<int> parts{first};
      parts.insert(parts.end(), rest.parts.begin(), rest.parts.end());
      out.emplace_back(parts);
    }
  return out;
}

// number of standard fillings, by recursive corner removal
long f_lambda(const Partition& lam, std::map<std::vector<int>, long>& memo) {
  if (lam.parts.empty()) return 1;
  auto it = memo.find(lam.parts);
  if (it != memo.end()) return it->second;
  long total = 0;
  for (std::size_t r = 0; r < lam.parts.size(); ++r) {
    const bool removable =
        (r + 1 == lam.parts.size()) || lam.parts[r] > lam.parts[r + 1];
    if (!removable) continue;
    std::vector<int> smaller = lam.parts;
    smaller[r] -= 1;
    total += f_lambda(Partition(smaller), memo);
  }
  memo[lam.parts] = total;
  return total;
}

long binom(int n, int k) {
  long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

bool standard(const Tableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c + 1 < t.rows[r].size() && t.rows[r][c] >= t.rows[r][c + 1]) return false;
      if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
          t.rows[r][c] >= t.rows[r + 1][c])
        return false;
    }
  return true;
}

std::string key(const BiTableau& t) { return t.plus.str() + "|" + t.minus.str(); }

}  // namespace

TEST_CASE("partition basics") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  Partition p({4, 2, 1});
  CHECK(p.conjugate() == Partition({3, 2, 1, 1}));
  CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition().conjugate() == Partition());
  CHECK(p.size() == 7);
  CHECK(Bipartition{Partition({2, 1}), Partition({1})}.str() == "(2,1|1)");
  CHECK(Bipartition{Partition({2}), Partition()}.str() == "(2|)");
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({1, 1}), Partition({2})));
  CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})));
  CHECK(!dominance_leq(Partition({2, 1}), Partition({1, 1, 1})));
  CHECK(dominance_leq(Partition({1, 1, 1}), Partition({2, 1})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("a_lambda") {
  CHECK(a_lambda(Partition({5})) == 0);
  CHECK(a_lambda(Partition({1, 1, 1, 1})) == 6);
  CHECK(a_lambda(Partition({2, 1})) == 1);
  CHECK(a_lambda(Partition()) == 0);
}

TEST_CASE("row insertion examples") {
  auto [p, q] = rs_insert({3, 1, 2}, {1, 2, 3});
  CHECK(p.rows == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(q.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(rs_shape({2, 1}) == Partition({1, 1}));
  CHECK(rs_shape({1, 2}) == Partition({2}));
  CHECK(rs_shape({}) == Partition());
}

TEST_CASE("spec'd images") {
  {
    auto [p, q] = rs_map(SignedPerm::identity(3));
    CHECK(p.plus.rows == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(p.minus.rows.empty());
    CHECK(p == q);
  }
  CHECK(shape_of(SignedPerm({-1, -2, -3})) == Bipartition{Partition(), Partition({3})});
  CHECK(shape_of(SignedPerm({-1, 2})) == Bipartition{Partition({1}), Partition({1})});
  CHECK(shape_of(SignedPerm::identity(4)) == Bipartition{Partition({4}), Partition()});
}

TEST_CASE("bijection onto same-shape pairs") {
  for (int n = 1; n <= 4; ++n) {
    const CoxeterTable& W = CoxeterTable::bn(n);
    std::map<std::vector<int>, long> memo;
    // enumerate bipartition shapes and their standard bi-tableau counts
    std::map<std::string, long> expected;  // shape -> (#SBT)^2
    long total = 0;
    for (int l = 0; l <= n; ++l)
      for (const Partition& minus : partitions_of(l))
        for (const Partition& plus : partitions_of(n - l)) {
          long count = binom(n, l) * f_lambda(plus, memo) * f_lambda(minus, memo);
          Bipartition bp{plus, minus};
          expected[bp.str()] = count * count;
          total += count * count;
        }
    CHECK(total == static_cast<long>(W.size()));

    std::set<std::string> images;
    std::map<std::string, long> by_shape;
    for (ElemId x = 0; x < W.size(); ++x) {
      const SignedPerm& w = W.elem(x);
      auto [p, q] = rs_map(w);
      CHECK(standard(p.plus));
      CHECK(standard(p.minus));
      CHECK(standard(q.plus));
      CHECK(standard(q.minus));
      CHECK(p.plus.shape() == q.plus.shape());
      CHECK(p.minus.shape() == q.minus.shape());
      CHECK(static_cast<int>(p.minus.shape().size()) == w.t_length());
      images.insert(key(p) + "//" + key(q));
      by_shape[Bipartition{p.plus.shape(), p.minus.shape()}.str()] += 1;
      // insertion and recording swap under inversion
      auto [pi, qi] = rs_map(w.inverse());
      CHECK(pi == q);
      CHECK(qi == p);
    }
    CHECK(images.size() == W.size());  // injectivity
    CHECK(by_shape == expected);       // surjectivity shape by shape
  }
}

TEST_CASE("two routes to the shape") {
  for (int n = 1; n <= 3; ++n) {
    const CoxeterTable& W = CoxeterTable::bn(n);
    for (ElemId x = 0; x < W.size(); ++x)
      CHECK(shape_of(W.elem(x)) == shape_of_rs(W.elem(x)));
  }
}

TEST_CASE("alpha") {
  CHECK(alpha(SignedPerm::identity(3)) == GammaExp{0, 0});
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> w0(n);
    for (int i = 0; i < n; ++i) w0[i] = -(i + 1);
    CHECK(alpha(SignedPerm(w0)) == GammaExp{n, n * (n - 1)});
  }
  CHECK(alpha(SignedPerm({-1, 2})) == GammaExp{1, 0});
  CHECK(a_sym(SignedPerm({2, 1})) == 1);
  CHECK(a_sym(SignedPerm({3, 2, 1})) == 3);
  CHECK_THROWS_AS(a_sym(SignedPerm({-1, 2})), std::invalid_argument);
}
