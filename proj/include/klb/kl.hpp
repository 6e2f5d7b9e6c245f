#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "klb/hecke.hpp"

namespace klb {

// Thrown when the triangular bar-correction meets a forced coefficient that
// cannot be completed to a bar-invariant element. This never happens for a
// correct Hecke algebra; it signals an arithmetic bug and aborts the build.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Splits q as p - bar(p) with p strictly negative, which requires q to be
// antisymmetric under bar with no constant term.
template <class E>
LaurentPoly<E> forced_negative_part(const LaurentPoly<E>& q) {
  LaurentPoly<E> p = q.negative_part();
  if (!(p - p.bar() == q))
    throw ConsistencyError("bar-correction residue is not antisymmetric: " + to_string(q));
  return p;
}

// The Kazhdan-Lusztig basis of a Hecke algebra: for every w the unique
// bar-invariant element C_w = T_w + sum of strictly negative lower terms.
//
// Construction is a direct triangular solve: starting from bar(T_w), the
// coefficients p*_{y,w} are forced layer by layer in decreasing length, each
// one as the strictly negative part of the accumulated residue. No recursion
// on mu-coefficients is used, so the same code serves every weight regime.
template <class E>
class KLContext {
 public:
  using Poly = LaurentPoly<E>;
  using Elem = HeckeElem<E>;
  using Row = std::vector<std::pair<ElemId, Poly>>;  // ascending by element id

  explicit KLContext(const HeckeAlgebra<E>& H) : H_(H) {}

  const HeckeAlgebra<E>& algebra() const { return H_; }
  const CoxeterTable& group() const { return H_.group(); }
  bool built() const { return built_; }

  // reverse_tie_order only permutes the processing order inside a length
  // layer; the result must be identical either way (uniqueness of C_w).
  void build(bool reverse_tie_order = false) {
    const CoxeterTable& G = group();
    const std::size_t N = G.size();
    rows_.assign(N, {});
    std::vector<Poly> F(N);
    std::vector<ElemId> touched;
    for (ElemId w = 0; w < N; ++w) {
      // residue accumulator starts at bar(T_w)
      touched.clear();
      for (const auto& [y, p] : H_.bar_basis(w).terms) {
        F[y] = p;
        touched.push_back(y);
      }
      Row row;
      row.emplace_back(w, Poly::one());
      for (int d = G.length(w) - 1; d >= 0; --d) {
        const std::vector<ElemId>& layer = G.layer(d);
        for (std::size_t k = 0; k < layer.size(); ++k) {
          ElemId y = layer[reverse_tie_order ? layer.size() - 1 - k : k];
          const Poly& q = F[y];
          if (q.is_zero()) continue;
          Poly p = forced_negative_part(q);
          if (p.is_zero()) continue;
          if (!G.bruhat_leq(y, w))
            throw ConsistencyError("support escapes the Bruhat interval");
          // fold bar(p) * bar(T_y) into the residue
          const Poly pb = p.bar();
          for (const auto& [x, r] : H_.bar_basis(y).terms) {
            if (F[x].is_zero()) touched.push_back(x);
            F[x] += pb * r;
          }
          row.emplace_back(y, std::move(p));
        }
      }
      // the residue must now equal the assembled element: bar(C_w) = C_w
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t ri = 0;
      for (ElemId x : touched) {
        Poly expect;
        if (ri < row.size() && row[ri].first == x) expect = row[ri++].second;
        if (!(F[x] == expect))
          throw ConsistencyError("assembled element is not bar-invariant");
        F[x] = Poly();
      }
      if (ri != row.size()) throw ConsistencyError("assembled element is not bar-invariant");
      rows_[w] = std::move(row);
    }
    built_ = true;
  }

  // p*_{y,w}; zero unless y <= w
  Poly pstar(ElemId y, ElemId w) const {
    require_built();
    for (const auto& [x, p] : rows_[w])
      if (x == y) return p;
    return {};
  }

  const Row& row(ElemId w) const {
    require_built();
    return rows_[w];
  }

  Elem c_elem(ElemId w) const {
    require_built();
    Elem h;
    h.terms = rows_[w];
    return h;
  }

  // change of basis: coordinates of h in the C-basis, by repeatedly
  // stripping the highest surviving T-term
  Row to_c(Elem h) const {
    require_built();
    Row coords;
    while (!h.is_zero()) {
      auto [y, c] = h.terms.back();
      coords.emplace_back(y, c);
      Elem cy;
      cy.terms = rows_[y];
      h.add_scaled(cy, -c);
    }
    std::sort(coords.begin(), coords.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return coords;
  }

  Elem from_c(const Row& coords) const {
    require_built();
    Elem h;
    for (const auto& [y, c] : coords) {
      Elem cy;
      cy.terms = rows_[y];
      h.add_scaled(cy, c);
    }
    return h;
  }

  Elem project_C(const Elem& h, Filtration f) const {
    require_built();
    Row kept;
    for (const auto& [y, c] : to_c(h))
      if (f.admits(group().t_len(y))) kept.emplace_back(y, c);
    return from_c(kept);
  }

  // structure constants of C_x C_y, as C-basis coordinates {z -> h_{x,y,z}}
  Row struct_consts(ElemId x, ElemId y) const {
    require_built();
    return to_c(H_.mul(c_elem(x), c_elem(y)));
  }

 private:
  const HeckeAlgebra<E>& H_;
  std::vector<Row> rows_;
  bool built_ = false;

  void require_built() const {
    if (!built_) throw std::logic_error("KL table not built");
  }
};

// Full table of structure constants h_{x,y,z} for one rank. Rows are built
// per y by sweeping T_w C_y over the whole group once, so each pair costs a
// handful of sparse merges.
template <class E>
struct StructTable {
  using Poly = LaurentPoly<E>;
  using Row = typename KLContext<E>::Row;
  std::vector<std::vector<Row>> rows;  // rows[x][y]

  const Row& row(ElemId x, ElemId y) const { return rows[x][y]; }
  Poly h(ElemId x, ElemId y, ElemId z) const {
    for (const auto& [u, p] : rows[x][y])
      if (u == z) return p;
    return {};
  }
};

template <class E>
StructTable<E> build_struct_table(const KLContext<E>& kl) {
  const CoxeterTable& G = kl.group();
  const HeckeAlgebra<E>& H = kl.algebra();
  const std::size_t N = G.size();
  StructTable<E> st;
  st.rows.assign(N, std::vector<typename StructTable<E>::Row>(N));
  std::vector<HeckeElem<E>> twc(N);
  for (ElemId y = 0; y < N; ++y) {
    twc[0] = kl.c_elem(y);
    for (ElemId w = 1; w < N; ++w)
      twc[w] = H.mul_gen_left(G.parent_gen(w), twc[G.parent(w)]);
    for (ElemId x = 0; x < N; ++x) {
      HeckeElem<E> prod;
      for (const auto& [u, c] : kl.row(x)) prod.add_scaled(twc[u], c);
      st.rows[x][y] = kl.to_c(std::move(prod));
    }
  }
  return st;
}

// The a-function and its companions: a(z) as the maximal degree of the
// structure constants landing on z, Delta(z) and n_z from the coefficient of
// C_z on T_1, and the set D where the two agree.
template <class E>
struct AFunction {
  std::vector<E> a;
  std::vector<E> delta;
  std::vector<Zint> n_z;
  std::vector<char> in_D;
};

template <class E>
AFunction<E> build_afunction(const KLContext<E>& kl, const StructTable<E>& st) {
  const std::size_t N = kl.group().size();
  AFunction<E> af;
  af.a.assign(N, E{});  // h_{1,z,z} = 1 guarantees the max is at least 0
  af.delta.resize(N);
  af.n_z.resize(N);
  af.in_D.assign(N, 0);
  for (ElemId x = 0; x < N; ++x)
    for (ElemId y = 0; y < N; ++y)
      for (const auto& [z, p] : st.rows[x][y]) {
        auto d = p.deg();
        if (d && af.a[z] < *d) af.a[z] = *d;
      }
  for (ElemId z = 0; z < N; ++z) {
    LaurentPoly<E> p = kl.pstar(0, z);
    if (p.is_zero()) throw std::logic_error("p*_{1,z} vanished");
    af.delta[z] = -*p.deg();
    af.n_z[z] = p.leading_coeff();
    af.in_D[z] = (af.a[z] == af.delta[z]) ? 1 : 0;
  }
  return af;
}

// gamma_{x,y,z} in the convention where the coefficient of v^{a(z)} in
// h_{x,y,z} is gamma indexed by (x, y, z^{-1}).
template <class E>
Zint gamma_coeff(const KLContext<E>& kl, const StructTable<E>& st, const AFunction<E>& af,
                 ElemId x, ElemId y, ElemId z) {
  ElemId zi = kl.group().inverse(z);
  return st.h(x, y, zi).coeff(af.a[zi]);
}

// --- cells ----------------------------------------------------------------

using BitMatrix = std::vector<std::vector<std::uint64_t>>;

inline bool bit_get(const BitMatrix& m, std::size_t row, std::size_t col) {
  return (m[row][col >> 6] >> (col & 63)) & 1u;
}
inline void bit_set(BitMatrix& m, std::size_t row, std::size_t col) {
  m[row][col >> 6] |= 1ull << (col & 63);
}

enum class CellRelation { left, right, two_sided };

struct CellPartition {
  std::vector<std::vector<ElemId>> classes;  // deterministic: by smallest member
  std::vector<int> class_of;
  std::vector<std::vector<char>> class_leq;    // quotient partial order
  std::vector<std::pair<int, int>> hasse;      // covering pairs (lower, upper)
};

struct CellData {
  // row y holds the set of x with x <= y in the named preorder
  BitMatrix leqL, leqR, leqLR;
  CellPartition L, R, LR;

  const BitMatrix& leq(CellRelation r) const {
    switch (r) {
      case CellRelation::left: return leqL;
      case CellRelation::right: return leqR;
      default: return leqLR;
    }
  }
  const CellPartition& partition(CellRelation r) const {
    switch (r) {
      case CellRelation::left: return L;
      case CellRelation::right: return R;
      default: return LR;
    }
  }
  bool equiv(CellRelation r, ElemId x, ElemId y) const {
    const BitMatrix& m = leq(r);
    return bit_get(m, y, x) && bit_get(m, x, y);
  }
};

namespace detail {

inline BitMatrix closure_from_edges(const std::vector<std::vector<ElemId>>& adj) {
  const std::size_t N = adj.size();
  const std::size_t W = (N + 63) / 64;
  BitMatrix m(N, std::vector<std::uint64_t>(W, 0));
  std::vector<ElemId> stack;
  for (ElemId y = 0; y < N; ++y) {
    stack.assign(1, y);
    bit_set(m, y, y);
    while (!stack.empty()) {
      ElemId u = stack.back();
      stack.pop_back();
      for (ElemId x : adj[u])
        if (!bit_get(m, y, x)) {
          bit_set(m, y, x);
          stack.push_back(x);
        }
    }
  }
  return m;
}

inline CellPartition partition_from_bits(const BitMatrix& m, std::size_t N) {
  CellPartition part;
  part.class_of.assign(N, -1);
  for (ElemId x = 0; x < N; ++x) {
    if (part.class_of[x] >= 0) continue;
    int cls = static_cast<int>(part.classes.size());
    part.classes.emplace_back();
    for (ElemId y = x; y < N; ++y)
      if (part.class_of[y] < 0 && bit_get(m, y, x) && bit_get(m, x, y)) {
        part.class_of[y] = cls;
        part.classes[cls].push_back(y);
      }
  }
  const std::size_t k = part.classes.size();
  part.class_leq.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      part.class_leq[i][j] = bit_get(m, part.classes[j][0], part.classes[i][0]) ? 1 : 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !part.class_leq[i][j]) continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < k && covering; ++mid)
        if (mid != i && mid != j && part.class_leq[i][mid] && part.class_leq[mid][j])
          covering = false;
      if (covering) part.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return part;
}

}  // namespace detail

// Preorders generated by multiplication of the KL basis by the generators:
// x <=_L y whenever C_x appears in some C_s C_y, closed transitively; the
// right and two-sided versions analogously.
template <class E>
CellData build_cells(const KLContext<E>& kl) {
  const CoxeterTable& G = kl.group();
  const HeckeAlgebra<E>& H = kl.algebra();
  const std::size_t N = G.size();
  std::vector<std::vector<ElemId>> adjL(N), adjR(N), adjLR(N);
  for (ElemId y = 0; y < N; ++y) {
    for (int g = 0; g < G.num_gens(); ++g) {
      HeckeElem<E> cy = kl.c_elem(y);
      for (const auto& [x, p] : kl.to_c(H.mul_gen_left(g, cy)))
        if (x != y) adjL[y].push_back(x);
      for (const auto& [x, p] : kl.to_c(H.mul_gen_right(cy, g)))
        if (x != y) adjR[y].push_back(x);
    }
    for (ElemId x : adjL[y]) adjLR[y].push_back(x);
    for (ElemId x : adjR[y]) adjLR[y].push_back(x);
  }
  CellData cd;
  cd.leqL = detail::closure_from_edges(adjL);
  cd.leqR = detail::closure_from_edges(adjR);
  cd.leqLR = detail::closure_from_edges(adjLR);
  cd.L = detail::partition_from_bits(cd.leqL, N);
  cd.R = detail::partition_from_bits(cd.leqR, N);
  cd.LR = detail::partition_from_bits(cd.leqLR, N);
  return cd;
}

// expansion of T_{w0}^m C_y in the C-basis; negative powers go through the
// precomputed inverse of T_{w0}
template <class E>
typename KLContext<E>::Row tw0_expand(const KLContext<E>& kl, int m, ElemId y) {
  const HeckeAlgebra<E>& H = kl.algebra();
  const ElemId w0 = kl.group().longest();
  HeckeElem<E> h = kl.c_elem(y);
  if (m >= 0) {
    for (int i = 0; i < m; ++i) h = H.mul_T_left(w0, h);
  } else {
    HeckeElem<E> inv = H.invert_basis(w0);
    for (int i = 0; i < -m; ++i) h = H.mul(inv, h);
  }
  return kl.to_c(h);
}

}  // namespace klb
