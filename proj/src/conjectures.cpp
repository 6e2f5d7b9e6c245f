#include "klb/conjectures.hpp"

#include <algorithm>
#include <random>

namespace klb {

namespace {

using Tensor = std::vector<std::pair<std::pair<GammaExp, GammaExp>, Zint>>;

void tensor_acc(Tensor& acc, const BiLaurent& p, const BiLaurent& q) {
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms())
      acc.emplace_back(std::make_pair(e1, e2), c1 * c2);
}

void tensor_normalize(Tensor& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Tensor out;
  for (auto& term : t) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!term.second.is_zero()) {
      out.push_back(std::move(term));
    }
  }
  t = std::move(out);
}

struct Ctx {
  const Engine& E;
  const CoxeterTable& G;
  const StructTable<GammaExp>& st;
  const AFunction<GammaExp>& af;
  const CellData& cd;

  explicit Ctx(const Engine& e)
      : E(e), G(e.W()), st(e.struct_table()), af(e.afunc()), cd(e.cells()) {}

  Zint gamma(ElemId x, ElemId y, ElemId z) const {
    return gamma_coeff(E.kl(), st, af, x, y, z);
  }
  std::string at(std::initializer_list<ElemId> ids) const {
    std::string s = "(";
    bool first = true;
    for (ElemId i : ids) {
      if (!first) s += ",";
      s += G.elem(i).str();
      first = false;
    }
    return s + ")";
  }
};

bool p15_holds(const Ctx& c, ElemId x, ElemId xp, ElemId y, ElemId w) {
  Tensor lhs, rhs;
  for (const auto& [yp, p] : c.st.rows[w][xp]) {
    BiLaurent q = c.st.h(x, yp, y);
    if (!q.is_zero()) tensor_acc(lhs, p, q);
  }
  for (const auto& [yp, q] : c.st.rows[x][w]) {
    BiLaurent p = c.st.h(yp, xp, y);
    if (!p.is_zero()) tensor_acc(rhs, p, q);
  }
  tensor_normalize(lhs);
  tensor_normalize(rhs);
  return lhs == rhs;
}

}  // namespace

CheckReport conjecture_check(const Engine& E, int id, const ConjectureOptions& opts) {
  Ctx c(E);
  const std::size_t N = c.G.size();
  CheckReport rep = CheckReport::make("P" + std::to_string(id), E.n());
  switch (id) {
    case 1:
      for (ElemId z = 0; z < N; ++z)
        rep.require(c.af.a[z] <= c.af.delta[z], c.at({z}));
      break;
    case 2:
      for (ElemId d = 0; d < N; ++d) {
        if (!c.af.in_D[d]) continue;
        for (ElemId x = 0; x < N; ++x)
          for (ElemId y = 0; y < N; ++y)
            if (!c.gamma(x, y, d).is_zero())
              rep.require(x == c.G.inverse(y), c.at({x, y, d}));
      }
      break;
    case 3:
      for (ElemId y = 0; y < N; ++y) {
        int hits = 0;
        for (ElemId d = 0; d < N; ++d)
          if (c.af.in_D[d] && !c.gamma(c.G.inverse(y), y, d).is_zero()) ++hits;
        rep.require(hits == 1, c.at({y}) + " has " + std::to_string(hits) + " Duflo hits");
      }
      break;
    case 4:
      for (ElemId z = 0; z < N; ++z)
        for (ElemId zp = 0; zp < N; ++zp)
          if (bit_get(c.cd.leqLR, z, zp))  // z' <=_LR z
            rep.require(c.af.a[z] <= c.af.a[zp], c.at({zp, z}));
      break;
    case 5:
      for (ElemId d = 0; d < N; ++d) {
        if (!c.af.in_D[d]) continue;
        for (ElemId y = 0; y < N; ++y) {
          Zint g = c.gamma(c.G.inverse(y), y, d);
          if (g.is_zero()) continue;
          bool unit = g == Zint(1) || g == Zint(-1);
          rep.require(unit && g == c.af.n_z[d], c.at({y, d}));
        }
      }
      break;
    case 6:
      for (ElemId d = 0; d < N; ++d)
        if (c.af.in_D[d]) rep.require(c.G.inverse(d) == d, c.at({d}));
      break;
    case 7:
      for (ElemId x = 0; x < N; ++x)
        for (ElemId y = 0; y < N; ++y)
          for (ElemId z = 0; z < N; ++z)
            rep.require(c.gamma(x, y, z) == c.gamma(y, z, x), c.at({x, y, z}));
      break;
    case 8:
      for (ElemId x = 0; x < N; ++x)
        for (ElemId y = 0; y < N; ++y)
          for (ElemId z = 0; z < N; ++z) {
            if (c.gamma(x, y, z).is_zero()) continue;
            bool ok = c.cd.equiv(CellRelation::left, x, c.G.inverse(y)) &&
                      c.cd.equiv(CellRelation::left, y, c.G.inverse(z)) &&
                      c.cd.equiv(CellRelation::left, z, c.G.inverse(x));
            rep.require(ok, c.at({x, y, z}));
          }
      break;
    case 9:
    case 10:
    case 11: {
      CellRelation r = id == 9 ? CellRelation::left
                               : (id == 10 ? CellRelation::right : CellRelation::two_sided);
      const BitMatrix& leq = c.cd.leq(r);
      for (ElemId z = 0; z < N; ++z)
        for (ElemId zp = 0; zp < N; ++zp)
          if (bit_get(leq, z, zp) && c.af.a[zp] == c.af.a[z])
            rep.require(c.cd.equiv(r, z, zp), c.at({zp, z}));
      break;
    }
    case 12: {
      const int n = E.n();
      for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {  // proper subsets
        std::vector<GenIndex> gens;
        for (int g = 0; g < n; ++g)
          if (mask & (1u << g)) gens.push_back(g);
        CoxeterTable sub(n, gens);
        HeckeAlgebra<GammaExp> subH(sub, asym_weights(sub));
        KLContext<GammaExp> subKL(subH);
        subKL.build();
        StructTable<GammaExp> subST = build_struct_table(subKL);
        AFunction<GammaExp> subAF = build_afunction(subKL, subST);
        for (ElemId z = 0; z < sub.size(); ++z) {
          ElemId big = c.G.id(sub.elem(z));
          rep.require(subAF.a[z] == c.af.a[big],
                      c.at({big}) + " in parabolic mask " + std::to_string(mask));
        }
      }
      break;
    }
    case 13: {
      for (const auto& cell : c.cd.L.classes) {
        std::vector<ElemId> duflos;
        for (ElemId z : cell)
          if (c.af.in_D[z]) duflos.push_back(z);
        rep.require(duflos.size() == 1, "left cell of " + c.G.elem(cell[0]).str() + " has " +
                                             std::to_string(duflos.size()) + " Duflo elements");
        if (duflos.size() == 1)
          for (ElemId y : cell)
            rep.require(!c.gamma(c.G.inverse(y), y, duflos[0]).is_zero(),
                        c.at({y, duflos[0]}));
      }
      break;
    }
    case 14:
      for (ElemId z = 0; z < N; ++z)
        rep.require(c.cd.equiv(CellRelation::two_sided, z, c.G.inverse(z)), c.at({z}));
      break;
    case 15: {
      if (N <= opts.p15_exhaustive_limit) {
        for (ElemId x = 0; x < N; ++x)
          for (ElemId xp = 0; xp < N; ++xp)
            for (ElemId y = 0; y < N; ++y)
              for (ElemId w = 0; w < N; ++w) {
                if (!(c.af.a[y] == c.af.a[w])) continue;
                rep.require(p15_holds(c, x, xp, y, w), c.at({x, xp, y, w}));
              }
        rep.note = "exhaustive";
      } else {
        std::mt19937_64 rng(opts.seed);
        std::size_t done = 0;
        while (done < opts.p15_samples) {
          ElemId x = static_cast<ElemId>(rng() % N);
          ElemId xp = static_cast<ElemId>(rng() % N);
          ElemId y = static_cast<ElemId>(rng() % N);
          ElemId w = static_cast<ElemId>(rng() % N);
          if (!(c.af.a[y] == c.af.a[w])) continue;
          rep.require(p15_holds(c, x, xp, y, w), c.at({x, xp, y, w}));
          ++done;
        }
        rep.note = "sampled " + std::to_string(opts.p15_samples) + " quadruples, seed " +
                   std::to_string(opts.seed);
      }
      break;
    }
    default:
      throw std::invalid_argument("conjecture id out of range");
  }
  return rep;
}

std::vector<CheckReport> conjecture_check_all(const Engine& E, const ConjectureOptions& opts) {
  std::vector<CheckReport> out;
  for (int id = 1; id <= 15; ++id) out.push_back(conjecture_check(E, id, opts));
  return out;
}

}  // namespace klb
