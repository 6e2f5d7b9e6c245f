#include "klb/specialize.hpp"

#include <stdexcept>

namespace klb {

MonoExp theta_gamma(GammaExp g, WeightPair wp) { return wp.b * g.tdeg + wp.a * g.sdeg; }

MonoLaurent theta_poly(const BiLaurent& p, WeightPair wp) {
  std::vector<MonoLaurent::Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) ts.emplace_back(theta_gamma(e, wp), c);
  return MonoLaurent::from_terms(std::move(ts));
}

HeckeElem<MonoExp> theta_elem(const HeckeElem<GammaExp>& h, WeightPair wp) {
  HeckeElem<MonoExp> out;
  out.terms.reserve(h.terms.size());
  for (const auto& [w, p] : h.terms) {
    MonoLaurent q = theta_poly(p, wp);
    if (!q.is_zero()) out.terms.emplace_back(w, std::move(q));
  }
  return out;
}

namespace {

std::vector<MonoExp> specialized_weights(const CoxeterTable& G, WeightPair wp) {
  std::vector<MonoExp> w;
  w.reserve(G.num_gens());
  for (GenIndex g : G.gens()) w.push_back(g == 0 ? wp.b : wp.a);
  return w;
}

}  // namespace

SpecializedEngine::SpecializedEngine(const Engine& E, WeightPair wp)
    : E_(E), wp_(wp), H_(E.W(), specialized_weights(E.W(), wp)) {
  if (wp.a < 1 || wp.b < 1) throw std::invalid_argument("weights must be positive");
}

bool SpecializedEngine::threshold_satisfied() const {
  return wp_.b > (E_.n() - 1) * wp_.a;
}

const KLContext<MonoExp>& SpecializedEngine::kl() const {
  if (!kl_) {
    kl_ = std::make_unique<KLContext<MonoExp>>(H_);
    kl_->build();
  }
  return *kl_;
}

const StructTable<MonoExp>& SpecializedEngine::struct_table() const {
  if (!st_) st_ = std::make_unique<StructTable<MonoExp>>(build_struct_table(kl()));
  return *st_;
}

const AFunction<MonoExp>& SpecializedEngine::afunc() const {
  if (!af_) af_ = std::make_unique<AFunction<MonoExp>>(build_afunction(kl(), struct_table()));
  return *af_;
}

const CellData& SpecializedEngine::cells() const {
  if (!cells_) cells_ = std::make_unique<CellData>(build_cells(kl()));
  return *cells_;
}

ElemId canonical_witness_elem(const Engine& E) {
  const int n = E.n();
  SignedPerm w = SignedPerm::generator(n, 0) * E.W().elem(E.bn().sigma_n());
  for (int i = 1; i <= n - 1; ++i) w = SignedPerm::generator(n, i) * w;
  return E.W().id(w);
}

PreservationReport check_preservation(const Engine& E, const SpecializedEngine& S) {
  PreservationReport rep;
  rep.rank = E.n();
  rep.wp = S.wp();
  rep.threshold_satisfied = S.threshold_satisfied();
  rep.canonical_witness = canonical_witness_elem(E);
  const CoxeterTable& G = E.W();
  for (ElemId w = 0; w < G.size(); ++w) {
    HeckeElem<MonoExp> image = theta_elem(E.kl().c_elem(w), S.wp());
    HeckeElem<MonoExp> target = S.kl().c_elem(w);
    if (image == target) continue;
    // locate the first basis element with differing coefficients
    HeckeElem<MonoExp> diff = image - target;
    ElemId y = diff.terms.front().first;
    PreservationWitness pw;
    pw.w = w;
    pw.first_diff = y;
    pw.coefficient = to_string(image.coeff(y));
    rep.witnesses.push_back(std::move(pw));
    if (w == rep.canonical_witness) rep.canonical_fails = true;
  }
  rep.preserved = rep.witnesses.empty();
  return rep;
}

WitnessCoefficient witness_coefficient(const Engine& E, WeightPair wp) {
  ElemId w = canonical_witness_elem(E);
  HeckeElem<MonoExp> image = theta_elem(gamma_elem(E, w), wp);
  WitnessCoefficient out;
  out.full = image.coeff(E.bn().sigma_n());
  if (!out.full.is_zero())
    out.leading = MonoLaurent::monomial(*out.full.deg(), out.full.leading_coeff());
  return out;
}

std::vector<CheckReport> compare_specialized_invariants(const Engine& E,
                                                        const SpecializedEngine& S) {
  if (!S.threshold_satisfied())
    throw std::invalid_argument("specialized invariants require b > (n-1) a");
  const CoxeterTable& G = E.W();
  const std::size_t N = G.size();
  const WeightPair wp = S.wp();
  std::vector<CheckReport> out;

  {
    CheckReport rep = CheckReport::make("specialized-h", E.n());
    const StructTable<GammaExp>& st = E.struct_table();
    const StructTable<MonoExp>& st0 = S.struct_table();
    for (ElemId x = 0; x < N; ++x)
      for (ElemId y = 0; y < N; ++y) {
        // theta of the two-parameter row must equal the one-parameter row
        HeckeElem<MonoExp> expect;
        for (const auto& [z, h] : st.rows[x][y]) {
          MonoLaurent q = theta_poly(h, wp);
          if (!q.is_zero()) expect.terms.emplace_back(z, std::move(q));
        }
        HeckeElem<MonoExp> got;
        got.terms = st0.rows[x][y];
        rep.require(expect == got, "h specialization fails at (" + G.elem(x).str() + "," +
                                       G.elem(y).str() + ")");
      }
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep = CheckReport::make("specialized-cells", E.n());
    const CellData& big = E.cells();
    const CellData& small = S.cells();
    for (auto r : {CellRelation::left, CellRelation::right, CellRelation::two_sided}) {
      const BitMatrix& mb = big.leq(r);
      const BitMatrix& ms = small.leq(r);
      for (ElemId y = 0; y < N; ++y)
        for (ElemId x = 0; x < N; ++x) {
          if (bit_get(ms, y, x))
            rep.require(bit_get(mb, y, x),
                        "specialized order not finer at (" + G.elem(x).str() + "," +
                            G.elem(y).str() + ")");
          rep.require(big.equiv(r, x, y) == small.equiv(r, x, y),
                      "cell equivalences differ at (" + G.elem(x).str() + "," +
                          G.elem(y).str() + ")");
        }
    }
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep = CheckReport::make("specialized-delta", E.n());
    const AFunction<GammaExp>& af = E.afunc();
    const AFunction<MonoExp>& af0 = S.afunc();
    for (ElemId z = 0; z < N; ++z) {
      rep.require(af0.delta[z] == theta_gamma(af.delta[z], wp),
                  "Delta specialization fails at " + G.elem(z).str());
      MonoExp alpha0 = theta_gamma(E.alpha_of(z), wp);
      bool involution = G.inverse(z) == z;
      rep.require(af0.delta[z] >= alpha0, "Delta below alpha at " + G.elem(z).str());
      rep.require((af0.delta[z] == alpha0) == involution,
                  "Delta = alpha exactly on involutions fails at " + G.elem(z).str());
    }
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep = CheckReport::make("specialized-alpha-monotone", E.n());
    rep.note = "as intended, see printed typo";
    const CellData& small = S.cells();
    for (ElemId z = 0; z < N; ++z)
      for (ElemId zp = 0; zp < N; ++zp) {
        if (G.t_len(z) != G.t_len(zp)) continue;
        if (!bit_get(small.leqLR, zp, z)) continue;  // z <= z' in the specialized order
        rep.require(theta_gamma(E.alpha_of(zp), wp) <= theta_gamma(E.alpha_of(z), wp),
                    "alpha not monotone at (" + G.elem(z).str() + "," + G.elem(zp).str() + ")");
      }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace klb
