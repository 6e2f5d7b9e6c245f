#include "klb/engine.hpp"

#include <stdexcept>

namespace klb {

std::vector<GammaExp> asym_weights(const CoxeterTable& G) {
  std::vector<GammaExp> w;
  w.reserve(G.num_gens());
  for (GenIndex g : G.gens()) w.push_back(g == 0 ? GammaExp{1, 0} : GammaExp{0, 1});
  return w;
}

Engine::Engine(int n)
    : n_(n), B_(BnData::get(n)), H_(B_.table(), asym_weights(B_.table())) {
  parabolic_.resize(n + 1);
}

Engine::~Engine() = default;

const KLContext<GammaExp>& Engine::kl() const {
  if (!kl_) {
    kl_ = std::make_unique<KLContext<GammaExp>>(H_);
    kl_->build();
  }
  return *kl_;
}

const StructTable<GammaExp>& Engine::struct_table() const {
  if (!st_) st_ = std::make_unique<StructTable<GammaExp>>(build_struct_table(kl()));
  return *st_;
}

const AFunction<GammaExp>& Engine::afunc() const {
  if (!af_) af_ = std::make_unique<AFunction<GammaExp>>(build_afunction(kl(), struct_table()));
  return *af_;
}

const CellData& Engine::cells() const {
  if (!cells_) cells_ = std::make_unique<CellData>(build_cells(kl()));
  return *cells_;
}

GammaExp Engine::alpha_of(ElemId z) const {
  if (alpha_.empty()) {
    alpha_.resize(W().size());
    alpha_known_.assign(W().size(), 0);
  }
  if (!alpha_known_[z]) {
    alpha_[z] = alpha(W().elem(z));
    alpha_known_[z] = 1;
  }
  return alpha_[z];
}

const Engine::Parabolic& Engine::parabolic(int l) const {
  if (l < 0 || l > n_) throw std::out_of_range("parabolic level");
  if (!parabolic_[l]) {
    auto par = std::make_unique<Parabolic>();
    par->T = &B_.slnl(l);
    par->H = std::make_unique<HeckeAlgebra<GammaExp>>(*par->T, asym_weights(*par->T));
    par->KL = std::make_unique<KLContext<GammaExp>>(*par->H);
    par->KL->build();
    par->ST = build_struct_table(*par->KL);
    par->AF = build_afunction(*par->KL, par->ST);
    par->CD = build_cells(*par->KL);
    par->par_of.assign(W().size(), -1);
    par->big_of.resize(par->T->size());
    for (ElemId p = 0; p < par->T->size(); ++p) {
      ElemId big = W().id(par->T->elem(p));
      par->par_of[big] = static_cast<int>(p);
      par->big_of[p] = big;
    }
    parabolic_[l] = std::move(par);
  }
  return *parabolic_[l];
}

HeckeElem<GammaExp> gamma_elem(const Engine& E, ElemId w) {
  const BnData& B = E.bn();
  const HeckeAlgebra<GammaExp>& H = E.H();
  const KLContext<GammaExp>& kl = E.kl();
  const Decomposition& d = B.decompose(w);
  HeckeElem<GammaExp> h = H.mul(kl.c_elem(B.a_l(d.l)), kl.c_elem(d.sigma));
  h = H.mul_T_left(d.a, std::move(h));
  h = H.mul_T_right(std::move(h), E.W().inverse(d.b));
  return h;
}

bool Engine::prec_strict(ElemId x, ElemId y) const {
  const CoxeterTable& G = W();
  if (G.t_len(x) != G.t_len(y)) return false;
  if (!G.bruhat_leq(x, y)) return false;
  const Decomposition& dx = B_.decompose(x);
  const Decomposition& dy = B_.decompose(y);
  const int l = dx.l;
  bool a_lt = dx.a != dy.a && G.bruhat_leq(dx.a, dy.a);
  bool b_lt = dx.b != dy.b && G.bruhat_leq(dx.b, dy.b);
  if (!a_lt && !b_lt) return false;
  const Parabolic& par = parabolic(l);
  return bit_get(par.CD.leqLR, par.par_of[dy.sigma], par.par_of[dx.sigma]);
}

Engine::GammaBasis build_gamma_basis(const Engine& E, bool reverse_tie_order) {
  const CoxeterTable& G = E.W();
  const HeckeAlgebra<GammaExp>& H = E.H();
  const KLContext<GammaExp>& kl = E.kl();
  const std::size_t N = G.size();
  Engine::GammaBasis gb;
  gb.gamma.resize(N);
  for (ElemId w = 0; w < N; ++w) gb.gamma[w] = gamma_elem(E, w);
  const std::size_t words = (N + 63) / 64;
  gb.prec.assign(N, std::vector<std::uint64_t>(words, 0));
  for (ElemId y = 0; y < N; ++y)
    for (ElemId x = 0; x < N; ++x)
      if (E.prec_strict(x, y)) bit_set(gb.prec, y, x);

  // triangular elimination against the Gamma family; the top surviving term
  // always belongs to some Gamma_x with x strictly below in the order
  auto eliminate = [&](HeckeElem<GammaExp> r, ElemId y,
                       const char* what) -> KLContext<GammaExp>::Row {
    KLContext<GammaExp>::Row out;
    while (!r.is_zero()) {
      // pick the last length layer present; inside it, tie order is free
      ElemId x = r.terms.back().first;
      if (reverse_tie_order) {
        const int len = G.length(x);
        for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it) {
          if (G.length(it->first) != len) break;
          x = it->first;
        }
      }
      BiLaurent c = r.coeff(x);
      if (!bit_get(gb.prec, y, x))
        throw std::logic_error(std::string(what) +
                               " expansion leaves the span: " + G.elem(x).str() +
                               " is not below " + G.elem(y).str());
      r.add_scaled(gb.gamma[x], -c);
      out.emplace_back(x, std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  gb.rho.resize(N);
  gb.pistar.resize(N);
  for (ElemId y = 0; y < N; ++y) {
    HeckeElem<GammaExp> r = H.bar(gb.gamma[y]);
    r -= gb.gamma[y];
    gb.rho[y] = eliminate(std::move(r), y, "bar");
    HeckeElem<GammaExp> s = kl.c_elem(y);
    s -= gb.gamma[y];
    gb.pistar[y] = eliminate(std::move(s), y, "KL");
  }
  return gb;
}

const Engine::GammaBasis& Engine::gamma_basis() const {
  if (!gb_) gb_ = std::make_unique<GammaBasis>(build_gamma_basis(*this, false));
  return *gb_;
}

}  // namespace klb
