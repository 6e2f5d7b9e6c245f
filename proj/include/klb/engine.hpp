#pragma once

#include <memory>

#include "klb/kl.hpp"
#include "klb/rs.hpp"

namespace klb {

// Weight of the asymptotic regime: t carries (1,0), every s_i carries (0,1),
// so L(w) = (l_t(w), l_s(w)) with the t-direction lexicographically dominant.
std::vector<GammaExp> asym_weights(const CoxeterTable& G);

// All tables of one rank in the asymptotic regime. Construction is cheap;
// every expensive table is built on first use and then frozen. The full
// structure-constant table is only intended for rank <= 3 sweeps.
class Engine {
 public:
  explicit Engine(int n);
  ~Engine();

  int n() const { return n_; }
  const BnData& bn() const { return B_; }
  const CoxeterTable& W() const { return B_.table(); }
  const HeckeAlgebra<GammaExp>& H() const { return H_; }

  const KLContext<GammaExp>& kl() const;
  const StructTable<GammaExp>& struct_table() const;
  const AFunction<GammaExp>& afunc() const;
  const CellData& cells() const;

  // alpha on every element, cached
  GammaExp alpha_of(ElemId z) const;

  // the parabolic S_{l,n-l} in the inherited (equal) parameter, with its own
  // KL basis, structure constants, a-function and cells
  struct Parabolic {
    const CoxeterTable* T = nullptr;
    std::unique_ptr<HeckeAlgebra<GammaExp>> H;
    std::unique_ptr<KLContext<GammaExp>> KL;
    StructTable<GammaExp> ST;
    AFunction<GammaExp> AF;
    CellData CD;
    std::vector<int> par_of;     // W_n id -> parabolic id, -1 outside
    std::vector<ElemId> big_of;  // parabolic id -> W_n id
  };
  const Parabolic& parabolic(int l) const;

  // The auxiliary basis Gamma_w = T_{a_w} C_{a_l} C_{sigma_w} T_{b_w^{-1}},
  // the order comparing elements through their decompositions, and the two
  // triangular expansions attached to it.
  struct GammaBasis {
    std::vector<HeckeElem<GammaExp>> gamma;
    BitMatrix prec;  // row y: strict lower set of the order
    std::vector<KLContext<GammaExp>::Row> rho;     // bar(Gamma_y) - Gamma_y
    std::vector<KLContext<GammaExp>::Row> pistar;  // C_w - Gamma_w
  };
  const GammaBasis& gamma_basis() const;

  bool prec_strict(ElemId x, ElemId y) const;
  bool prec_leq(ElemId x, ElemId y) const {
    return x == y || prec_strict(x, y);
  }

 private:
  int n_;
  const BnData& B_;
  HeckeAlgebra<GammaExp> H_;
  mutable std::unique_ptr<KLContext<GammaExp>> kl_;
  mutable std::unique_ptr<StructTable<GammaExp>> st_;
  mutable std::unique_ptr<AFunction<GammaExp>> af_;
  mutable std::unique_ptr<CellData> cells_;
  mutable std::vector<std::unique_ptr<Parabolic>> parabolic_;
  mutable std::unique_ptr<GammaBasis> gb_;
  mutable std::vector<GammaExp> alpha_;
  mutable std::vector<char> alpha_known_;
};

// Gamma_w from the coset decomposition of w; independent of the cached basis.
HeckeElem<GammaExp> gamma_elem(const Engine& E, ElemId w);

// rho/pistar elimination with a controllable tie order inside length layers;
// used to assert order independence of the triangular solve.
Engine::GammaBasis build_gamma_basis(const Engine& E, bool reverse_tie_order);

}  // namespace klb
