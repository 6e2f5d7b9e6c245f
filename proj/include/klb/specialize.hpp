#pragma once

#include "klb/engine.hpp"
#include "klb/report.hpp"

namespace klb {

// One-parameter weights: b on t and a on every s_i, both positive.
struct WeightPair {
  std::int64_t a = 1;
  std::int64_t b = 1;
  bool operator==(const WeightPair&) const = default;
};

// The exponent map (r,s) -> br + as: the t-count r carries weight b.
MonoExp theta_gamma(GammaExp g, WeightPair wp);
MonoLaurent theta_poly(const BiLaurent& p, WeightPair wp);
HeckeElem<MonoExp> theta_elem(const HeckeElem<GammaExp>& h, WeightPair wp);

// The one-parameter Hecke algebra of W_n at the given weights, with its own
// KL basis; the generic engine runs unchanged over the rank-one exponents.
class SpecializedEngine {
 public:
  SpecializedEngine(const Engine& E, WeightPair wp);

  WeightPair wp() const { return wp_; }
  bool threshold_satisfied() const;  // b > (n-1) a
  const HeckeAlgebra<MonoExp>& H() const { return H_; }
  const KLContext<MonoExp>& kl() const;
  const StructTable<MonoExp>& struct_table() const;
  const AFunction<MonoExp>& afunc() const;
  const CellData& cells() const;

 private:
  const Engine& E_;
  WeightPair wp_;
  HeckeAlgebra<MonoExp> H_;
  mutable std::unique_ptr<KLContext<MonoExp>> kl_;
  mutable std::unique_ptr<StructTable<MonoExp>> st_;
  mutable std::unique_ptr<AFunction<MonoExp>> af_;
  mutable std::unique_ptr<CellData> cells_;
};

struct PreservationWitness {
  ElemId w = 0;
  ElemId first_diff = 0;  // first basis element where the coefficients differ
  std::string coefficient;  // the image coefficient there, rendered
};

struct PreservationReport {
  int rank = 0;
  WeightPair wp;
  bool threshold_satisfied = false;
  bool preserved = false;
  std::vector<PreservationWitness> witnesses;
  ElemId canonical_witness = 0;  // s_{n-1} ... s_1 t sigma_n
  bool canonical_fails = false;
  // consistency with the threshold theory: preserved above the threshold,
  // broken below it with the canonical witness among the failures
  bool consistent() const {
    if (threshold_satisfied) return preserved;
    return !preserved && canonical_fails;
  }
};

// compares theta(C_w) with the one-parameter KL basis element for every w
PreservationReport check_preservation(const Engine& E, const SpecializedEngine& S);

ElemId canonical_witness_elem(const Engine& E);

// Coefficient of theta(Gamma_w) on T_{sigma_n} for the canonical witness.
// Its leading monomial is v^{(n-1)a - b}, which is strictly negative exactly
// above the preservation threshold; the full value carries trailing lower
// terms and is reported alongside.
struct WitnessCoefficient {
  MonoLaurent full;
  MonoLaurent leading;
};
WitnessCoefficient witness_coefficient(const Engine& E, WeightPair wp);

// Verifications valid above the threshold: the structure constants
// specialize termwise, the cell preorders and partitions transfer, Delta
// specializes, Delta >= alpha with equality exactly on involutions, and
// alpha is monotone along the specialized two-sided order at equal lt.
std::vector<CheckReport> compare_specialized_invariants(const Engine& E,
                                                        const SpecializedEngine& S);

}  // namespace klb
