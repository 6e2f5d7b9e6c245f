#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "klb/signed_perm.hpp"

namespace klb {

using ElemId = std::uint32_t;

// Window of the lt-filtration: one layer, an initial segment, or a final
// segment of the t-length grading.
struct Filtration {
  enum class Mode { exact, at_most, at_least };
  int level = 0;
  Mode mode = Mode::exact;
  bool admits(int lt) const {
    switch (mode) {
      case Mode::exact: return lt == level;
      case Mode::at_most: return lt <= level;
      case Mode::at_least: return lt >= level;
    }
    return false;
  }
};

// A standard parabolic subgroup of the hyperoctahedral group W_n, fully
// enumerated. Elements are indexed by ids sorted by (length, window), so
// ascending id never decreases length. Products with generators, inverses,
// one reduced word per element and the full Bruhat order are precomputed.
//
// The Bruhat rows are built by the subword property: with a reduced word
// g . rest for y, the products of subwords of y are those of rest together
// with g times them, and the set of subword products is exactly the lower
// Bruhat interval of y.
class CoxeterTable {
 public:
  CoxeterTable(int n, std::vector<GenIndex> gens);

  // cached full table of W_n
  static const CoxeterTable& bn(int n);

  int window_rank() const { return n_; }
  const std::vector<GenIndex>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  std::size_t size() const { return elems_.size(); }

  const SignedPerm& elem(ElemId x) const { return elems_[x]; }
  ElemId id(const SignedPerm& p) const;
  std::optional<ElemId> find(const SignedPerm& p) const;
  ElemId identity() const { return 0; }
  ElemId longest() const { return static_cast<ElemId>(size() - 1); }

  int length(ElemId x) const { return length_[x]; }
  int t_len(ElemId x) const { return t_len_[x]; }
  int s_len(ElemId x) const { return length_[x] - t_len_[x]; }
  ElemId lmul(int local_gen, ElemId x) const { return lmul_[local_gen][x]; }
  ElemId rmul(ElemId x, int local_gen) const { return rmul_[local_gen][x]; }
  ElemId inverse(ElemId x) const { return inv_[x]; }
  ElemId mul(ElemId x, ElemId y) const;
  bool left_descent(int local_gen, ElemId x) const {
    return length_[lmul_[local_gen][x]] < length_[x];
  }
  bool right_descent(ElemId x, int local_gen) const {
    return length_[rmul_[local_gen][x]] < length_[x];
  }

  // one reduced word, leftmost factor first, as local generator indices
  std::vector<int> word(ElemId x) const;
  // x = g . parent(x) with length(parent) = length(x) - 1; gen is -1 at the identity
  int parent_gen(ElemId x) const { return parent_gen_[x]; }
  ElemId parent(ElemId x) const { return parent_[x]; }
  GenIndex global_gen(int local) const { return gens_[local]; }
  int local_gen(GenIndex global) const;  // -1 when the generator is absent

  bool bruhat_leq(ElemId x, ElemId y) const {
    return (bruhat_[y][x >> 6] >> (x & 63)) & 1u;
  }

  // ids of one length layer, ascending
  const std::vector<ElemId>& layer(int length) const { return layers_[length]; }
  int max_length() const { return static_cast<int>(layers_.size()) - 1; }

 private:
  int n_;
  std::vector<GenIndex> gens_;
  std::vector<SignedPerm> elems_;
  std::vector<int> length_, t_len_;
  std::vector<std::vector<ElemId>> lmul_, rmul_;  // [local_gen][elem]
  std::vector<ElemId> inv_;
  std::vector<int> parent_gen_;   // x = g . parent(x), length-reducing
  std::vector<ElemId> parent_;
  std::vector<std::vector<std::uint64_t>> bruhat_;  // row y: bitset of x <= y
  std::vector<std::vector<ElemId>> layers_;
  std::unordered_map<std::uint64_t, ElemId> index_;

  std::uint64_t encode(const SignedPerm& p) const;
};

// The coset decomposition w = a * a_l * sigma * b^{-1} of an element with
// t-length l: a and b are minimal coset representatives in Y_{l,n-l} and
// sigma lies in the parabolic S_{l,n-l}; the four lengths add up to l(w).
struct Decomposition {
  ElemId a = 0;
  ElemId b = 0;
  ElemId sigma = 0;
  int l = 0;
};

// Per-rank cache for the full hyperoctahedral group: distinguished elements,
// the Y_{l,n-l} families, the coset decomposition of every element, and the
// enumerated parabolic subgroups S_{l,n-l}. Built once, then read-only.
class BnData {
 public:
  static const BnData& get(int n);

  const CoxeterTable& table() const { return *table_; }
  int n() const { return n_; }

  ElemId t_i(int i) const;      // t_1 = t, t_{i+1} = s_i t_i s_i
  ElemId r_i(int i) const;      // r_1 = t, r_{i+1} = s_i r_i
  ElemId a_l(int l) const;      // a_l = r_1 r_2 ... r_l
  ElemId sigma_l(int l) const;  // longest element of S_l
  ElemId w0() const;
  ElemId sigma_n() const { return sigma_l(n_); }

  // minimal length representatives of S_n / S_{l,n-l}; |Y_{l,n-l}| = C(n,l)
  const std::vector<ElemId>& min_reps_Y(int l) const;

  const Decomposition& decompose(ElemId w) const { return decomp_[w]; }

  // the S_l x S_{n-l} factors of sigma, as permutations of rank l and n-l
  std::pair<SignedPerm, SignedPerm> split_sigma(const Decomposition& d) const;

  // enumerated parabolic S_{l,n-l} (equal parameter part), built lazily
  const CoxeterTable& slnl(int l) const;

  // ids of the symmetric group part (t_len == 0), ascending
  const std::vector<ElemId>& sn_elements() const { return sn_; }

  bool in_slnl(ElemId x, int l) const;  // membership of a W_n element

 private:
  explicit BnData(int n);
  int n_;
  std::unique_ptr<CoxeterTable> table_;
  std::vector<ElemId> t_i_, r_i_, a_l_, sigma_l_;
  std::vector<std::vector<ElemId>> y_reps_;        // per l
  std::vector<std::unordered_map<std::uint32_t, ElemId>> y_by_image_;  // subset mask -> rep
  std::vector<Decomposition> decomp_;
  std::vector<ElemId> sn_;
  mutable std::vector<std::unique_ptr<CoxeterTable>> slnl_;
};

}  // namespace klb
