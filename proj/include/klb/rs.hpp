#pragma once

#include <string>
#include <vector>

#include "klb/laurent.hpp"
#include "klb/signed_perm.hpp"

namespace klb {

// Integer partition, weakly decreasing positive parts, no trailing zeros.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;
  bool operator==(const Partition&) const = default;
  std::string str() const;  // "2,1"; the empty partition renders as ""
};

// Prefix-sum comparison; defined only for partitions of the same number.
bool dominance_leq(const Partition& a, const Partition& b);

// sum of (i-1) * lambda_i
int a_lambda(const Partition& lambda);

struct Bipartition {
  Partition plus, minus;
  bool operator==(const Bipartition&) const = default;
  std::string str() const;  // "(2,1|1)"
};

// Standard Young tableau; rows of strictly increasing entries, columns
// strictly increasing, entries an arbitrary subset of {1..n}.
struct Tableau {
  std::vector<std::vector<int>> rows;
  Partition shape() const;
  bool operator==(const Tableau&) const = default;
  std::string str() const;  // "[[1,3],[2]]"
};

// Schensted row insertion; returns the (row, column) of the new cell.
std::pair<int, int> row_insert(Tableau& t, int value);

// Row insertion of a whole word; the recording tableau gets labels[k] at the
// cell created by word[k].
std::pair<Tableau, Tableau> rs_insert(const std::vector<int>& word,
                                      const std::vector<int>& labels);

// shape of the row-insertion tableau of an unsigned permutation window
Partition rs_shape(const std::vector<int>& word);

struct BiTableau {
  Tableau plus, minus;
  bool operator==(const BiTableau&) const = default;
};

// Generalized Robinson-Schensted correspondence for signed permutations:
// scanning w(1..n), positive values are row-inserted into the plus component
// and the absolute values of negative entries are row-inserted into the
// minus component; recording tableaux collect the positions. The insertion
// convention was fixed by requiring the two computation paths of shape_of to
// agree (and is pinned by the cell correspondences in the test suite).
std::pair<BiTableau, BiTableau> rs_map(const SignedPerm& w);

// (shape of the plus component, shape of the minus component), computed from
// the coset decomposition: the plus shape is the Robinson-Schensted shape of
// sigma_w^+, the minus shape the conjugate of the shape of sigma_w^-.
Bipartition shape_of(const SignedPerm& w);

// shape read off the insertion tableaux themselves
Bipartition shape_of_rs(const SignedPerm& w);

// a computed inside the symmetric group through the Robinson-Schensted
// shape of the window
int a_sym(const SignedPerm& sigma);

// The pair (l_t(z), 2 a_S(sigma_z) - a_S(sigma_l sigma_z)), also computable
// from the shapes as (|lambda^-|, a_{lambda^+} + 2 a_{lambda^-*} -
// a_{lambda^-}); both routes are evaluated and must agree.
GammaExp alpha(const SignedPerm& z);

}  // namespace klb
