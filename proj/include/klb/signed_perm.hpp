#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace klb {

// Generator index: 0 denotes t (the sign change), i in 1..n-1 denotes s_i
// (the adjacent transposition of positions/values i, i+1).
using GenIndex = int;

// A signed permutation of {1..n} in window notation [w(1),...,w(n)].
// Conventions, fixed once for the whole library:
//   * t has window [-1, 2, ..., n] and s_i swaps the entries i, i+1;
//   * (x*y)(i) = x(y(i)), i.e. the product applies y first, then x;
//   * from_word multiplies the listed generators left to right, so
//     from_word({1,0}) is s_1 * t.
class SignedPerm {
 public:
  SignedPerm() = default;  // rank 0
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int n);
  static SignedPerm generator(int n, GenIndex g);
  static SignedPerm from_word(int n, std::span<const GenIndex> word);
  static SignedPerm from_word(int n, std::initializer_list<GenIndex> word);

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  // signed action: i may be negative, and w(-i) = -w(i)
  int operator()(int i) const;

  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool is_identity() const;

  // Coxeter length and its split into t- and s-contributions. The closed
  // formulas here are validated against an exhaustive word-search oracle in
  // the test suite before being relied on at higher ranks.
  int length() const;
  int t_length() const;  // number of negative window entries
  int s_length() const { return length() - t_length(); }

  bool operator==(const SignedPerm&) const = default;

  // "[-1,3,2]"
  std::string str() const;
  // Accepts window notation "[-1,3,2]" or a word "t s1 s2" / "e"; the rank
  // must be supplied for the word form and is checked against the window form.
  static SignedPerm parse(const std::string& text, int n);

 private:
  std::vector<int> w_;
};

std::string window_str(const std::vector<int>& w);

}  // namespace klb
