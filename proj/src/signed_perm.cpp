#include "klb/signed_perm.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace klb {

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("invalid signed permutation window " + window_str(w_));
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  SignedPerm p;
  p.w_ = std::move(w);
  return p;
}

SignedPerm SignedPerm::generator(int n, GenIndex g) {
  if (g < 0 || g >= n) throw std::out_of_range("generator index out of range");
  SignedPerm p = identity(n);
  if (g == 0)
    p.w_[0] = -1;
  else
    std::swap(p.w_[g - 1], p.w_[g]);
  return p;
}

SignedPerm SignedPerm::from_word(int n, std::span<const GenIndex> word) {
  SignedPerm acc = identity(n);
  for (GenIndex g : word) acc = acc * generator(n, g);
  return acc;
}

SignedPerm SignedPerm::from_word(int n, std::initializer_list<GenIndex> word) {
  return from_word(n, std::span<const GenIndex>(word.begin(), word.size()));
}

int SignedPerm::operator()(int i) const {
  if (i > 0) return w_[i - 1];
  return -w_[-i - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in product");
  SignedPerm r;
  r.w_.resize(w_.size());
  for (int i = 1; i <= rank(); ++i) r.w_[i - 1] = (*this)(o(i));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.w_.resize(w_.size());
  for (int i = 1; i <= rank(); ++i) {
    int v = w_[i - 1];
    if (v > 0)
      r.w_[v - 1] = i;
    else
      r.w_[-v - 1] = -i;
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

// inv + neg + nsp: inversions, negative entries, and pairs summing negative.
int SignedPerm::length() const {
  const int n = rank();
  int inv = 0, neg = 0, nsp = 0;
  for (int i = 0; i < n; ++i) {
    if (w_[i] < 0) ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (w_[i] > w_[j]) ++inv;
      if (w_[i] + w_[j] < 0) ++nsp;
    }
  }
  return inv + neg + nsp;
}

int SignedPerm::t_length() const {
  int neg = 0;
  for (int v : w_)
    if (v < 0) ++neg;
  return neg;
}

std::string window_str(const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += "]";
  return s;
}

std::string SignedPerm::str() const { return window_str(w_); }

SignedPerm SignedPerm::parse(const std::string& text, int n) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<int> w;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        std::size_t pos = 0;
        int v = std::stoi(text.substr(i), &pos);
        i += pos;
        w.push_back(v);
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("unterminated window: " + text);
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (text[i] == ']') {
          ++i;
          break;
        }
        throw std::invalid_argument("bad window syntax: " + text);
      }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing input after window: " + text);
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("window rank mismatch: " + text);
    return SignedPerm(std::move(w));
  }
  // word form: whitespace separated tokens t, s<k>, or e / id for the identity
  std::vector<GenIndex> word;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace((unsigned char)text[j])) ++j;
    std::string tok = text.substr(i, j - i);
    i = j;
    if (tok == "e" || tok == "id") continue;
    if (tok == "t") {
      word.push_back(0);
    } else if (tok.size() >= 2 && tok[0] == 's') {
      int k = std::stoi(tok.substr(1));
      if (k < 1 || k >= n) throw std::invalid_argument("generator out of range: " + tok);
      word.push_back(k);
    } else {
      throw std::invalid_argument("bad word token: " + tok);
    }
  }
  return from_word(n, std::span<const GenIndex>(word.data(), word.size()));
}

}  // namespace klb
