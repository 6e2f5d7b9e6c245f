#include "klb/coxeter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace klb {

std::uint64_t CoxeterTable::encode(const SignedPerm& p) const {
  // 6 bits per entry, offset by 32; enough for window rank up to 10
  std::uint64_t code = 0;
  for (int v : p.window()) code = (code << 6) | static_cast<std::uint64_t>(v + 32);
  return code;
}

CoxeterTable::CoxeterTable(int n, std::vector<GenIndex> gens)
    : n_(n), gens_(std::move(gens)) {
  if (n < 0 || n > 10) throw std::invalid_argument("window rank out of range");
  std::sort(gens_.begin(), gens_.end());
  for (GenIndex g : gens_)
    if (g < 0 || g >= n) throw std::invalid_argument("generator index out of range");

  std::vector<SignedPerm> gen_elems;
  gen_elems.reserve(gens_.size());
  for (GenIndex g : gens_) gen_elems.push_back(SignedPerm::generator(n, g));

  // breadth-first enumeration by length; each layer sorted by window
  std::vector<SignedPerm> layer{SignedPerm::identity(n)};
  std::vector<std::pair<int, ElemId>> provenance{{-1, 0}};  // (gen, parent) per elem
  elems_.clear();
  std::map<std::vector<int>, std::pair<int, ElemId>> next;  // window -> provenance
  int depth = 0;
  while (!layer.empty()) {
    layers_.emplace_back();
    for (std::size_t k = 0; k < layer.size(); ++k) {
      ElemId id = static_cast<ElemId>(elems_.size());
      elems_.push_back(layer[k]);
      index_.emplace(encode(layer[k]), id);
      length_.push_back(depth);
      t_len_.push_back(layer[k].t_length());
      parent_gen_.push_back(provenance[k].first);
      parent_.push_back(provenance[k].second);
      layers_.back().push_back(id);
      if (layer[k].length() != depth)
        throw std::logic_error("length formula disagrees with word search");
    }
    next.clear();
    for (std::size_t k = 0; k < layer.size(); ++k) {
      ElemId pid = layers_.back()[k];
      for (int j = 0; j < num_gens(); ++j) {
        SignedPerm u = gen_elems[j] * layer[k];
        if (index_.count(encode(u))) continue;
        next.try_emplace(u.window(), j, pid);
      }
    }
    layer.clear();
    provenance.clear();
    for (auto& [w, prov] : next) {
      layer.push_back(SignedPerm(w));
      provenance.push_back(prov);
    }
    ++depth;
  }

  const std::size_t N = size();
  lmul_.assign(num_gens(), std::vector<ElemId>(N));
  rmul_.assign(num_gens(), std::vector<ElemId>(N));
  inv_.resize(N);
  for (ElemId x = 0; x < N; ++x) {
    for (int j = 0; j < num_gens(); ++j) {
      lmul_[j][x] = id(gen_elems[j] * elems_[x]);
      rmul_[j][x] = id(elems_[x] * gen_elems[j]);
    }
    inv_[x] = id(elems_[x].inverse());
  }

  // Bruhat rows, incrementally along reduced words
  const std::size_t words = (N + 63) / 64;
  bruhat_.assign(N, std::vector<std::uint64_t>(words, 0));
  bruhat_[0][0] = 1;  // identity row
  for (ElemId x = 1; x < N; ++x) {
    const int g = parent_gen_[x];
    const std::vector<std::uint64_t>& below = bruhat_[parent_[x]];
    std::vector<std::uint64_t>& row = bruhat_[x];
    row = below;
    for (std::size_t wblk = 0; wblk < words; ++wblk) {
      std::uint64_t bits = below[wblk];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        ElemId u = static_cast<ElemId>((wblk << 6) + b);
        ElemId gu = lmul_[g][u];
        row[gu >> 6] |= 1ull << (gu & 63);
      }
    }
  }
}

ElemId CoxeterTable::id(const SignedPerm& p) const {
  auto it = index_.find(encode(p));
  if (it == index_.end())
    throw std::invalid_argument("element not in this group: " + p.str());
  return it->second;
}

std::optional<ElemId> CoxeterTable::find(const SignedPerm& p) const {
  if (p.rank() != n_) return std::nullopt;
  auto it = index_.find(encode(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId CoxeterTable::mul(ElemId x, ElemId y) const { return id(elems_[x] * elems_[y]); }

std::vector<int> CoxeterTable::word(ElemId x) const {
  std::vector<int> w;
  while (x != 0) {
    w.push_back(parent_gen_[x]);
    x = parent_[x];
  }
  return w;
}

int CoxeterTable::local_gen(GenIndex global) const {
  for (int j = 0; j < num_gens(); ++j)
    if (gens_[j] == global) return j;
  return -1;
}

const CoxeterTable& CoxeterTable::bn(int n) { return BnData::get(n).table(); }

// ---------------------------------------------------------------------------

namespace {

// subset of {1..n} as a bitmask
std::uint32_t subset_mask(const std::vector<int>& values) {
  std::uint32_t m = 0;
  for (int v : values) m |= 1u << (v - 1);
  return m;
}

}  // namespace

BnData::BnData(int n) : n_(n) {
  std::vector<GenIndex> gens(n);
  for (int g = 0; g < n; ++g) gens[g] = g;
  table_ = std::make_unique<CoxeterTable>(n, gens);
  const CoxeterTable& W = *table_;

  // r_i, t_i, a_l
  t_i_.assign(n + 1, 0);
  r_i_.assign(n + 1, 0);
  a_l_.assign(n + 1, 0);
  if (n >= 1) {
    SignedPerm t = SignedPerm::generator(n, 0);
    SignedPerm r = t, ti = t;
    r_i_[1] = t_i_[1] = W.id(t);
    for (int i = 1; i <= n - 1; ++i) {
      SignedPerm s = SignedPerm::generator(n, i);
      r = s * r;
      ti = s * ti * s;
      r_i_[i + 1] = W.id(r);
      t_i_[i + 1] = W.id(ti);
    }
    SignedPerm al = SignedPerm::identity(n);
    for (int l = 1; l <= n; ++l) {
      al = al * W.elem(r_i_[l]);
      a_l_[l] = W.id(al);
    }
  }
  sigma_l_.assign(n + 1, 0);
  for (int l = 0; l <= n; ++l) {
    std::vector<int> w(n);
    for (int i = 0; i < l; ++i) w[i] = l - i;
    for (int i = l; i < n; ++i) w[i] = i + 1;
    sigma_l_[l] = W.id(SignedPerm(std::move(w)));
  }

  for (ElemId x = 0; x < W.size(); ++x)
    if (W.t_len(x) == 0) sn_.push_back(x);

  // Y_{l,n-l}: elements of S_n increasing on positions 1..l and l+1..n.
  // These are the minimal length representatives of S_n / S_{l,n-l}; the
  // image of {1..l} is a complete invariant.
  y_reps_.assign(n + 1, {});
  y_by_image_.assign(n + 1, {});
  for (int l = 0; l <= n; ++l) {
    for (ElemId x : sn_) {
      const std::vector<int>& w = W.elem(x).window();
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        if (i == l) continue;
        if (w[i - 1] > w[i]) ok = false;
      }
      if (!ok) continue;
      y_reps_[l].push_back(x);
      std::vector<int> img(w.begin(), w.begin() + l);
      y_by_image_[l].emplace(subset_mask(img), x);
    }
  }

  // coset decomposition of every element, from the sets of negative
  // positions and negative values; validated by length additivity
  decomp_.resize(W.size());
  for (ElemId x = 0; x < W.size(); ++x) {
    const SignedPerm& w = W.elem(x);
    const int l = W.t_len(x);
    std::vector<int> npos, nval;
    for (int i = 1; i <= n_; ++i)
      if (w(i) < 0) {
        npos.push_back(i);
        nval.push_back(-w(i));
      }
    Decomposition d;
    d.l = l;
    d.a = y_by_image_[l].at(subset_mask(nval));
    d.b = y_by_image_[l].at(subset_mask(npos));
    SignedPerm sigma = W.elem(a_l_[l]).inverse() * W.elem(d.a).inverse() * w * W.elem(d.b);
    d.sigma = W.id(sigma);
    if (!in_slnl(d.sigma, l))
      throw std::logic_error("decomposition factor outside the parabolic");
    if (W.length(x) != W.length(d.a) + W.length(a_l_[l]) + W.length(d.sigma) + W.length(d.b))
      throw std::logic_error("decomposition lengths do not add");
    decomp_[x] = d;
  }

  slnl_.resize(n + 1);
}

bool BnData::in_slnl(ElemId x, int l) const {
  const CoxeterTable& W = *table_;
  if (W.t_len(x) != 0) return false;
  const std::vector<int>& w = W.elem(x).window();
  for (int i = 0; i < l; ++i)
    if (w[i] > l) return false;
  return true;
}

ElemId BnData::t_i(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("t_i index");
  return t_i_[i];
}
ElemId BnData::r_i(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("r_i index");
  return r_i_[i];
}
ElemId BnData::a_l(int l) const {
  if (l < 0 || l > n_) throw std::out_of_range("a_l index");
  return a_l_[l];
}
ElemId BnData::sigma_l(int l) const {
  if (l < 0 || l > n_) throw std::out_of_range("sigma_l index");
  return sigma_l_[l];
}
ElemId BnData::w0() const { return table_->longest(); }

const std::vector<ElemId>& BnData::min_reps_Y(int l) const {
  if (l < 0 || l > n_) throw std::out_of_range("Y_{l,n-l} index");
  return y_reps_[l];
}

std::pair<SignedPerm, SignedPerm> BnData::split_sigma(const Decomposition& d) const {
  if (!in_slnl(d.sigma, d.l))
    throw std::invalid_argument("sigma is not in the parabolic S_{l,n-l}");
  const std::vector<int>& w = table_->elem(d.sigma).window();
  std::vector<int> lo(w.begin(), w.begin() + d.l);
  std::vector<int> hi;
  hi.reserve(n_ - d.l);
  for (int i = d.l; i < n_; ++i) hi.push_back(w[i] - d.l);
  return {SignedPerm(std::move(lo)), SignedPerm(std::move(hi))};
}

const CoxeterTable& BnData::slnl(int l) const {
  if (l < 0 || l > n_) throw std::out_of_range("S_{l,n-l} index");
  if (!slnl_[l]) {
    std::vector<GenIndex> gens;
    for (int g = 1; g < n_; ++g)
      if (g != l) gens.push_back(g);
    slnl_[l] = std::make_unique<CoxeterTable>(n_, std::move(gens));
  }
  return *slnl_[l];
}

const BnData& BnData::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BnData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<BnData>(new BnData(n))).first;
  return *it->second;
}

}  // namespace klb
