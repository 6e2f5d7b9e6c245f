#include "klb/zint.hpp"

#include <gmp.h>

#include <climits>
#include <ostream>

namespace klb {

namespace detail {
struct BigRep {
  mpz_t z;
  BigRep() { mpz_init(z); }
  explicit BigRep(long long v) {
    mpz_init(z);
    mpz_import(z, 1, -1, sizeof(unsigned long long), 0, 0, &(const unsigned long long&)v);
  }
  ~BigRep() { mpz_clear(z); }
  BigRep(const BigRep&) = delete;
  BigRep& operator=(const BigRep&) = delete;
};
}  // namespace detail

using detail::BigRep;

namespace {

// mpz from long long, handling LLONG_MIN
BigRep* big_from_ll(long long v) {
  auto* b = new BigRep();
  if (v >= 0) {
    mpz_set_ui(b->z, (unsigned long long)v);
  } else {
    // -(unsigned)v is well defined for LLONG_MIN
    mpz_set_ui(b->z, ~(unsigned long long)v + 1ull);
    mpz_neg(b->z, b->z);
  }
  return b;
}

bool fits_ll(const mpz_t z, long long* out) {
  if (mpz_fits_slong_p(z)) {  // long == long long on this platform family
    *out = mpz_get_si(z);
    return true;
  }
  // one extra case: exactly LLONG_MIN
  if (mpz_sgn(z) < 0 && mpz_sizeinbase(z, 2) == 63) {
    mpz_t t;
    mpz_init(t);
    mpz_set_ui(t, (unsigned long long)LLONG_MAX + 1ull);
    mpz_neg(t, t);
    bool eq = mpz_cmp(z, t) == 0;
    mpz_clear(t);
    if (eq) {
      *out = LLONG_MIN;
      return true;
    }
  }
  return false;
}

}  // namespace

Zint::Zint(const Zint& o) : v_(o.v_), big_(nullptr) {
  if (o.big_) {
    big_ = new BigRep();
    mpz_set(big_->z, o.big_->z);
  }
}

Zint& Zint::operator=(const Zint& o) {
  if (this == &o) return *this;
  if (o.big_) {
    if (!big_) big_ = new BigRep();
    mpz_set(big_->z, o.big_->z);
  } else {
    delete big_;
    big_ = nullptr;
  }
  v_ = o.v_;
  return *this;
}

Zint& Zint::operator=(Zint&& o) noexcept {
  if (this == &o) return *this;
  delete big_;
  v_ = o.v_;
  big_ = o.big_;
  o.big_ = nullptr;
  return *this;
}

Zint::~Zint() { delete big_; }

int Zint::sign() const noexcept {
  if (big_) return mpz_sgn(big_->z);
  return (v_ > 0) - (v_ < 0);
}

void Zint::normalize() {
  if (!big_) return;
  long long v;
  if (fits_ll(big_->z, &v)) {
    delete big_;
    big_ = nullptr;
    v_ = v;
  }
}

void Zint::add_slow(const Zint& o, bool negate_o) {
  BigRep* a = big_ ? big_ : big_from_ll(v_);
  if (o.big_) {
    if (negate_o)
      mpz_sub(a->z, a->z, o.big_->z);
    else
      mpz_add(a->z, a->z, o.big_->z);
  } else {
    BigRep* b = big_from_ll(o.v_);
    if (negate_o)
      mpz_sub(a->z, a->z, b->z);
    else
      mpz_add(a->z, a->z, b->z);
    delete b;
  }
  big_ = a;
  normalize();
}

void Zint::mul_slow(const Zint& o) {
  BigRep* a = big_ ? big_ : big_from_ll(v_);
  if (o.big_) {
    mpz_mul(a->z, a->z, o.big_->z);
  } else {
    BigRep* b = big_from_ll(o.v_);
    mpz_mul(a->z, a->z, b->z);
    delete b;
  }
  big_ = a;
  normalize();
}

Zint Zint::operator-() const {
  Zint r;
  if (!big_) {
    if (v_ != LLONG_MIN) {
      r.v_ = -v_;
      return r;
    }
    r.big_ = big_from_ll(v_);
    mpz_neg(r.big_->z, r.big_->z);
    return r;
  }
  r.big_ = new BigRep();
  mpz_neg(r.big_->z, big_->z);
  return r;
}

bool Zint::operator==(const Zint& o) const noexcept {
  if (big_ == nullptr && o.big_ == nullptr) return v_ == o.v_;
  if (big_ == nullptr || o.big_ == nullptr) return false;  // big never fits small
  return mpz_cmp(big_->z, o.big_->z) == 0;
}

std::strong_ordering Zint::operator<=>(const Zint& o) const noexcept {
  if (big_ == nullptr && o.big_ == nullptr) return v_ <=> o.v_;
  int ls = sign(), rs = o.sign();
  if (big_ && o.big_) {
    int c = mpz_cmp(big_->z, o.big_->z);
    return c <=> 0;
  }
  // exactly one side is big; it dominates in absolute value
  if (big_) return ls > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  return rs > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Zint::str() const {
  if (!big_) return std::to_string(v_);
  char* s = mpz_get_str(nullptr, 10, big_->z);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Zint& z) { return os << z.str(); }

}  // namespace klb
