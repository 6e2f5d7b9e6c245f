#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace klb {

namespace detail {
struct BigRep;
}

// Exact integer. Values that fit a machine word are stored inline; on
// overflow the value moves to a heap-allocated GMP integer. Invariant:
// big_ != nullptr implies the value does not fit in long long, so the
// two representations never alias.
class Zint {
 public:
  Zint() noexcept : v_(0), big_(nullptr) {}
  Zint(long long v) noexcept : v_(v), big_(nullptr) {}
  Zint(int v) noexcept : v_(v), big_(nullptr) {}
  Zint(const Zint& o);
  Zint(Zint&& o) noexcept : v_(o.v_), big_(o.big_) { o.big_ = nullptr; }
  Zint& operator=(const Zint& o);
  Zint& operator=(Zint&& o) noexcept;
  ~Zint();

  bool is_zero() const noexcept { return big_ == nullptr && v_ == 0; }
  bool is_one() const noexcept { return big_ == nullptr && v_ == 1; }
  int sign() const noexcept;
  bool is_small() const noexcept { return big_ == nullptr; }
  long long small_value() const noexcept { return v_; }

  Zint& operator+=(const Zint& o) {
    if (big_ == nullptr && o.big_ == nullptr) {
      long long r;
      if (!__builtin_add_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    add_slow(o, /*negate_o=*/false);
    return *this;
  }
  Zint& operator-=(const Zint& o) {
    if (big_ == nullptr && o.big_ == nullptr) {
      long long r;
      if (!__builtin_sub_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    add_slow(o, /*negate_o=*/true);
    return *this;
  }
  Zint& operator*=(const Zint& o) {
    if (big_ == nullptr && o.big_ == nullptr) {
      long long r;
      if (!__builtin_mul_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    mul_slow(o);
    return *this;
  }

  friend Zint operator+(Zint a, const Zint& b) { a += b; return a; }
  friend Zint operator-(Zint a, const Zint& b) { a -= b; return a; }
  friend Zint operator*(Zint a, const Zint& b) { a *= b; return a; }
  Zint operator-() const;

  bool operator==(const Zint& o) const noexcept;
  std::strong_ordering operator<=>(const Zint& o) const noexcept;
  bool operator==(long long v) const noexcept { return big_ == nullptr && v_ == v; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Zint& z);

 private:
  long long v_;
  detail::BigRep* big_;

  void add_slow(const Zint& o, bool negate_o);
  void mul_slow(const Zint& o);
  void normalize();  // demote to small form when the value fits
};

}  // namespace klb
