#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "klb/zint.hpp"

using klb::Zint;

TEST_CASE("small arithmetic") {
  Zint a(7), b(-3);
  CHECK((a + b) == Zint(4));
  CHECK((a - b) == Zint(10));
  CHECK((a * b) == Zint(-21));
  CHECK((-a) == Zint(-7));
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK(Zint(0).sign() == 0);
  CHECK(Zint(0).is_zero());
  CHECK(a.str() == "7");
  CHECK(b.str() == "-3");
  CHECK(a > b);
  CHECK(Zint(-5) < Zint(-4));
}

TEST_CASE("overflow promotes and stays exact") {
  // 2^100 by repeated doubling, checked against GMP
  Zint x(1);
  mpz_class m(1);
  for (int i = 0; i < 100; ++i) {
    x = x + x;
    m *= 2;
  }
  CHECK(x.str() == m.get_str());
  CHECK(!x.is_small());

  // factorial 30 overflows int64
  Zint f(1);
  mpz_class g(1);
  for (int i = 1; i <= 30; ++i) {
    f *= Zint(i);
    g *= i;
  }
  CHECK(f.str() == g.get_str());

  // falling back below the threshold demotes to the small form
  Zint big = f;
  Zint shrink = big - big + Zint(42);
  CHECK(shrink.is_small());
  CHECK(shrink == Zint(42));
}

TEST_CASE("boundary values") {
  const long long mn = std::numeric_limits<long long>::min();
  const long long mx = std::numeric_limits<long long>::max();
  Zint a(mn);
  Zint b = -a;  // does not fit long long
  CHECK(!b.is_small());
  CHECK(b.str() == "9223372036854775808");
  CHECK((b - Zint(1)) == Zint(mx));
  CHECK((b - Zint(1)).is_small());
  Zint c = Zint(mx) + Zint(mx);
  mpz_class m = mpz_class(std::to_string(mx)) * 2;
  CHECK(c.str() == m.get_str());
}

TEST_CASE("randomized against GMP") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    long long x = static_cast<long long>(rng()) >> (rng() % 40);
    long long y = static_cast<long long>(rng()) >> (rng() % 40);
    mpz_class mx(std::to_string(x)), my(std::to_string(y));
    CHECK((Zint(x) + Zint(y)).str() == mpz_class(mx + my).get_str());
    CHECK((Zint(x) - Zint(y)).str() == mpz_class(mx - my).get_str());
    CHECK((Zint(x) * Zint(y)).str() == mpz_class(mx * my).get_str());
    CHECK((Zint(x) < Zint(y)) == (mx < my));
  }
}
