#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "surfcode/errors.hpp"

namespace surfcode {

// floor(sqrt(n)) by pure integer Newton iteration; n >= 0
long long isqrt_ll(long long n);

bool is_prime_ll(long long n);

// C(n, k) as a 64-bit integer; zero when k < 0, k > n or n < 0
long long binomial_ll(long long n, long long k);

// q = p^e with p prime, e >= 1; outputs optional
bool is_prime_power(long long q, long long* p_out = nullptr, int* e_out = nullptr);

// Exact rational with 64-bit numerator/denominator, 128-bit intermediates.
// Always normalized: den > 0, gcd(|num|, den) == 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long floor_ll() const;
  long long ceil_ll() const;
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  // "7" or "-3/4"
  std::string str() const;

 private:
  static Rat make_checked(__int128 n, __int128 d);
  long long num_;
  long long den_;
};

}  // namespace surfcode
