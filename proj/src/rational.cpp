#include "surfcode/rational.hpp"

#include <limits>

namespace surfcode {

long long isqrt_ll(long long n) {
  if (n < 0) throw NegativeParameterError("isqrt of negative number");
  if (n < 2) return n;
  long long x = n;
  long long y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact at each step: product of i consecutive integers
    if (acc > std::numeric_limits<long long>::max())
      throw TooLargeError("binomial overflow");
  }
  return (long long)acc;
}

bool is_prime_power(long long q, long long* p_out, int* e_out) {
  if (q < 2) return false;
  long long p = q;
  for (long long f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  int e = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

Rat Rat::make_checked(__int128 n, __int128 d) {
  if (d == 0) throw DivisionByZeroError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 g = 1;
  {
    __int128 x = a, y = d;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  n /= g;
  d /= g;
  const __int128 lo = std::numeric_limits<long long>::min();
  const __int128 hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi || d > hi)
    throw TooLargeError("rational overflow");
  Rat r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  return r;
}

Rat::Rat(long long n, long long d) { *this = make_checked(n, d); }

long long Rat::floor_ll() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rat::ceil_ll() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rat Rat::operator-() const { return make_checked(-(__int128)num_, den_); }

Rat Rat::operator+(const Rat& o) const {
  return make_checked((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                      (__int128)den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
  return make_checked((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                      (__int128)den_ * o.den_);
}

Rat Rat::operator*(const Rat& o) const {
  return make_checked((__int128)num_ * o.num_, (__int128)den_ * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num_ == 0) throw DivisionByZeroError("rational division by zero");
  return make_checked((__int128)num_ * o.den_, (__int128)den_ * o.num_);
}

bool Rat::operator<(const Rat& o) const {
  return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace surfcode
