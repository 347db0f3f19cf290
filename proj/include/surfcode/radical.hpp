#pragma once

#include <map>
#include <string>

#include "surfcode/rational.hpp"

namespace surfcode {

// Exact real number of the form  x0 + sum_j c_j * sqrt(M_j)  with rational
// x0, c_j and distinct squarefree integer radicands M_j >= 2.  Comparisons
// and floors are decided exactly (no floating point), which is enough for
// bound formulas mixing terms like r*sqrt(H2*beta) with rationals.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(const Rat& r) : rational_(r) {}  // NOLINT: implicit on purpose
  RadicalSum(long long n) : rational_(Rat(n)) {}  // NOLINT

  // coeff * sqrt(radicand); radicand >= 0, square part is folded into coeff
  static RadicalSum sqrt_term(const Rat& coeff, long long radicand);

  RadicalSum operator+(const RadicalSum& o) const;
  RadicalSum operator-(const RadicalSum& o) const;
  RadicalSum operator-() const;
  RadicalSum operator*(const RadicalSum& o) const;
  RadicalSum& operator+=(const RadicalSum& o) { return *this = *this + o; }
  RadicalSum& operator-=(const RadicalSum& o) { return *this = *this - o; }

  bool is_rational() const { return terms_.empty(); }
  const Rat& rational_part() const { return rational_; }
  const std::map<long long, Rat>& radical_terms() const { return terms_; }

  // exact sign: -1, 0, +1 (supports up to two radical terms)
  int sign() const;
  bool operator<(const RadicalSum& o) const { return (*this - o).sign() < 0; }
  bool operator>(const RadicalSum& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const RadicalSum& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const RadicalSum& o) const { return (*this - o).sign() >= 0; }
  bool operator==(const RadicalSum& o) const { return (*this - o).sign() == 0; }

  // exact floor
  long long floor_ll() const;

  std::string str() const;  // e.g. "3/2 + 5*sqrt(6)"

 private:
  void insert_term(long long radicand, const Rat& coeff);

  Rat rational_;
  std::map<long long, Rat> terms_;  // radicand (squarefree >= 2) -> coefficient
};

}  // namespace surfcode
