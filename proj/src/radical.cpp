#include "surfcode/radical.hpp"

namespace surfcode {

namespace {

// radicand = square * squarefree; returns (sqrt(square), squarefree)
std::pair<long long, long long> extract_square(long long radicand) {
  long long s = 1;
  long long rest = radicand;
  for (long long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      s *= f;
    }
  }
  return {s, rest};
}

}  // namespace

void RadicalSum::insert_term(long long radicand, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadicalSum RadicalSum::sqrt_term(const Rat& coeff, long long radicand) {
  if (radicand < 0) throw NegativeParameterError("sqrt of negative radicand");
  RadicalSum out;
  if (radicand == 0 || coeff.is_zero()) return out;
  auto [s, core] = extract_square(radicand);
  if (core == 1) {
    out.rational_ = coeff * Rat(s);
  } else {
    out.insert_term(core, coeff * Rat(s));
  }
  return out;
}

RadicalSum RadicalSum::operator+(const RadicalSum& o) const {
  RadicalSum out = *this;
  out.rational_ += o.rational_;
  for (const auto& [m, c] : o.terms_) out.insert_term(m, c);
  return out;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out;
  out.rational_ = -rational_;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

RadicalSum RadicalSum::operator-(const RadicalSum& o) const { return *this + (-o); }

RadicalSum RadicalSum::operator*(const RadicalSum& o) const {
  RadicalSum out;
  out.rational_ = rational_ * o.rational_;
  for (const auto& [m, c] : o.terms_) out.insert_term(m, rational_ * c);
  for (const auto& [m, c] : terms_) {
    out.insert_term(m, c * o.rational_);
    for (const auto& [m2, c2] : o.terms_) {
      // sqrt(m)*sqrt(m2) = sqrt(m*m2); reduce the product's square part
      out += sqrt_term(c * c2, m * m2);
    }
  }
  return out;
}

int RadicalSum::sign() const {
  if (terms_.empty()) return rational_.sign();
  if (terms_.size() == 1 && rational_.is_zero())
    return terms_.begin()->second.sign();
  if (terms_.size() > 2)
    throw TooLargeError("sign of radical sum with more than two radicals");

  // split off the largest radicand: this = A + B with B = c*sqrt(M)
  auto last = std::prev(terms_.end());
  RadicalSum a = *this;
  a.terms_.erase(last->first);
  const Rat& c = last->second;
  int sa = a.sign();
  int sb = c.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // opposite signs: compare |A| with |B| via A^2 - B^2 (one radical fewer)
  RadicalSum b2(c * c * Rat(last->first));
  RadicalSum diff = a * a - b2;
  int sd = diff.sign();
  if (sd == 0) return 0;
  return sd > 0 ? sa : sb;
}

long long RadicalSum::floor_ll() const {
  // integer bracket from |x0| + sum |c|*(isqrt(M)+1), then exact bisection
  Rat mag = rational_.sign() < 0 ? -rational_ : rational_;
  for (const auto& [m, c] : terms_) {
    Rat ac = c.sign() < 0 ? -c : c;
    mag += ac * Rat(isqrt_ll(m) + 1);
  }
  long long hi = mag.ceil_ll() + 1;
  long long lo = -hi;
  // invariant: value >= lo, value < hi ... shrink to hi - lo == 1, answer lo
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if ((*this - RadicalSum(Rat(mid))).sign() >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string RadicalSum::str() const {
  std::string out = rational_.str();
  for (const auto& [m, c] : terms_) {
    out += c.sign() < 0 ? " - " : " + ";
    Rat ac = c.sign() < 0 ? -c : c;
    out += ac.str() + "*sqrt(" + std::to_string(m) + ")";
  }
  return out;
}

}  // namespace surfcode
