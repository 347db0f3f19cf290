#include "surfcode/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "surfcode/rational.hpp"

namespace surfcode {

namespace polyfp {

std::vector<int> trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, long long p) {
  a = trim(std::move(a));
  std::vector<int> d = trim(b);
  if (d.empty()) throw DivisionByZeroError("polynomial mod by zero");
  // make divisor monic
  long long lead = d.back();
  if (lead != 1) {
    // lead^-1 mod p by Fermat
    long long inv = 1, base = lead % p, n = p - 2;
    while (n) {
      if (n & 1) inv = inv * base % p;
      base = base * base % p;
      n >>= 1;
    }
    for (auto& c : d) c = (int)((long long)c * inv % p);
  }
  while (a.size() >= d.size()) {
    long long c = a.back();
    if (c != 0) {
      size_t shift = a.size() - d.size();
      for (size_t i = 0; i < d.size(); ++i) {
        long long v = a[shift + i] - c * d[i] % p;
        a[shift + i] = (int)((v % p + p) % p);
      }
    }
    a.pop_back();
    a = trim(std::move(a));
    if (a.size() < d.size()) break;
  }
  return trim(std::move(a));
}

bool is_irreducible(const std::vector<int>& f, long long p) {
  std::vector<int> ft = trim(f);
  if (ft.size() < 2) return false;  // constants are not irreducible
  size_t deg = ft.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (size_t dd = 1; dd <= deg / 2; ++dd) {
    long long count = 1;
    for (size_t i = 0; i < dd; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> g(dd + 1, 0);
      long long rest = idx;
      for (size_t i = 0; i < dd; ++i) {
        g[i] = (int)(rest % p);
        rest /= p;
      }
      g[dd] = 1;
      if (mod(ft, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace polyfp

namespace {

std::vector<int> default_modulus(long long p, int e) {
  if (e == 1) return {0, 1};  // t
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> cand(e + 1, 0);
    long long rest = idx;
    for (int i = 0; i < e; ++i) {
      cand[i] = (int)(rest % p);
      rest /= p;
    }
    cand[e] = 1;
    if (polyfp::is_irreducible(cand, p)) return cand;
  }
  throw NotIrreducibleError("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(long long p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < e_; ++i) {
    q_ *= p_;
    if (q_ > kMaxOrder) throw TooLargeError("field order exceeds 65536");
  }
}

FieldPtr Field::make(long long p, int e) {
  if (!is_prime_ll(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInputError("extension degree must be >= 1");
  // order check before searching for a modulus
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw TooLargeError("field order exceeds 65536");
  }
  return make(p, e, default_modulus(p, e));
}

FieldPtr Field::make(long long p, int e, const std::vector<int>& modulus) {
  if (!is_prime_ll(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInputError("extension degree must be >= 1");
  std::vector<int> m = polyfp::trim(modulus);
  if ((int)m.size() != e + 1)
    throw NotIrreducibleError("modulus degree must equal extension degree");
  for (int c : m)
    if (c < 0 || c >= p) throw InvalidInputError("modulus coefficient out of range [0,p)");
  if (m.back() != 1) throw NotIrreducibleError("modulus must be monic");
  if (!polyfp::is_irreducible(m, p))
    throw NotIrreducibleError("modulus is reducible over F_" + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field(p, e, std::move(m)));
  f->build_tables();
  return f;
}

void Field::build_tables() {
  if (q_ > kTableOrderLimit) return;
  add_tab_.resize((size_t)q_ * q_);
  mul_tab_.resize((size_t)q_ * q_);
  for (long long a = 0; a < q_; ++a)
    for (long long b = 0; b < q_; ++b) {
      add_tab_[(size_t)a * q_ + b] = add_generic((gfe)a, (gfe)b);
      mul_tab_[(size_t)a * q_ + b] = mul_generic((gfe)a, (gfe)b);
    }
  tables_ = true;
  inv_tab_.assign(q_, 0);
  for (long long a = 1; a < q_; ++a) {
    for (long long b = 1; b < q_; ++b)
      if (mul_tab_[(size_t)a * q_ + b] == 1) {
        inv_tab_[a] = (gfe)b;
        break;
      }
  }
}

gfe Field::add_generic(gfe a, gfe b) const {
  long long out = 0, mult = 1, av = a, bv = b;
  for (int i = 0; i < e_; ++i) {
    long long s = (av % p_ + bv % p_) % p_;
    out += s * mult;
    mult *= p_;
    av /= p_;
    bv /= p_;
  }
  return (gfe)out;
}

gfe Field::neg(gfe a) const {
  long long out = 0, mult = 1, av = a;
  for (int i = 0; i < e_; ++i) {
    long long s = (p_ - av % p_) % p_;
    out += s * mult;
    mult *= p_;
    av /= p_;
  }
  return (gfe)out;
}

gfe Field::mul_generic(gfe a, gfe b) const {
  std::array<long long, 32> conv{};
  std::array<int, 16> da{}, db{};
  long long av = a, bv = b;
  for (int i = 0; i < e_; ++i) {
    da[i] = (int)(av % p_);
    db[i] = (int)(bv % p_);
    av /= p_;
    bv /= p_;
  }
  for (int i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < e_; ++j) conv[i + j] += (long long)da[i] * db[j];
  }
  // reduce modulo the monic modulus
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    long long c = conv[i] % p_;
    if (c == 0) continue;
    for (int j = 0; j < e_; ++j)
      conv[i - e_ + j] -= c * modulus_[j];
    conv[i] = 0;
  }
  long long out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    long long c = conv[i] % p_;
    if (c < 0) c += p_;
    out += c * mult;
    mult *= p_;
  }
  return (gfe)out;
}

gfe Field::inv(gfe a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in " + header());
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

gfe Field::pow(gfe a, long long n) const {
  if (n < 0) throw InvalidInputError("negative exponent");
  gfe out = 1, base = a;
  while (n) {
    if (n & 1) out = mul(out, base);
    base = mul(base, base);
    n >>= 1;
  }
  return out;
}

gfe Field::from_coeffs(const std::vector<int>& coeffs) const {
  if ((int)coeffs.size() > e_)
    throw InvalidInputError("coefficient vector longer than extension degree");
  long long out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    long long c = i < (int)coeffs.size() ? coeffs[i] : 0;
    c %= p_;
    if (c < 0) c += p_;
    out += c * mult;
    mult *= p_;
  }
  return (gfe)out;
}

std::vector<int> Field::coeffs(gfe a) const {
  std::vector<int> out(e_);
  long long av = a;
  for (int i = 0; i < e_; ++i) {
    out[i] = (int)(av % p_);
    av /= p_;
  }
  return out;
}

gfe Field::from_int(long long n) const {
  long long c = n % p_;
  if (c < 0) c += p_;
  return (gfe)c;
}

namespace {

std::string poly_in_t(const std::vector<int>& coeffs) {
  std::string out;
  for (int i = (int)coeffs.size() - 1; i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// parse "2t^3+t+4" into coefficient vector (little-endian); max_deg inclusive
std::vector<int> parse_poly_in_t(std::string_view text, int max_deg) {
  std::string s;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.empty()) throw ParseError("empty polynomial text");
  if (s.find('-') != std::string::npos)
    throw ParseError("negative coefficients not allowed in canonical form: " + s);
  std::vector<int> coeffs(max_deg + 1, 0);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) throw ParseError("empty term in: " + s);
    long long coeff = 1;
    int deg = 0;
    size_t tp = term.find('t');
    if (tp == std::string::npos) {
      // constant
      for (char ch : term)
        if (!std::isdigit((unsigned char)ch)) throw ParseError("bad term: " + term);
      coeff = std::stoll(term);
      deg = 0;
    } else {
      std::string cs = term.substr(0, tp);
      if (!cs.empty()) {
        for (char ch : cs)
          if (!std::isdigit((unsigned char)ch)) throw ParseError("bad term: " + term);
        coeff = std::stoll(cs);
      }
      std::string rest = term.substr(tp + 1);
      if (rest.empty()) {
        deg = 1;
      } else {
        if (rest[0] != '^') throw ParseError("bad term: " + term);
        std::string ds = rest.substr(1);
        if (ds.empty()) throw ParseError("bad term: " + term);
        for (char ch : ds)
          if (!std::isdigit((unsigned char)ch)) throw ParseError("bad term: " + term);
        deg = (int)std::stoll(ds);
      }
    }
    if (deg > max_deg) throw ParseError("exponent too large in: " + term);
    if (coeffs[deg] != 0) throw ParseError("duplicate exponent in: " + s);
    if (coeff == 0 && s != "0") throw ParseError("zero coefficient term in: " + s);
    coeffs[deg] = (int)coeff;
  }
  return coeffs;
}

}  // namespace

std::string Field::elem_str(gfe a) const { return poly_in_t(coeffs(a)); }

gfe Field::parse_elem(std::string_view text) const {
  std::vector<int> c = parse_poly_in_t(text, e_ - 1);
  for (int v : c)
    if (v >= p_) throw ParseError("coefficient not reduced mod " + std::to_string(p_));
  return from_coeffs(c);
}

std::string Field::modulus_str() const { return poly_in_t(modulus_); }

std::string Field::header() const {
  return "GF(" + std::to_string(q_) + ";" + modulus_str() + ")";
}

FieldPtr Field::parse_header(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
    throw ParseError("bad field header: " + s);
  std::string body = s.substr(3, s.size() - 4);
  size_t semi = body.find(';');
  std::string qs = semi == std::string::npos ? body : body.substr(0, semi);
  for (char ch : qs)
    if (!std::isdigit((unsigned char)ch)) throw ParseError("bad field order: " + qs);
  long long q = std::stoll(qs);
  long long p = 0;
  int e = 0;
  if (!is_prime_power(q, &p, &e))
    throw NotPrimeError("field order " + qs + " is not a prime power");
  if (semi == std::string::npos) return make(p, e);
  std::vector<int> modulus = parse_poly_in_t(body.substr(semi + 1), e);
  return make(p, e, modulus);
}

FieldElement Field::element(gfe v) const {
  if (v >= q_) throw InvalidInputError("packed value out of range");
  return FieldElement(shared_from_this(), v);
}

FieldElement Field::element_from_int(long long n) const {
  return FieldElement(shared_from_this(), from_int(n));
}

const Field& FieldElement::checked_field(const FieldElement& o) const {
  if (!f_ || !o.f_) throw MixedFieldError("element without field");
  if (!f_->same(*o.f_))
    throw MixedFieldError("cannot combine " + f_->header() + " with " + o.f_->header());
  return *f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(f_, checked_field(o).add(v_, o.v_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(f_, checked_field(o).sub(v_, o.v_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(f_, checked_field(o).mul(v_, o.v_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return FieldElement(f_, checked_field(o).div(v_, o.v_));
}
FieldElement FieldElement::operator-() const {
  if (!f_) throw MixedFieldError("element without field");
  return FieldElement(f_, f_->neg(v_));
}
FieldElement FieldElement::pow(long long n) const {
  if (!f_) throw MixedFieldError("element without field");
  return FieldElement(f_, f_->pow(v_, n));
}
FieldElement FieldElement::inverse() const {
  if (!f_) throw MixedFieldError("element without field");
  return FieldElement(f_, f_->inv(v_));
}
bool FieldElement::operator==(const FieldElement& o) const {
  return checked_field(o).same(*o.f_) && v_ == o.v_;
}

std::string FieldElement::str() const { return f_ ? f_->elem_str(v_) : "?"; }
std::string FieldElement::full_str() const {
  return f_ ? f_->header() + ": " + f_->elem_str(v_) : "?";
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& f) {
  std::vector<FieldElement> out;
  out.reserve(f->q());
  for (long long v = 0; v < f->q(); ++v) out.emplace_back(f, (gfe)v);
  return out;
}

}  // namespace surfcode
