#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "surfcode/errors.hpp"

namespace surfcode {

// Packed field element: the coefficient vector (c_0,...,c_{e-1}) of a residue
// class in F_p[t]/(modulus) stored as the base-p integer c_0 + c_1*p + ...
// Enumerating packed values 0..q-1 therefore lists elements in canonical
// order: 0, 1, ..., p-1, t, t+1, ...
using gfe = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement;

class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr long long kMaxOrder = 65536;
  static constexpr long long kTableOrderLimit = 256;

  // modulus: coefficients low-to-high, length e+1, monic; when omitted the
  // canonical default is the irreducible monic polynomial whose non-leading
  // coefficient vector is smallest as a base-p integer (for e == 1: t).
  static FieldPtr make(long long p, int e);
  static FieldPtr make(long long p, int e, const std::vector<int>& modulus);

  long long p() const { return p_; }
  int ext_degree() const { return e_; }
  long long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  bool same(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

  // --- packed-element arithmetic ---
  gfe add(gfe a, gfe b) const {
    return tables_ ? add_tab_[(size_t)a * q_ + b] : add_generic(a, b);
  }
  gfe mul(gfe a, gfe b) const {
    return tables_ ? mul_tab_[(size_t)a * q_ + b] : mul_generic(a, b);
  }
  gfe neg(gfe a) const;
  gfe sub(gfe a, gfe b) const { return add(a, neg(b)); }
  gfe inv(gfe a) const;
  gfe div(gfe a, gfe b) const { return mul(a, inv(b)); }
  gfe pow(gfe a, long long n) const;
  gfe frobenius(gfe a) const { return pow(a, p_); }

  // reference implementations, always table-free (used to cross-check tables)
  gfe add_generic(gfe a, gfe b) const;
  gfe mul_generic(gfe a, gfe b) const;
  bool has_tables() const { return tables_; }

  gfe from_coeffs(const std::vector<int>& coeffs) const;  // reduced mod p
  std::vector<int> coeffs(gfe a) const;
  gfe from_int(long long n) const;  // constant n mod p

  // --- text ---
  std::string elem_str(gfe a) const;          // "t+1", "2t^2+3", "0"
  gfe parse_elem(std::string_view text) const;
  std::string modulus_str() const;            // "t^2+t+1"
  std::string header() const;                 // "GF(4;t^2+t+1)"
  static FieldPtr parse_header(std::string_view text);

  FieldElement element(gfe v) const;
  FieldElement element_from_int(long long n) const;

 private:
  Field(long long p, int e, std::vector<int> modulus);
  void build_tables();

  long long p_;
  int e_;
  long long q_;
  std::vector<int> modulus_;
  bool tables_ = false;
  std::vector<gfe> add_tab_;
  std::vector<gfe> mul_tab_;
  std::vector<gfe> inv_tab_;
};

// Value-type wrapper carrying its field; mixing fields raises MixedFieldError.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr f, gfe v) : f_(std::move(f)), v_(v) {}

  const FieldPtr& field() const { return f_; }
  gfe value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(long long n) const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;       // element text only
  std::string full_str() const;  // "GF(4;t^2+t+1): t+1"

 private:
  const Field& checked_field(const FieldElement& o) const;
  FieldPtr f_;
  gfe v_ = 0;
};

// All q elements in canonical order (packed values 0..q-1).
std::vector<FieldElement> enumerate_elements(const FieldPtr& f);

// --- polynomial helpers over F_p (little-endian int coefficient vectors) ---
namespace polyfp {
std::vector<int> trim(std::vector<int> a);
std::vector<int> mod(std::vector<int> a, const std::vector<int>& b, long long p);
bool is_irreducible(const std::vector<int>& f, long long p);
}  // namespace polyfp

}  // namespace surfcode
