#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "surfcode/field.hpp"

namespace surfcode {

// Canonical projective point: coordinates scaled so the first nonzero one is 1.
struct Point {
  FieldPtr field;
  std::vector<gfe> x;

  std::string str() const;  // "x0:x1:x2:x3"
  bool operator==(const Point& o) const { return x == o.x && field->same(*o.field); }
  bool operator<(const Point& o) const { return x < o.x; }  // lex on packed coords
};

// Normalizes raw homogeneous coordinates; throws InvalidInputError on all-zero.
Point make_point(FieldPtr field, std::vector<gfe> raw);
Point parse_point(const FieldPtr& field, std::string_view text);

inline constexpr long long kMaxProjectivePoints = 4'194'304;

// P^n(F_q) in ascending lex order on canonical coordinate vectors;
// n must be 2 or 3.  Throws TooLargeError past kMaxProjectivePoints.
std::vector<Point> enumerate_projective_points(const FieldPtr& field, int n);
long long projective_point_count(long long q, int n);
void for_each_projective_point(const FieldPtr& field, int n,
                               const std::function<void(const Point&)>& fn);

// Sparse homogeneous polynomial in 3 or 4 variables over a fixed field.
class HomogPoly {
 public:
  using Exps = std::array<std::uint8_t, 4>;  // unused trailing vars are 0

  HomogPoly(FieldPtr field, int nvars, int degree);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exps, gfe>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void set(const Exps& e, gfe coeff);             // degree-checked; 0 erases
  void add_term(const Exps& e, gfe coeff);        // accumulates

  gfe evaluate_packed(std::span<const gfe> coords) const;
  FieldElement evaluate(const Point& p) const;    // checks field and arity

  HomogPoly derivative(int var) const;            // formal partial; degree-1
  // same polynomial with coefficients pushed through a subfield embedding
  HomogPoly mapped(const FieldPtr& target, const std::vector<gfe>& embed) const;

  // largest exponent tuple under lex order with x0 heaviest
  Exps leading_exps() const;

  std::string str(const std::array<std::string, 4>& names = {"x0", "x1", "x2", "x3"}) const;

 private:
  FieldPtr field_;
  int nvars_;
  int degree_;
  std::map<Exps, gfe> terms_;
};

// Image of each packed element of `from` inside `to`; requires `to` to be an
// extension of `from` with the same characteristic and divisible degree.
// Deterministic: uses the first root of from.modulus() in enumeration order.
std::vector<gfe> embedding_table(const Field& from, const Field& to);

}  // namespace surfcode
