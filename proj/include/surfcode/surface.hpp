#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfcode/projective.hpp"

namespace surfcode {

enum class SmoothnessKind { Unknown, AssertedByUser, Verified, SingularWitness };

struct SmoothnessStatus {
  SmoothnessKind kind = SmoothnessKind::Unknown;
  int ext_checked = 0;            // for Verified: all extensions 1..ext_checked
  std::optional<Point> witness;   // for SingularWitness (point over F_{q^k})
  int witness_ext = 0;

  std::string str() const;
};

// Surface X = V(f) in P^3 over F_q; f homogeneous of degree >= 2 in 4 vars.
struct SurfaceP3 {
  std::string id;
  FieldPtr field;
  HomogPoly f;
  bool absolutely_irreducible_asserted = false;
  SmoothnessStatus smoothness;
};

SurfaceP3 make_surface(std::string id, FieldPtr field, HomogPoly f);

// All F_q-rational points of X in canonical (ascending lex) order.
std::vector<Point> rational_points(const SurfaceP3& X);

// Jacobian search for singular points over F_{q^k}, k = 1..max_ext.
// Returns Verified(max_ext) when no singular point is found, otherwise a
// SingularWitness with the first offending point in enumeration order.
SmoothnessStatus check_smoothness(const SurfaceP3& X, int max_ext);

// Plane curve C = V(g) in P^2 with a caller-supplied geometric genus.
struct PlaneCurveSpec {
  FieldPtr field;
  HomogPoly g;      // 3 variables
  long long genus;
};

long long count_points_plane_curve(const PlaneCurveSpec& C);

// Number of F_q-rational lines of P^3 contained in X (exact; symbolic check
// on each line spanned by a rational point pair).
long long count_rational_lines(const SurfaceP3& X);

}  // namespace surfcode
