#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "surfcode/rational.hpp"

namespace surfcode {

enum class CanonicalClass { None, Nef, AntiStrictlyNef, AntiNef };

const char* canonical_class_name(CanonicalClass c);
CanonicalClass canonical_class_from_name(const std::string& s);

// Genus-one-fibration data asserted for a surface: the base curve B and the
// generic fiber's virtual genus pi0.
struct FibrationData {
  long long base_genus = 0;       // g_B
  long long base_points = 0;      // #B(F_q)
  long long fiber_genus = 0;      // pi0, virtual genus of the generic fiber
  bool singular_fibers_irreducible = false;

  bool operator==(const FibrationData&) const = default;
};

struct PicardOne {
  bool h_generates = false;       // numerical class group generated by H
  std::optional<long long> h;     // L = h*H when the surface sits in P^3

  bool operator==(const PicardOne&) const = default;
};

// Hypotheses are assertions supplied by the caller, not derived quantities.
struct HypothesisFlags {
  CanonicalClass canonical_class = CanonicalClass::None;
  std::optional<long long> genus_floor_ell;  // every F_q-irreducible curve has virtual genus >= ell + 1
  std::optional<long long> beta;             // D.D >= beta > 0 for every F_q-irreducible curve D
  std::optional<PicardOne> picard_one;
  std::optional<FibrationData> fibration;
  bool h_has_horizontal_component = false;

  bool operator==(const HypothesisFlags&) const = default;
};

struct SurfaceInvariants {
  long long q = 0;         // prime power
  long long m = 0;         // floor(2*sqrt(q)), derived from q
  long long H2 = 0;        // H.H
  long long HK = 0;        // H.K_X
  long long n_points = 0;  // #S, evaluation points
  HypothesisFlags hypotheses;

  static SurfaceInvariants make(long long q, long long H2, long long HK,
                                long long n_points, HypothesisFlags flags = {});
};

// floor(2*sqrt(q)) = isqrt(4q); q must be a prime power >= 2
long long floor_two_sqrt_q(long long q);

// Virtual genus of rH by adjunction; exact, throws NonIntegralGenusError when
// r^2 H2 + r HK is odd (inconsistent intersection numbers).
long long virtual_genus(const SurfaceInvariants& inv, long long r);
Rat virtual_genus_rat(long long H2, long long HK, long long r);

// Degree-d smooth surface in P^3 with H = a*L (L the hyperplane class):
// H2 = a^2 d, HK = a d (d-4); canonical class flag AntiStrictlyNef for d <= 3,
// Nef for d >= 4.
SurfaceInvariants invariants_from_p3(long long d, long long a, long long q,
                                     long long n_points);

// Point-count ceiling for an F_q-irreducible curve of virtual genus pi:
// q + 1 + m*pi when absolutely irreducible, otherwise min(pi + 1, q + 1 + m*pi).
long long curve_point_upper_bound(long long pi, long long q, bool absolutely_irreducible);

// |#D(F_q) - #C(F_q)| ceiling for a degree-rbar covering D -> C:
// (rbar - 1) q + m (pi_D - g_C); throws InvalidGeneraError when pi_D < g_C.
long long covering_deviation_bound(long long rbar, long long q, long long pi_D,
                                   long long g_C);

// delta(B) = q + 1 + m g_B - #B(F_q); throws NegativeDefectError when negative.
long long defect(long long g_B, long long n_B, long long q);

nlohmann::json invariants_to_json(const SurfaceInvariants& inv);
SurfaceInvariants invariants_from_json(const nlohmann::json& j);

}  // namespace surfcode
