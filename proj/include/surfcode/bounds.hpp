#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcode/invariants.hpp"
#include "surfcode/radical.hpp"

namespace surfcode {

enum class TheoremId {
  DStar,
  NefMain,
  AntiNefMain,
  GenusFloor,
  PicardOne,
  BetaFloor,
  FibrationNef,
  FibrationIrredFibers,
  P3Basic,
  P3GenusFloor,
  P3PicardOne,
  DimensionLB,
};

const char* theorem_name(TheoremId id);

// How the trailing canonical-class term of the beta-floor bound is evaluated:
// Literal takes the stated closed form (m/2) r sqrt(H2/(2 beta)); ProofDerived
// substitutes the quantity the argument actually controls, (m/2) r HK.
enum class BetaMode { Literal, ProofDerived };

struct BoundReport {
  TheoremId theorem = TheoremId::DStar;
  bool applicable = false;
  std::string reason;                       // why not applicable
  long long value = 0;                      // floored, clamped to n_points
  long long value_unclamped = 0;            // floored, before clamping
  bool clamped = false;                     // degenerate: raw bound exceeded n
  std::string branch;
  std::vector<std::string> assumptions_used;
  std::optional<long long> alt_value;       // cross-derived value, when reported
  std::string alt_label;

  nlohmann::json to_json() const;
  static BoundReport from_json(const nlohmann::json& j);
};

// n - a(c + m b2) - m b1, the shared combiner behind every floor-style bound;
// throws NegativeParameterError when a, b1, b2 or c is negative.
Rat lemma_combiner(long long n_points, const Rat& a, const Rat& b1, const Rat& b2,
                   const Rat& c, long long m);

// d*(X, rH, S) = #S - r H2 (q + 1 + m) - m (pi_rH - 1), exact.
Rat d_star(const SurfaceInvariants& inv, long long r);

BoundReport bound_d_star(const SurfaceInvariants& inv, long long r);
BoundReport bound_nef_family(const SurfaceInvariants& inv, long long r);
BoundReport bound_genus_floor(const SurfaceInvariants& inv, long long r);
BoundReport bound_picard_one(const SurfaceInvariants& inv, long long r);
BoundReport bound_beta_floor(const SurfaceInvariants& inv, long long r, BetaMode mode);
BoundReport bound_fibration(const SurfaceInvariants& inv, long long r);
BoundReport bound_fibration_irreducible_fibers(const SurfaceInvariants& inv, long long r);

// Degree-d surface in P^3, H = a*L: dispatches to the nef family.
BoundReport bound_p3_basic(long long d, long long a, long long q, long long n_points,
                           long long r);
// Genus floor specialized to P^3 with ell = d(d-3)/2 (curves on surfaces with
// cyclic class group have virtual genus >= (d-1)(d-2)/2); requires d >= 4.
BoundReport bound_p3_genus_floor(long long d, long long q, long long n_points,
                                 long long r);
// Picard-rank-one surface in P^3 with L = h*H (so h^2 H2 = d).  The value is
// the general Picard-one bound specialized to K = h(d-4)H; the closed forms
// stated for this case disagree with that specialization (alt_value,
// "stated_form") and were observed to exceed exact distances.
BoundReport bound_p3_picard_one(long long d, long long h, long long H2, long long q,
                                long long n_points, long long r);

// (G.G - G.K)/2 + 1 + p_a; throws NonIntegralError when G.G - G.K is odd.
long long dimension_lower_bound(long long G_self, long long G_dot_K, long long p_a);

// Dimension floor for G = r*L on a degree-d surface in P^3; applicable
// when K.L < G.L, i.e. r > d - 4.
BoundReport bound_p3_dimension(long long d, long long r);

// All distance bounds for one invariant set (beta reported in both modes).
std::vector<BoundReport> all_bounds(const SurfaceInvariants& inv, long long r);

}  // namespace surfcode
