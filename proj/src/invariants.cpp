#include "surfcode/invariants.hpp"

#include <algorithm>

namespace surfcode {

const char* canonical_class_name(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::None: return "none";
    case CanonicalClass::Nef: return "nef";
    case CanonicalClass::AntiStrictlyNef: return "anti_strictly_nef";
    case CanonicalClass::AntiNef: return "anti_nef";
  }
  return "none";
}

CanonicalClass canonical_class_from_name(const std::string& s) {
  if (s == "none") return CanonicalClass::None;
  if (s == "nef") return CanonicalClass::Nef;
  if (s == "anti_strictly_nef") return CanonicalClass::AntiStrictlyNef;
  if (s == "anti_nef") return CanonicalClass::AntiNef;
  throw ParseError("unknown canonical class: " + s);
}

long long floor_two_sqrt_q(long long q) {
  if (!is_prime_power(q)) throw InvalidInputError("q must be a prime power >= 2");
  return isqrt_ll(4 * q);
}

SurfaceInvariants SurfaceInvariants::make(long long q, long long H2, long long HK,
                                          long long n_points, HypothesisFlags flags) {
  if (H2 < 1) throw InvalidInputError("H2 must be >= 1 for an ample class");
  if (n_points < 0) throw InvalidInputError("n_points must be >= 0");
  SurfaceInvariants inv;
  inv.q = q;
  inv.m = floor_two_sqrt_q(q);  // validates q as well
  inv.H2 = H2;
  inv.HK = HK;
  inv.n_points = n_points;
  if (flags.genus_floor_ell && *flags.genus_floor_ell < 1)
    throw InvalidInputError("genus_floor_ell must be >= 1");
  if (flags.beta && *flags.beta < 0)
    throw InvalidInputError("beta must be >= 0");
  if (flags.fibration) {
    const FibrationData& fib = *flags.fibration;
    if (fib.base_genus < 0 || fib.base_points < 0)
      throw InvalidInputError("fibration data must be nonnegative");
    if (fib.base_points > q + 1 + inv.m * fib.base_genus)
      throw InvalidInputError("fibration base point count exceeds its Weil ceiling");
  }
  if (flags.picard_one && flags.picard_one->h && *flags.picard_one->h < 1)
    throw InvalidInputError("picard_one.h must be >= 1");
  inv.hypotheses = std::move(flags);
  return inv;
}

Rat virtual_genus_rat(long long H2, long long HK, long long r) {
  // adjunction: pi = r^2 H2 / 2 + r HK / 2 + 1
  return Rat(r * r * H2 + r * HK, 2) + Rat(1);
}

long long virtual_genus(const SurfaceInvariants& inv, long long r) {
  if (r < 1) throw InvalidInputError("r must be >= 1");
  Rat pi = virtual_genus_rat(inv.H2, inv.HK, r);
  if (!pi.is_integer())
    throw NonIntegralGenusError("virtual genus of rH is not an integer (r=" +
                                std::to_string(r) + ", H2=" + std::to_string(inv.H2) +
                                ", HK=" + std::to_string(inv.HK) + ")");
  return pi.num();
}

SurfaceInvariants invariants_from_p3(long long d, long long a, long long q,
                                     long long n_points) {
  if (d < 2) throw InvalidInputError("surface degree must be >= 2");
  if (a < 1) throw InvalidInputError("H = a*L requires a >= 1");
  HypothesisFlags flags;
  flags.canonical_class = d >= 4 ? CanonicalClass::Nef : CanonicalClass::AntiStrictlyNef;
  return SurfaceInvariants::make(q, a * a * d, a * d * (d - 4), n_points, flags);
}

long long curve_point_upper_bound(long long pi, long long q, bool absolutely_irreducible) {
  if (pi < 0) throw InvalidGeneraError("virtual genus must be >= 0");
  long long m = floor_two_sqrt_q(q);
  long long weil = q + 1 + m * pi;
  if (absolutely_irreducible) return weil;
  return std::min(pi + 1, weil);
}

long long covering_deviation_bound(long long rbar, long long q, long long pi_D,
                                   long long g_C) {
  if (rbar < 1) throw InvalidInputError("covering degree must be >= 1");
  if (g_C < 0) throw InvalidGeneraError("curve genus must be >= 0");
  if (pi_D < g_C)
    throw InvalidGeneraError("virtual genus of the covering curve is below the base genus");
  long long m = floor_two_sqrt_q(q);
  return (rbar - 1) * q + m * (pi_D - g_C);
}

long long defect(long long g_B, long long n_B, long long q) {
  if (g_B < 0) throw InvalidGeneraError("base genus must be >= 0");
  if (n_B < 0) throw InvalidInputError("base point count must be >= 0");
  long long m = floor_two_sqrt_q(q);
  long long delta = q + 1 + m * g_B - n_B;
  if (delta < 0)
    throw NegativeDefectError("point count " + std::to_string(n_B) +
                              " exceeds the Weil ceiling " +
                              std::to_string(q + 1 + m * g_B));
  return delta;
}

nlohmann::json invariants_to_json(const SurfaceInvariants& inv) {
  nlohmann::json j;
  j["q"] = inv.q;
  j["m"] = inv.m;
  j["H2"] = inv.H2;
  j["HK"] = inv.HK;
  j["n_points"] = inv.n_points;
  const HypothesisFlags& h = inv.hypotheses;
  j["canonical_class"] = canonical_class_name(h.canonical_class);
  if (h.genus_floor_ell) j["genus_floor_ell"] = *h.genus_floor_ell;
  if (h.beta) j["beta"] = *h.beta;
  if (h.picard_one) {
    j["picard_h_generates"] = h.picard_one->h_generates;
    if (h.picard_one->h) j["picard_h"] = *h.picard_one->h;
  }
  if (h.fibration) {
    j["fibration_base_genus"] = h.fibration->base_genus;
    j["fibration_base_points"] = h.fibration->base_points;
    j["fibration_fiber_genus"] = h.fibration->fiber_genus;
    j["fibration_singular_fibers_irreducible"] = h.fibration->singular_fibers_irreducible;
  }
  if (h.h_has_horizontal_component) j["h_has_horizontal_component"] = true;
  return j;
}

SurfaceInvariants invariants_from_json(const nlohmann::json& j) {
  HypothesisFlags flags;
  if (j.contains("canonical_class"))
    flags.canonical_class = canonical_class_from_name(j.at("canonical_class").get<std::string>());
  if (j.contains("genus_floor_ell")) flags.genus_floor_ell = j.at("genus_floor_ell").get<long long>();
  if (j.contains("beta")) flags.beta = j.at("beta").get<long long>();
  if (j.contains("picard_h_generates")) {
    PicardOne po;
    po.h_generates = j.at("picard_h_generates").get<bool>();
    if (j.contains("picard_h")) po.h = j.at("picard_h").get<long long>();
    flags.picard_one = po;
  }
  if (j.contains("fibration_base_genus")) {
    FibrationData fib;
    fib.base_genus = j.at("fibration_base_genus").get<long long>();
    fib.base_points = j.at("fibration_base_points").get<long long>();
    if (j.contains("fibration_fiber_genus"))
      fib.fiber_genus = j.at("fibration_fiber_genus").get<long long>();
    if (j.contains("fibration_singular_fibers_irreducible"))
      fib.singular_fibers_irreducible = j.at("fibration_singular_fibers_irreducible").get<bool>();
    flags.fibration = fib;
  }
  if (j.contains("h_has_horizontal_component"))
    flags.h_has_horizontal_component = j.at("h_has_horizontal_component").get<bool>();
  SurfaceInvariants inv = SurfaceInvariants::make(
      j.at("q").get<long long>(), j.at("H2").get<long long>(),
      j.at("HK").get<long long>(), j.at("n_points").get<long long>(), flags);
  if (j.contains("m") && j.at("m").get<long long>() != inv.m)
    throw InvalidInputError("supplied m does not match floor(2*sqrt(q))");
  return inv;
}

}  // namespace surfcode
