#include "surfcode/bounds.hpp"

#include <algorithm>

namespace surfcode {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::DStar: return "DStar";
    case TheoremId::NefMain: return "NefMain";
    case TheoremId::AntiNefMain: return "AntiNefMain";
    case TheoremId::GenusFloor: return "GenusFloor";
    case TheoremId::PicardOne: return "PicardOne";
    case TheoremId::BetaFloor: return "BetaFloor";
    case TheoremId::FibrationNef: return "FibrationNef";
    case TheoremId::FibrationIrredFibers: return "FibrationIrredFibers";
    case TheoremId::P3Basic: return "P3Basic";
    case TheoremId::P3GenusFloor: return "P3GenusFloor";
    case TheoremId::P3PicardOne: return "P3PicardOne";
    case TheoremId::DimensionLB: return "DimensionLB";
  }
  return "?";
}

namespace {

TheoremId theorem_from_name(const std::string& s) {
  for (int i = 0; i <= (int)TheoremId::DimensionLB; ++i)
    if (s == theorem_name((TheoremId)i)) return (TheoremId)i;
  throw ParseError("unknown theorem id: " + s);
}

BoundReport not_applicable(TheoremId id, std::string reason) {
  BoundReport rep;
  rep.theorem = id;
  rep.applicable = false;
  rep.reason = std::move(reason);
  return rep;
}

// floor + clamp an exact value into a report
void finish(BoundReport& rep, const Rat& exact, long long n_points) {
  rep.applicable = true;
  rep.value_unclamped = exact.floor_ll();
  rep.clamped = rep.value_unclamped > n_points;
  rep.value = rep.clamped ? n_points : rep.value_unclamped;
}

void finish(BoundReport& rep, const RadicalSum& exact, long long n_points) {
  rep.applicable = true;
  rep.value_unclamped = exact.floor_ll();
  rep.clamped = rep.value_unclamped > n_points;
  rep.value = rep.clamped ? n_points : rep.value_unclamped;
}

// consistency of the canonical-class flag with H.K for an ample effective H
std::optional<std::string> canonical_flag_conflict(CanonicalClass c, long long HK) {
  switch (c) {
    case CanonicalClass::Nef:
      if (HK < 0) return "canonical_class=nef inconsistent with H.K < 0";
      break;
    case CanonicalClass::AntiStrictlyNef:
      if (HK >= 0) return "canonical_class=anti_strictly_nef inconsistent with H.K >= 0";
      break;
    case CanonicalClass::AntiNef:
      if (HK > 0) return "canonical_class=anti_nef inconsistent with H.K > 0";
      break;
    case CanonicalClass::None:
      break;
  }
  return std::nullopt;
}

}  // namespace

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem_name(theorem);
  j["applicable"] = applicable;
  if (!applicable) {
    j["reason"] = reason;
    return j;
  }
  j["value"] = value;
  j["value_unclamped"] = value_unclamped;
  j["clamped"] = clamped;
  if (!branch.empty()) j["branch"] = branch;
  if (!assumptions_used.empty()) j["assumptions"] = assumptions_used;
  if (alt_value) {
    j["alt_value"] = *alt_value;
    j["alt_label"] = alt_label;
  }
  return j;
}

BoundReport BoundReport::from_json(const nlohmann::json& j) {
  BoundReport rep;
  rep.theorem = theorem_from_name(j.at("theorem").get<std::string>());
  rep.applicable = j.at("applicable").get<bool>();
  if (!rep.applicable) {
    rep.reason = j.value("reason", "");
    return rep;
  }
  rep.value = j.at("value").get<long long>();
  rep.value_unclamped = j.at("value_unclamped").get<long long>();
  rep.clamped = j.at("clamped").get<bool>();
  rep.branch = j.value("branch", "");
  if (j.contains("assumptions"))
    rep.assumptions_used = j.at("assumptions").get<std::vector<std::string>>();
  if (j.contains("alt_value")) {
    rep.alt_value = j.at("alt_value").get<long long>();
    rep.alt_label = j.value("alt_label", "");
  }
  return rep;
}

Rat lemma_combiner(long long n_points, const Rat& a, const Rat& b1, const Rat& b2,
                   const Rat& c, long long m) {
  if (a.sign() < 0 || b1.sign() < 0 || b2.sign() < 0 || c.sign() < 0)
    throw NegativeParameterError("combiner parameters must be nonnegative");
  if (m < 0) throw NegativeParameterError("m must be nonnegative");
  return Rat(n_points) - a * (c + Rat(m) * b2) - Rat(m) * b1;
}

Rat d_star(const SurfaceInvariants& inv, long long r) {
  if (r < 1) throw InvalidInputError("r must be >= 1");
  Rat pi = virtual_genus_rat(inv.H2, inv.HK, r);
  return Rat(inv.n_points) - Rat(r * inv.H2) * Rat(inv.q + 1 + inv.m) -
         Rat(inv.m) * (pi - Rat(1));
}

BoundReport bound_d_star(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::DStar;
  const CanonicalClass cc = inv.hypotheses.canonical_class;
  if (cc != CanonicalClass::Nef && cc != CanonicalClass::AntiStrictlyNef)
    return not_applicable(rep.theorem,
                          "needs canonical_class nef or anti_strictly_nef");
  if (auto conflict = canonical_flag_conflict(cc, inv.HK))
    return not_applicable(rep.theorem, *conflict);
  if (cc == CanonicalClass::AntiStrictlyNef) {
    // the baseline is only implied by the sharper bound when its extra term
    // m r (pi_H - 1) is nonnegative
    if (virtual_genus_rat(inv.H2, inv.HK, 1) < Rat(1))
      return not_applicable(rep.theorem, "pi_H < 1: baseline not implied");
  }
  rep.assumptions_used = {"canonical_class"};
  rep.branch = canonical_class_name(cc);
  finish(rep, d_star(inv, r), inv.n_points);
  return rep;
}

BoundReport bound_nef_family(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::NefMain;
  const CanonicalClass cc = inv.hypotheses.canonical_class;
  if (cc != CanonicalClass::Nef && cc != CanonicalClass::AntiStrictlyNef)
    return not_applicable(TheoremId::NefMain,
                          "needs canonical_class nef or anti_strictly_nef");
  if (auto conflict = canonical_flag_conflict(cc, inv.HK))
    return not_applicable(cc == CanonicalClass::Nef ? TheoremId::NefMain
                                                    : TheoremId::AntiNefMain,
                          *conflict);
  rep.assumptions_used = {"canonical_class"};
  if (cc == CanonicalClass::Nef) {
    rep.theorem = TheoremId::NefMain;
    rep.branch = "nef";
    finish(rep, d_star(inv, r), inv.n_points);
  } else {
    rep.theorem = TheoremId::AntiNefMain;
    rep.branch = "anti_strictly_nef";
    Rat pi1 = virtual_genus_rat(inv.H2, inv.HK, 1);
    Rat value = d_star(inv, r) + Rat(inv.m) * Rat(r) * (pi1 - Rat(1));
    finish(rep, value, inv.n_points);
  }
  return rep;
}

BoundReport bound_genus_floor(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::GenusFloor;
  if (!inv.hypotheses.genus_floor_ell)
    return not_applicable(rep.theorem, "needs genus_floor_ell");
  long long ell = *inv.hypotheses.genus_floor_ell;
  rep.assumptions_used = {"genus_floor_ell"};
  rep.branch = "ell=" + std::to_string(ell);
  Rat pi = virtual_genus_rat(inv.H2, inv.HK, r);
  Rat correction = (Rat(r * inv.H2) - (pi - Rat(1)) / Rat(ell)) * Rat(inv.q + 1 + inv.m);
  finish(rep, d_star(inv, r) + correction, inv.n_points);
  return rep;
}

BoundReport bound_picard_one(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::PicardOne;
  const auto& po = inv.hypotheses.picard_one;
  if (!po || !po->h_generates)
    return not_applicable(rep.theorem, "needs picard_one with h_generates");
  if (inv.HK % inv.H2 != 0)
    return not_applicable(rep.theorem,
                          "picard_one requires H.K divisible by H.H (K = c*H)");
  rep.assumptions_used = {"picard_one"};
  const long long q = inv.q, m = inv.m, H2 = inv.H2, n = inv.n_points;
  Rat threshold = Rat(2 * (q + 1 + m), m * H2);
  Rat pi1 = virtual_genus_rat(inv.H2, inv.HK, 1);
  if (3 * H2 + inv.HK >= 0) {
    if (Rat(r) > threshold) {
      rep.branch = "case_i_high_r";
      Rat pir = virtual_genus_rat(inv.H2, inv.HK, r);
      finish(rep, Rat(n) - (Rat(q + 1) + Rat(m) * pir), n);
    } else {
      rep.branch = "case_i_low_r";
      finish(rep, Rat(n) - Rat(r) * (Rat(q + 1) + Rat(m) * pi1), n);
    }
  } else {
    if (Rat(r) > threshold - Rat(3)) {
      rep.branch = "case_ii_high_r";
      Rat value = Rat(n) - Rat(q + 1 + m) - Rat(m * H2) * Rat(r * r - 3, 2);
      finish(rep, value, n);
    } else {
      rep.branch = "case_ii_low_r";
      finish(rep, Rat(n) - Rat(r) * Rat(q + 1 + m - m * H2), n);
    }
  }
  return rep;
}

BoundReport bound_beta_floor(const SurfaceInvariants& inv, long long r, BetaMode mode) {
  BoundReport rep;
  rep.theorem = TheoremId::BetaFloor;
  if (!inv.hypotheses.beta)
    return not_applicable(rep.theorem, "needs beta");
  long long beta = *inv.hypotheses.beta;
  if (beta < 1)
    return not_applicable(rep.theorem, "beta must be >= 1");
  const CanonicalClass cc = inv.hypotheses.canonical_class;
  bool nef = cc == CanonicalClass::Nef;
  bool anti = cc == CanonicalClass::AntiNef || cc == CanonicalClass::AntiStrictlyNef;
  if (!nef && !anti)
    return not_applicable(rep.theorem, "needs canonical_class nef or anti_nef");
  if (auto conflict = canonical_flag_conflict(cc, inv.HK))
    return not_applicable(rep.theorem, *conflict);
  rep.assumptions_used = {"beta", "canonical_class"};

  const long long q = inv.q, m = inv.m, H2 = inv.H2, n = inv.n_points;
  // psi(k) = (m/2) phi(k) + k (q + 1 + m) evaluated at k = 1 and at the
  // stationary endpoint k_max = r sqrt(H2/beta):
  //   psi(1)     = (m/2) r^2 H2 + (q + 1 + m)
  //   psi(k_max) = r (m/2 + (q + 1 + m)/beta) sqrt(H2 beta)
  RadicalSum psi1 = RadicalSum(Rat(m * r * r * H2, 2) + Rat(q + 1 + m));
  RadicalSum psik = RadicalSum::sqrt_term(
      Rat(r) * (Rat(m, 2) + Rat(q + 1 + m, beta)), H2 * beta);
  bool k1_wins = (psi1 - psik).sign() >= 0;
  RadicalSum worst = k1_wins ? psi1 : psik;
  rep.branch = k1_wins ? "endpoint_k1" : "endpoint_kmax";

  RadicalSum value = RadicalSum(Rat(n)) - worst;
  if (nef) {
    if (mode == BetaMode::Literal) {
      // stated trailing term: (m/2) r sqrt(H2/(2 beta)) = (m r / (4 beta)) sqrt(2 H2 beta)
      value -= RadicalSum::sqrt_term(Rat(m * r, 4 * beta), 2 * H2 * beta);
      rep.branch += ",literal";
    } else {
      value -= RadicalSum(Rat(m * r * inv.HK, 2));
      rep.branch += ",proof_derived";
    }
  } else {
    rep.branch += ",anti_nef";
  }
  finish(rep, value, n);
  return rep;
}

BoundReport bound_fibration(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::FibrationNef;
  if (inv.hypotheses.canonical_class != CanonicalClass::Nef)
    return not_applicable(rep.theorem, "needs canonical_class nef");
  if (auto conflict = canonical_flag_conflict(CanonicalClass::Nef, inv.HK))
    return not_applicable(rep.theorem, *conflict);
  if (!inv.hypotheses.fibration)
    return not_applicable(rep.theorem, "needs fibration data");
  if (!inv.hypotheses.h_has_horizontal_component)
    return not_applicable(rep.theorem, "needs h_has_horizontal_component");
  const FibrationData& fib = *inv.hypotheses.fibration;
  rep.assumptions_used = {"canonical_class", "fibration", "h_has_horizontal_component"};
  long long delta = defect(fib.base_genus, fib.base_points, inv.q);
  rep.branch = "delta=" + std::to_string(delta);
  finish(rep, d_star(inv, r) + Rat(delta), inv.n_points);
  return rep;
}

BoundReport bound_fibration_irreducible_fibers(const SurfaceInvariants& inv, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::FibrationIrredFibers;
  if (!inv.hypotheses.fibration)
    return not_applicable(rep.theorem, "needs fibration data");
  const FibrationData& fib = *inv.hypotheses.fibration;
  if (!fib.singular_fibers_irreducible)
    return not_applicable(rep.theorem, "needs singular_fibers_irreducible");
  if (!inv.hypotheses.h_has_horizontal_component)
    return not_applicable(rep.theorem, "needs h_has_horizontal_component");
  long long ell = std::min(fib.fiber_genus, fib.base_genus) - 1;
  if (ell < 1)
    return not_applicable(rep.theorem,
                          "min(fiber_genus, base_genus) - 1 = " + std::to_string(ell) +
                              " is below 1");
  rep.assumptions_used = {"fibration", "h_has_horizontal_component"};
  long long delta = defect(fib.base_genus, fib.base_points, inv.q);
  rep.branch = "ell=" + std::to_string(ell) + ",delta=" + std::to_string(delta);
  Rat pi = virtual_genus_rat(inv.H2, inv.HK, r);
  Rat correction = (Rat(r * inv.H2) - (pi - Rat(1)) / Rat(ell)) * Rat(inv.q + 1 + inv.m);
  finish(rep, d_star(inv, r) + correction + Rat(delta), inv.n_points);
  return rep;
}

BoundReport bound_p3_basic(long long d, long long a, long long q, long long n_points,
                           long long r) {
  if (d < 3) throw InvalidInputError("bound_p3_basic requires degree >= 3");
  SurfaceInvariants inv = invariants_from_p3(d, a, q, n_points);
  BoundReport rep = bound_nef_family(inv, r);
  rep.theorem = TheoremId::P3Basic;
  return rep;
}

BoundReport bound_p3_genus_floor(long long d, long long q, long long n_points,
                                 long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::P3GenusFloor;
  if (d < 4)
    return not_applicable(rep.theorem, "requires degree >= 4");
  if (r < 1) throw InvalidInputError("r must be >= 1");
  long long m = floor_two_sqrt_q(q);
  rep.assumptions_used = {"ns_zl"};
  rep.branch = "ell=" + Rat(d * (d - 3), 2).str();
  // d*(X, rL, S) followed by the genus-floor correction with ell = d(d-3)/2
  Rat base = Rat(n_points) - Rat(r * d) * Rat(q + 1 + m) -
             Rat(m) * Rat(r * d * (r + d - 4), 2);
  Rat correction =
      Rat(r * d) * (Rat(1) - Rat(r + d - 4, d * (d - 3))) * Rat(q + 1 + m);
  finish(rep, base + correction, n_points);
  return rep;
}

BoundReport bound_p3_picard_one(long long d, long long h, long long H2, long long q,
                                long long n_points, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::P3PicardOne;
  if (d < 4)
    return not_applicable(rep.theorem, "requires degree >= 4");
  if (h < 1 || H2 < 1)
    return not_applicable(rep.theorem, "requires h >= 1 and H2 >= 1");
  if (h * h * H2 != d)
    return not_applicable(rep.theorem, "requires h^2 H2 = d (L = h*H with L.L = d)");
  if (r < 1) throw InvalidInputError("r must be >= 1");
  long long m = floor_two_sqrt_q(q);
  rep.assumptions_used = {"ns_zh"};
  Rat threshold = Rat(2 * (q + 1 + m), m * H2);
  Rat stated;
  if (Rat(r) > threshold) {
    rep.branch = "high_r";
    stated = Rat(n_points) - Rat(q + 1 + m) - Rat(r * H2) * Rat(r + h * (d - 4), 2);
  } else {
    rep.branch = "low_r";
    stated = Rat(n_points) - Rat(r) * Rat(q + 1 + m) -
             Rat(r * H2) * Rat(1 + h * (d - 4), 2);
  }
  // The primary value comes from the general Picard-rank-one bound with
  // K = h(d-4) H.  The closed forms stated for this specialization disagree
  // with that specialization (they drop the m factor on the quadratic term)
  // and exceed exact distances on surfaces where the general value is sound,
  // so they are reported alongside, not as the bound.
  HypothesisFlags flags;
  flags.picard_one = PicardOne{true, h};
  SurfaceInvariants inv =
      SurfaceInvariants::make(q, H2, h * (d - 4) * H2, n_points, flags);
  BoundReport general = bound_picard_one(inv, r);
  if (general.applicable) {
    rep.applicable = true;
    rep.value = general.value;
    rep.value_unclamped = general.value_unclamped;
    rep.clamped = general.clamped;
    rep.alt_value = stated.floor_ll();
    rep.alt_label = "stated_form";
  } else {
    finish(rep, stated, n_points);
  }
  return rep;
}

long long dimension_lower_bound(long long G_self, long long G_dot_K, long long p_a) {
  long long diff = G_self - G_dot_K;
  if (diff % 2 != 0)
    throw NonIntegralError("G.G - G.K must be even");
  return diff / 2 + 1 + p_a;
}

BoundReport bound_p3_dimension(long long d, long long r) {
  BoundReport rep;
  rep.theorem = TheoremId::DimensionLB;
  if (d < 2) throw InvalidInputError("surface degree must be >= 2");
  if (r < 1) throw InvalidInputError("r must be >= 1");
  if (r <= d - 4)
    return not_applicable(rep.theorem,
                          "requires K.L < G.L, i.e. r > d - 4");
  rep.applicable = true;
  rep.branch = "G=" + std::to_string(r) + "L";
  rep.assumptions_used = {"ev_injective"};
  long long value = dimension_lower_bound(r * r * d, r * d * (d - 4),
                                          binomial_ll(d - 1, 3));
  rep.value = rep.value_unclamped = value;
  return rep;
}

std::vector<BoundReport> all_bounds(const SurfaceInvariants& inv, long long r) {
  std::vector<BoundReport> out;
  out.push_back(bound_d_star(inv, r));
  out.push_back(bound_nef_family(inv, r));
  out.push_back(bound_genus_floor(inv, r));
  out.push_back(bound_picard_one(inv, r));
  out.push_back(bound_beta_floor(inv, r, BetaMode::Literal));
  out.push_back(bound_beta_floor(inv, r, BetaMode::ProofDerived));
  out.push_back(bound_fibration(inv, r));
  out.push_back(bound_fibration_irreducible_fibers(inv, r));
  return out;
}

}  // namespace surfcode
