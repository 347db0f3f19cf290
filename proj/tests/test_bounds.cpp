#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcode/bounds.hpp"
#include "surfcode/errors.hpp"

using namespace surfcode;

namespace {

SurfaceInvariants cubic_q4(long long n) {
  // degree-3 surface in 3-space over GF(4): H2 = 3, HK = -3
  HypothesisFlags flags;
  flags.canonical_class = CanonicalClass::AntiStrictlyNef;
  return SurfaceInvariants::make(4, 3, -3, n, flags);
}

SurfaceInvariants quartic_q2(long long n, HypothesisFlags extra = {}) {
  extra.canonical_class = CanonicalClass::Nef;
  return SurfaceInvariants::make(2, 4, 0, n, extra);
}

}  // namespace

TEST_CASE("combiner arithmetic and validation") {
  CHECK(lemma_combiner(100, 3, 0, 1, 5, 4) == Rat(73));
  CHECK(lemma_combiner(10, 0, 0, 0, 0, 2) == Rat(10));
  CHECK(lemma_combiner(50, Rat(1, 2), 1, 0, 3, 4) == Rat(50) - Rat(3, 2) - Rat(4));
  CHECK_THROWS_AS(lemma_combiner(100, -1, 0, 1, 5, 4), NegativeParameterError);
  CHECK_THROWS_AS(lemma_combiner(100, 3, -1, 1, 5, 4), NegativeParameterError);
  CHECK_THROWS_AS(lemma_combiner(100, 3, 0, 1, -5, 4), NegativeParameterError);
}

TEST_CASE("baseline designed distance") {
  // #S - r H2 (q+1+m) - m (pi_r - 1)
  CHECK(d_star(cubic_q4(100), 1) == Rat(73));           // 100 - 27 - 0
  CHECK(d_star(quartic_q2(50), 1) == Rat(26));          // 50 - 20 - 4
  // degree-5 surface over GF(7) can go negative: 49 - 65 - 25
  auto quintic = SurfaceInvariants::make(7, 5, 5, 49);
  CHECK(d_star(quintic, 1) == Rat(-41));
  CHECK_THROWS_AS(d_star(quintic, 0), InvalidInputError);
}

TEST_CASE("baseline bound applicability gates") {
  auto rep = bound_d_star(cubic_q4(100), 1);
  CHECK(rep.applicable);
  CHECK(rep.value == 73);
  CHECK(rep.branch == "anti_strictly_nef");
  CHECK(rep.assumptions_used == std::vector<std::string>{"canonical_class"});

  // no canonical-class hypothesis: not applicable
  auto none = SurfaceInvariants::make(4, 3, -3, 100);
  CHECK_FALSE(bound_d_star(none, 1).applicable);

  // flag inconsistent with the intersection numbers
  HypothesisFlags nef_flag;
  nef_flag.canonical_class = CanonicalClass::Nef;
  auto bad = SurfaceInvariants::make(4, 3, -3, 100, nef_flag);
  auto conflict = bound_d_star(bad, 1);
  CHECK_FALSE(conflict.applicable);
  CHECK(conflict.reason.find("inconsistent") != std::string::npos);

  // anti-strictly-nef with plane-like section genus 0: baseline not implied
  HypothesisFlags asn;
  asn.canonical_class = CanonicalClass::AntiStrictlyNef;
  auto plane_like = SurfaceInvariants::make(4, 1, -3, 100, asn);
  CHECK_FALSE(bound_d_star(plane_like, 1).applicable);
}

TEST_CASE("nef and anti-nef main bounds") {
  // nef branch equals the baseline
  auto nef = bound_nef_family(quartic_q2(50), 1);
  CHECK(nef.applicable);
  CHECK(nef.theorem == TheoremId::NefMain);
  CHECK(nef.value == 26);
  CHECK(nef.branch == "nef");

  // anti-strictly-nef adds m r (pi_1 - 1); for the cubic pi_1 = 1 so it
  // coincides with the baseline
  auto anti = bound_nef_family(cubic_q4(100), 2);
  CHECK(anti.theorem == TheoremId::AntiNefMain);
  CHECK(anti.branch == "anti_strictly_nef");
  CHECK(Rat(anti.value) == d_star(cubic_q4(100), 2));
  // ... and for H2 = 12 (doubled polarization, pi_1 = 4) it adds m r * 3
  HypothesisFlags asn;
  asn.canonical_class = CanonicalClass::AntiStrictlyNef;
  auto dbl = SurfaceInvariants::make(4, 12, -6, 500, asn);
  auto rep = bound_nef_family(dbl, 2);
  CHECK(Rat(rep.value) == d_star(dbl, 2) + Rat(4 * 2 * 3));

  // negative values are reported, not clamped from below
  auto quintic_flags = HypothesisFlags{};
  quintic_flags.canonical_class = CanonicalClass::Nef;
  auto quintic = SurfaceInvariants::make(7, 5, 5, 49, quintic_flags);
  auto neg = bound_nef_family(quintic, 1);
  CHECK(neg.applicable);
  CHECK(neg.value == -41);
  CHECK_FALSE(neg.clamped);
}

TEST_CASE("genus floor bound") {
  // quartic-type data over GF(5) with ell = 2: 16 + (4 - 2/2)*10 = 46
  HypothesisFlags flags;
  flags.genus_floor_ell = 2;
  auto inv = SurfaceInvariants::make(5, 4, 0, 64, flags);
  auto rep = bound_genus_floor(inv, 1);
  CHECK(rep.applicable);
  CHECK(rep.value == 46);
  CHECK(rep.branch == "ell=2");
  CHECK(rep.assumptions_used == std::vector<std::string>{"genus_floor_ell"});
  CHECK_FALSE(bound_genus_floor(SurfaceInvariants::make(5, 4, 0, 64), 1).applicable);

  // degenerate data where the bound exceeds the point count gets clamped
  HypothesisFlags ell1;
  ell1.genus_floor_ell = 1;
  auto degen = SurfaceInvariants::make(2, 1, -3, 10, ell1);
  CHECK(d_star(degen, 1) == Rat(7));
  auto clamped = bound_genus_floor(degen, 1);
  CHECK(clamped.value_unclamped == 17);
  CHECK(clamped.clamped);
  CHECK(clamped.value == 10);
}

TEST_CASE("rank-one class group bound, both genus cases") {
  HypothesisFlags po;
  po.picard_one = PicardOne{true, std::nullopt};
  // case with 3 H2 + HK >= 0 (cubic data over GF(4)): threshold 3/2
  auto inv = SurfaceInvariants::make(4, 3, -3, 100, po);
  auto low = bound_picard_one(inv, 1);
  CHECK(low.applicable);
  CHECK(low.branch == "case_i_low_r");
  CHECK(low.value == 100 - 9);  // n - r(q+1+m*pi_1), pi_1 = 1
  auto high = bound_picard_one(inv, 2);
  CHECK(high.branch == "case_i_high_r");
  CHECK(high.value == 100 - 21);  // n - (q+1+m*pi_2), pi_2 = 4

  // the two case-i formulas agree exactly at the integer threshold r* = 5
  // (q = 2, H2 = 1, HK = -1: threshold = 2(q+1+m)/(m H2) = 5)
  auto thr = SurfaceInvariants::make(2, 1, -1, 30, po);
  auto at_thr = bound_picard_one(thr, 5);
  CHECK(at_thr.branch == "case_i_low_r");  // not strictly above the threshold
  const long long pi5 = virtual_genus(SurfaceInvariants::make(2, 1, -1, 30), 5);
  CHECK(at_thr.value == 30 - (2 + 1 + 2 * pi5));  // high-side form, same number
  CHECK(at_thr.value == 30 - 5 * (2 + 1 + 2 * 1));

  // case with 3 H2 + HK < 0: split at threshold - 3
  auto ii = SurfaceInvariants::make(2, 1, -4, 20, po);
  auto ii_low = bound_picard_one(ii, 2);
  CHECK(ii_low.branch == "case_ii_low_r");
  CHECK(ii_low.value == 20 - 2 * (5 - 2));  // n - r(q+1+m - m H2)
  auto ii_high = bound_picard_one(ii, 3);
  CHECK(ii_high.branch == "case_ii_high_r");
  CHECK(ii_high.value == 20 - 5 - 2 * (9 - 3) / 2 * 1);  // n - (q+1+m) - m H2 (r^2-3)/2
  // continuity here too: at r = threshold - 3 = 2 both forms give n - 6
  CHECK(ii_low.value == 20 - 5 - (2 * 1 * (4 - 3)) / 2);

  // gates: missing hypothesis, and H.K not a multiple of H.H
  CHECK_FALSE(bound_picard_one(SurfaceInvariants::make(4, 3, -3, 100), 1).applicable);
  auto indivisible = SurfaceInvariants::make(4, 2, -3, 100, po);
  auto rej = bound_picard_one(indivisible, 1);
  CHECK_FALSE(rej.applicable);
  CHECK(rej.reason.find("divisible") != std::string::npos);
}

TEST_CASE("self-intersection floor bound at both endpoints") {
  // endpoint k = 1 wins: q = 4, H2 = 2, beta = 2, r = 1
  HypothesisFlags f1;
  f1.beta = 2;
  f1.canonical_class = CanonicalClass::Nef;
  auto inv1 = SurfaceInvariants::make(4, 2, 0, 100, f1);
  auto lit = bound_beta_floor(inv1, 1, BetaMode::Literal);
  CHECK(lit.applicable);
  CHECK(lit.branch == "endpoint_k1,literal");
  CHECK(lit.value == 85);  // 100 - 13 - sqrt(2), floored
  auto pd = bound_beta_floor(inv1, 1, BetaMode::ProofDerived);
  CHECK(pd.branch == "endpoint_k1,proof_derived");
  CHECK(pd.value == 87);  // H.K = 0 removes the trailing term

  // stationary endpoint wins: q = 4, H2 = 4, beta = 1, r = 1
  HypothesisFlags f2;
  f2.beta = 1;
  f2.canonical_class = CanonicalClass::Nef;
  auto inv2 = SurfaceInvariants::make(4, 4, 0, 100, f2);
  auto lit2 = bound_beta_floor(inv2, 1, BetaMode::Literal);
  CHECK(lit2.branch == "endpoint_kmax,literal");
  CHECK(lit2.value == 75);  // 100 - 22 - 2 sqrt(2), floored
  CHECK(bound_beta_floor(inv2, 1, BetaMode::ProofDerived).value == 78);

  // anti-nef: no trailing term in either mode
  HypothesisFlags f3;
  f3.beta = 2;
  f3.canonical_class = CanonicalClass::AntiNef;
  auto inv3 = SurfaceInvariants::make(4, 2, 0, 100, f3);
  auto anti = bound_beta_floor(inv3, 1, BetaMode::Literal);
  CHECK(anti.branch == "endpoint_k1,anti_nef");
  CHECK(anti.value == 87);
  // anti-strictly-nef is accepted as anti-nef
  HypothesisFlags f4;
  f4.beta = 1;
  f4.canonical_class = CanonicalClass::AntiStrictlyNef;
  auto inv4 = SurfaceInvariants::make(4, 3, -3, 100, f4);
  CHECK(bound_beta_floor(inv4, 1, BetaMode::Literal).applicable);

  CHECK_FALSE(bound_beta_floor(SurfaceInvariants::make(4, 2, 0, 100), 1,
                               BetaMode::Literal)
                  .applicable);
}

TEST_CASE("fibration bounds add the base defect") {
  HypothesisFlags fib;
  fib.fibration = FibrationData{1, 1, 2, false};
  fib.h_has_horizontal_component = true;
  auto inv = quartic_q2(50, fib);
  auto rep = bound_fibration(inv, 1);
  CHECK(rep.applicable);
  CHECK(rep.branch == "delta=4");  // 2 + 1 + 2*1 - 1
  CHECK(rep.value == 30);          // d* = 26 plus the defect

  // without a horizontal component the argument does not apply
  HypothesisFlags no_horiz;
  no_horiz.fibration = FibrationData{1, 1, 2, false};
  CHECK_FALSE(bound_fibration(quartic_q2(50, no_horiz), 1).applicable);
  // and a cubic (canonical class not nef) cannot use it either
  HypothesisFlags fib_on_cubic;
  fib_on_cubic.canonical_class = CanonicalClass::AntiStrictlyNef;
  fib_on_cubic.fibration = FibrationData{1, 1, 2, false};
  fib_on_cubic.h_has_horizontal_component = true;
  auto cubic = SurfaceInvariants::make(4, 3, -3, 100, fib_on_cubic);
  CHECK_FALSE(bound_fibration(cubic, 1).applicable);

  // irreducible singular fibers: genus floor with ell = min(pi0, g_B) - 1
  HypothesisFlags irr;
  irr.fibration = FibrationData{2, 1, 2, true};
  irr.h_has_horizontal_component = true;
  auto inv2 = quartic_q2(50, irr);
  auto rep2 = bound_fibration_irreducible_fibers(inv2, 1);
  CHECK(rep2.applicable);
  CHECK(rep2.branch == "ell=1,delta=6");
  CHECK(rep2.value == 42);  // 26 + (4 - 2/1)*5 + 6
  // needs no canonical-class flag at all
  HypothesisFlags irr_only;
  irr_only.fibration = FibrationData{2, 1, 2, true};
  irr_only.h_has_horizontal_component = true;
  auto no_cc = SurfaceInvariants::make(2, 4, 0, 50, irr_only);
  CHECK(bound_fibration_irreducible_fibers(no_cc, 1).applicable);
  // ell below 1: rational or elliptic base with low fiber genus
  HypothesisFlags low;
  low.fibration = FibrationData{1, 1, 2, true};
  low.h_has_horizontal_component = true;
  auto rep3 = bound_fibration_irreducible_fibers(quartic_q2(50, low), 1);
  CHECK_FALSE(rep3.applicable);
  CHECK(rep3.reason.find("below 1") != std::string::npos);
}

TEST_CASE("hypersurface wrappers") {
  // degree 3 dispatches to the anti-strictly-nef branch
  auto basic3 = bound_p3_basic(3, 1, 4, 100, 1);
  CHECK(basic3.theorem == TheoremId::P3Basic);
  CHECK(basic3.applicable);
  CHECK(basic3.value == 73);
  CHECK(basic3.branch == "anti_strictly_nef");
  // degree 4 dispatches to the nef branch
  auto basic4 = bound_p3_basic(4, 1, 2, 50, 1);
  CHECK(basic4.value == 26);
  CHECK(basic4.branch == "nef");
  CHECK_THROWS_AS(bound_p3_basic(2, 1, 4, 10, 1), InvalidInputError);

  // genus floor specialization: equals the general bound with ell = d(d-3)/2
  auto p3gf = bound_p3_genus_floor(4, 5, 64, 1);
  CHECK(p3gf.applicable);
  CHECK(p3gf.value == 46);
  CHECK(p3gf.branch == "ell=2");
  CHECK_FALSE(bound_p3_genus_floor(3, 5, 64, 1).applicable);  // needs degree >= 4
  for (long long d = 4; d <= 7; ++d)
    for (long long q : {2LL, 5LL, 9LL})
      for (long long r = 1; r <= 4; ++r) {
        HypothesisFlags gf;
        gf.genus_floor_ell = d * (d - 3) / 2;
        auto general = bound_genus_floor(
            SurfaceInvariants::make(q, d, d * (d - 4), 200, gf), r);
        auto special = bound_p3_genus_floor(d, q, 200, r);
        REQUIRE(general.applicable);
        REQUIRE(special.applicable);
        CHECK(general.value_unclamped == special.value_unclamped);
      }
}

TEST_CASE("hypersurface rank-one bound uses the general value, keeps the stated form") {
  // quartic data over GF(5) with 64 points, r = 1: general gives 46, the
  // stated closed form gives 52 (observed above the exact distance 48)
  auto rep = bound_p3_picard_one(4, 1, 4, 5, 64, 1);
  CHECK(rep.applicable);
  CHECK(rep.value == 46);
  REQUIRE(rep.alt_value.has_value());
  CHECK(*rep.alt_value == 52);
  CHECK(rep.alt_label == "stated_form");
  CHECK(rep.branch == "low_r");

  // quartic over GF(7) with 56 points, r = 2: high-r side; general 3, stated 35
  auto rep2 = bound_p3_picard_one(4, 1, 4, 7, 56, 2);
  CHECK(rep2.branch == "high_r");
  CHECK(rep2.value == 3);
  CHECK(*rep2.alt_value == 35);

  // structural gates
  CHECK_FALSE(bound_p3_picard_one(3, 1, 3, 4, 100, 1).applicable);  // degree < 4
  CHECK_FALSE(bound_p3_picard_one(4, 1, 5, 5, 64, 1).applicable);   // h^2 H2 != d
  CHECK_FALSE(bound_p3_picard_one(4, 2, 2, 5, 64, 1).applicable);   // 4*2 != 4
  // h = 2, H2 = 1, d = 4 is consistent (L = 2H, H2 = d/h^2)
  CHECK(bound_p3_picard_one(4, 2, 1, 5, 64, 1).applicable);
}

TEST_CASE("dimension floor for hypersurface section spaces") {
  CHECK(dimension_lower_bound(3, -3, 0) == 4);
  CHECK(dimension_lower_bound(4, 0, 1) == 4);
  CHECK(dimension_lower_bound(20, 10, 4) == 10);
  CHECK_THROWS_AS(dimension_lower_bound(1, 0, 0), NonIntegralError);

  auto rep = bound_p3_dimension(3, 1);
  CHECK(rep.applicable);
  CHECK(rep.value == 4);
  CHECK(rep.branch == "G=1L");
  CHECK(rep.assumptions_used == std::vector<std::string>{"ev_injective"});
  CHECK(bound_p3_dimension(4, 1).value == 4);
  CHECK(bound_p3_dimension(5, 2).value == 10);
  auto below = bound_p3_dimension(5, 1);  // r <= d - 4
  CHECK_FALSE(below.applicable);
  // the floor matches the monomial count C(r+3,3) - C(r-d+3,3) whenever defined
  for (long long d = 2; d <= 9; ++d)
    for (long long r = std::max(1LL, d - 3); r <= 10; ++r) {
      auto b = bound_p3_dimension(d, r);
      REQUIRE(b.applicable);
      CHECK(b.value == binomial_ll(r + 3, 3) - binomial_ll(r - d + 3, 3));
    }
}

TEST_CASE("the full bound family reports eight entries in fixed order") {
  auto reports = all_bounds(cubic_q4(100), 1);
  REQUIRE(reports.size() == 8);
  CHECK(reports[0].theorem == TheoremId::DStar);
  CHECK(reports[1].theorem == TheoremId::AntiNefMain);
  CHECK(reports[2].theorem == TheoremId::GenusFloor);
  CHECK(reports[3].theorem == TheoremId::PicardOne);
  CHECK(reports[4].theorem == TheoremId::BetaFloor);
  CHECK(reports[5].theorem == TheoremId::BetaFloor);
  CHECK(reports[6].theorem == TheoremId::FibrationNef);
  CHECK(reports[7].theorem == TheoremId::FibrationIrredFibers);
  // with no extra hypotheses only the first two apply
  CHECK(reports[0].applicable);
  CHECK(reports[1].applicable);
  for (size_t i = 2; i < 8; ++i) CHECK_FALSE(reports[i].applicable);
}

TEST_CASE("bound reports serialize to JSON and back") {
  auto rep = bound_p3_picard_one(4, 1, 4, 5, 64, 1);
  auto back = BoundReport::from_json(rep.to_json());
  CHECK(back.theorem == rep.theorem);
  CHECK(back.applicable == rep.applicable);
  CHECK(back.value == rep.value);
  CHECK(back.value_unclamped == rep.value_unclamped);
  CHECK(back.clamped == rep.clamped);
  CHECK(back.branch == rep.branch);
  CHECK(back.assumptions_used == rep.assumptions_used);
  REQUIRE(back.alt_value.has_value());
  CHECK(*back.alt_value == *rep.alt_value);
  CHECK(back.alt_label == rep.alt_label);

  auto na = bound_genus_floor(SurfaceInvariants::make(5, 4, 0, 64), 1);
  auto na_back = BoundReport::from_json(na.to_json());
  CHECK_FALSE(na_back.applicable);
  CHECK(na_back.reason == na.reason);
}

TEST_CASE("theorem names are distinct and round trip") {
  for (auto id : {TheoremId::DStar, TheoremId::NefMain, TheoremId::AntiNefMain,
                  TheoremId::GenusFloor, TheoremId::PicardOne, TheoremId::BetaFloor,
                  TheoremId::FibrationNef, TheoremId::FibrationIrredFibers,
                  TheoremId::P3Basic, TheoremId::P3GenusFloor, TheoremId::P3PicardOne,
                  TheoremId::DimensionLB}) {
    const std::string name = theorem_name(id);
    CHECK_FALSE(name.empty());
  }
  CHECK(std::string(theorem_name(TheoremId::DStar)) !=
        std::string(theorem_name(TheoremId::NefMain)));
}
