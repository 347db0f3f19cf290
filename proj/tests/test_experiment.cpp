#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "surfcode/errors.hpp"
#include "surfcode/experiment.hpp"

using namespace surfcode;

TEST_CASE("config serializes to JSON and back") {
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.budget = 1'000'000;
  cfg.max_ext = 3;
  cfg.format = "json";
  cfg.corpus = true;
  cfg.random_surfaces.push_back({5, 1, 4, 99, {1, 2}});
  cfg.surface_files.push_back({"some/path.poly", {2}});
  auto back = ExperimentConfig::from_json(cfg.to_json());
  CHECK(back.seed == 42);
  CHECK(back.budget == 1'000'000);
  CHECK(back.max_ext == 3);
  CHECK(back.format == "json");
  CHECK(back.corpus);
  REQUIRE(back.random_surfaces.size() == 1);
  CHECK(back.random_surfaces[0].p == 5);
  CHECK(back.random_surfaces[0].degree == 4);
  CHECK(back.random_surfaces[0].seed == 99);
  CHECK(back.random_surfaces[0].r_values == std::vector<long long>{1, 2});
  REQUIRE(back.surface_files.size() == 1);
  CHECK(back.surface_files[0].path == "some/path.poly");

  // defaults survive an empty object
  auto dflt = ExperimentConfig::from_json(nlohmann::json::object());
  CHECK(dflt.seed == 1);
  CHECK(dflt.budget == 200'000'000);
  CHECK(dflt.max_ext == 2);
  CHECK(dflt.format == "csv");
  CHECK_FALSE(dflt.corpus);
}

TEST_CASE("the named study set is well formed") {
  const auto& corpus = named_corpus();
  CHECK(corpus.size() == 12);
  std::set<std::string> ids;
  for (const auto& entry : corpus) {
    CHECK(ids.insert(entry.id).second);  // unique ids
    CHECK(entry.degree >= 3);
    CHECK(entry.degree <= 5);
    REQUIRE_FALSE(entry.r_values.empty());
    CHECK(entry.r_values.front() == 1);
    // class-group assertions are only made for the quartic members
    if (entry.assert_genus_floor || entry.assert_picard) CHECK(entry.degree == 4);
    // every entry can actually be built
    SurfaceP3 X = corpus_surface(entry);
    CHECK(X.id == entry.id);
    CHECK(X.f.degree() == entry.degree);
    CHECK(X.field->q() > 1);
  }
}

TEST_CASE("surface generators are deterministic in the seed") {
  auto F2 = Field::make(2, 1);
  SurfaceP3 a = random_sparse_surface(F2, 3, 118, "a");
  SurfaceP3 b = random_sparse_surface(F2, 3, 118, "b");
  CHECK(a.f.terms() == b.f.terms());
  SurfaceP3 c = random_sparse_surface(F2, 3, 119, "c");
  CHECK(a.f.terms() != c.f.terms());
  // diagonal coefficients must be nonzero in the field
  auto F5 = Field::make(5, 1);
  CHECK_THROWS_AS(diagonal_surface(F5, 3, {1, 5, 1, 1}, "bad"), InvalidInputError);
  SurfaceP3 d = diagonal_surface(F5, 4, {1, 1, 1, 2}, "diag");
  CHECK(d.f.terms().size() == 4);
  CHECK(d.f.terms().at({0, 0, 0, 4}) == 2);
}

TEST_CASE("one full pipeline run on a small surface") {
  // degree-3 random surface over GF(4), seed 1002 (a corpus member):
  // small enough that the distance search is exhaustive and instant.
  const auto& corpus = named_corpus();
  auto it = std::find_if(corpus.begin(), corpus.end(),
                         [](const CorpusEntry& e) { return e.id == "rnd_d3_q4"; });
  REQUIRE(it != corpus.end());
  SurfaceP3 X = corpus_surface(*it);
  auto status = check_smoothness(X, 2);
  REQUIRE(status.kind == SmoothnessKind::Verified);
  ExperimentConfig cfg;
  InstanceRecord rec = run_instance(X, status, count_rational_lines(X), 1, cfg,
                                    false, false);
  CHECK(rec.error.empty());
  CHECK(rec.surface_id == "rnd_d3_q4");
  CHECK(rec.q == 4);
  CHECK(rec.degree == 3);
  CHECK(rec.r == 1);
  CHECK(rec.injective);
  CHECK(rec.k == 4);
  CHECK(rec.dim_sections == 4);
  CHECK(rec.n > 0);
  CHECK(rec.distance_exact);
  CHECK(rec.distance >= 1);
  CHECK(rec.distance <= rec.n);
  CHECK(rec.smoothness == "verified_ext2");
  CHECK(rec.rational_lines >= 0);
  REQUIRE_FALSE(rec.bounds.empty());
  // every checked bound is sound on this instance
  for (const auto& b : rec.bounds) {
    if (b.report.applicable && b.report.theorem != TheoremId::DimensionLB &&
        b.checked) {
      CHECK_FALSE(b.violated);
      CHECK(b.report.value <= rec.distance);
    }
    if (b.report.theorem == TheoremId::DimensionLB && b.checked) {
      CHECK(b.report.value <= rec.k);
    }
    if (b.report.applicable) CHECK_FALSE(b.provenance.empty());
  }
  // cubic surface: baseline bound is machine-checkable (no literature input)
  auto dstar = std::find_if(rec.bounds.begin(), rec.bounds.end(),
                            [](const BoundOutcome& b) {
                              return b.report.theorem == TheoremId::DStar;
                            });
  REQUIRE(dstar != rec.bounds.end());
  CHECK(dstar->provenance == "machine_verified");
  CHECK(dstar->checked);
}

TEST_CASE("singular surfaces are skipped with an error note") {
  auto F2 = Field::make(2, 1);
  HomogPoly f(F2, 4, 3);
  f.set({1, 1, 1, 0}, 1);
  f.set({0, 0, 0, 3}, 1);
  SurfaceP3 X = make_surface("sing", F2, f);
  auto status = check_smoothness(X, 2);
  REQUIRE(status.kind == SmoothnessKind::SingularWitness);
  ExperimentConfig cfg;
  InstanceRecord rec = run_instance(X, status, -1, 1, cfg, false, false);
  CHECK_FALSE(rec.error.empty());
  CHECK(rec.error.find("skipped") != std::string::npos);
  CHECK(rec.bounds.empty());
}

TEST_CASE("starved budgets mark the distance as inexact and uncheck bounds") {
  const auto& corpus = named_corpus();
  auto it = std::find_if(corpus.begin(), corpus.end(),
                         [](const CorpusEntry& e) { return e.id == "fermat_d3_q5"; });
  REQUIRE(it != corpus.end());
  SurfaceP3 X = corpus_surface(*it);
  auto status = check_smoothness(X, 1);
  ExperimentConfig cfg;
  cfg.budget = 10;
  InstanceRecord rec = run_instance(X, status, -1, 2, cfg, false, false);
  CHECK(rec.error.empty());
  CHECK_FALSE(rec.distance_exact);
  CHECK(rec.candidates <= 10);
  for (const auto& b : rec.bounds) {
    if (b.report.theorem == TheoremId::DimensionLB) continue;  // gated on injectivity
    CHECK_FALSE(b.checked);
    CHECK_FALSE(b.violated);
  }
}

TEST_CASE("experiment runs end to end and serializes deterministically") {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.random_surfaces.push_back({2, 1, 3, 118, {1}});
  cfg.random_surfaces.push_back({2, 2, 3, 1002, {1}});
  auto records = run_experiment(cfg);
  REQUIRE(records.size() == 2);
  for (const auto& rec : records) {
    CHECK(rec.tool_version == std::string("0.1.0"));
    CHECK(rec.seed != 0);
  }
  auto again = run_experiment(cfg);
  CHECK(records_to_csv(records) == records_to_csv(again));
  CHECK(records_to_json_text(records) == records_to_json_text(again));

  // all three formats emit nonempty text; unknown formats are rejected
  CHECK_FALSE(emit_records(records, "csv").empty());
  CHECK_FALSE(emit_records(records, "json").empty());
  CHECK_FALSE(emit_records(records, "md").empty());
  CHECK_THROWS_AS(emit_records(records, "yaml"), InvalidInputError);

  // the CSV header is stable
  const std::string csv = records_to_csv(records);
  CHECK(csv.rfind("surface_id,seed,q,degree,r,smoothness,", 0) == 0);

  // records survive a JSON round trip
  auto j = records[0].to_json();
  InstanceRecord back = InstanceRecord::from_json(j);
  CHECK(back.surface_id == records[0].surface_id);
  CHECK(back.n == records[0].n);
  CHECK(back.k == records[0].k);
  CHECK(back.distance == records[0].distance);
  CHECK(back.bounds.size() == records[0].bounds.size());
  for (size_t i = 0; i < back.bounds.size(); ++i) {
    CHECK(back.bounds[i].provenance == records[0].bounds[i].provenance);
    CHECK(back.bounds[i].checked == records[0].bounds[i].checked);
    CHECK(back.bounds[i].violated == records[0].bounds[i].violated);
    CHECK(back.bounds[i].report.value == records[0].bounds[i].report.value);
  }
}

TEST_CASE("experiment configuration is validated") {
  ExperimentConfig empty;
  CHECK_THROWS_AS(run_experiment(empty), InvalidInputError);  // no surfaces at all
  ExperimentConfig bad_fmt;
  bad_fmt.format = "xml";
  bad_fmt.random_surfaces.push_back({2, 1, 3, 118, {1}});
  CHECK_THROWS_AS(run_experiment(bad_fmt), InvalidInputError);
  ExperimentConfig bad_budget;
  bad_budget.budget = 0;
  bad_budget.random_surfaces.push_back({2, 1, 3, 118, {1}});
  CHECK_THROWS_AS(run_experiment(bad_budget), InvalidInputError);
  ExperimentConfig bad_ext;
  bad_ext.max_ext = 0;
  bad_ext.random_surfaces.push_back({2, 1, 3, 118, {1}});
  CHECK_THROWS_AS(run_experiment(bad_ext), InvalidInputError);
}

TEST_CASE("soundness exit code flags machine-verified violations only") {
  InstanceRecord rec;
  rec.surface_id = "synthetic";
  BoundOutcome ok;
  ok.report.theorem = TheoremId::DStar;
  ok.report.applicable = true;
  ok.provenance = "machine_verified";
  ok.checked = true;
  ok.violated = false;
  rec.bounds.push_back(ok);
  CHECK(soundness_exit_code({rec}) == 0);

  BoundOutcome lit_bad = ok;
  lit_bad.provenance = "literature_asserted";
  lit_bad.violated = true;
  rec.bounds.push_back(lit_bad);
  CHECK(soundness_exit_code({rec}) == 0);  // literature claims never gate

  BoundOutcome mach_bad = ok;
  mach_bad.violated = true;
  rec.bounds.push_back(mach_bad);
  CHECK(soundness_exit_code({rec}) == 2);
}
