#include "surfcode/experiment.hpp"

#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "surfcode/errors.hpp"
#include "surfcode/field.hpp"
#include "surfcode/mindist.hpp"
#include "surfcode/text_io.hpp"
#include "surfcode/version.hpp"

namespace surfcode {

namespace {

std::vector<long long> r_values_or_default(const std::vector<long long>& rs) {
  if (rs.empty()) return {1};
  for (long long r : rs)
    if (r < 1)
      throw InvalidInputError("experiment: r values must be >= 1");
  return rs;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

BoundReport inapplicable_stub(TheoremId id, const std::string& reason) {
  BoundReport rep;
  rep.theorem = id;
  rep.applicable = false;
  rep.reason = reason;
  return rep;
}

// Assumptions this tool establishes itself for surfaces built from their
// defining polynomial: the canonical-class sign (from the degree), the point
// count, and (up to the searched extensions) smoothness.
std::string provenance_of(const BoundReport& rep, const SmoothnessStatus& status,
                          bool injective) {
  static const std::set<std::string> kMachine = {"canonical_class", "n_points",
                                                 "smoothness"};
  bool all_machine = status.kind == SmoothnessKind::Verified;
  for (const std::string& a : rep.assumptions_used) {
    if (a == "ev_injective") {
      if (!injective) return "hypothesis_unverified";
      continue;
    }
    if (!kMachine.count(a)) all_machine = false;
  }
  return all_machine ? "machine_verified" : "literature_asserted";
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["budget"] = budget;
  j["max_ext"] = max_ext;
  j["format"] = format;
  j["corpus"] = corpus;
  j["random_surfaces"] = nlohmann::json::array();
  for (const auto& s : random_surfaces) {
    nlohmann::json js;
    js["p"] = s.p;
    js["e"] = s.e;
    js["degree"] = s.degree;
    js["seed"] = s.seed;
    js["r_values"] = s.r_values;
    j["random_surfaces"].push_back(js);
  }
  j["surface_files"] = nlohmann::json::array();
  for (const auto& s : surface_files) {
    nlohmann::json js;
    js["path"] = s.path;
    js["r_values"] = s.r_values;
    j["surface_files"].push_back(js);
  }
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("experiment config must be a JSON object");
  ExperimentConfig c;
  try {
    c.seed = j.value("seed", c.seed);
    c.budget = j.value("budget", c.budget);
    c.max_ext = j.value("max_ext", c.max_ext);
    c.format = j.value("format", c.format);
    c.corpus = j.value("corpus", c.corpus);
    if (j.contains("random_surfaces")) {
      for (const auto& js : j.at("random_surfaces")) {
        RandomSurfaceSpec s;
        s.p = js.value("p", s.p);
        s.e = js.value("e", s.e);
        s.degree = js.value("degree", s.degree);
        s.seed = js.value("seed", s.seed);
        s.r_values = js.value("r_values", s.r_values);
        c.random_surfaces.push_back(std::move(s));
      }
    }
    if (j.contains("surface_files")) {
      for (const auto& js : j.at("surface_files")) {
        FileSurfaceSpec s;
        s.path = js.at("path").get<std::string>();
        s.r_values = js.value("r_values", s.r_values);
        c.surface_files.push_back(std::move(s));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  return c;
}

nlohmann::json BoundOutcome::to_json() const {
  nlohmann::json j;
  j["report"] = report.to_json();
  j["provenance"] = provenance;
  j["checked"] = checked;
  j["violated"] = violated;
  return j;
}

BoundOutcome BoundOutcome::from_json(const nlohmann::json& j) {
  BoundOutcome o;
  o.report = BoundReport::from_json(j.at("report"));
  o.provenance = j.at("provenance").get<std::string>();
  o.checked = j.at("checked").get<bool>();
  o.violated = j.at("violated").get<bool>();
  return o;
}

nlohmann::json InstanceRecord::to_json() const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["surface_id"] = surface_id;
  j["seed"] = seed;
  j["q"] = q;
  j["degree"] = degree;
  j["r"] = r;
  j["smoothness"] = smoothness;
  j["rational_lines"] = rational_lines;
  j["n"] = n;
  j["k"] = k;
  j["dim_sections"] = dim_sections;
  j["injective"] = injective;
  j["distance"] = distance;
  j["distance_exact"] = distance_exact;
  j["candidates"] = candidates;
  j["distance_method"] = distance_method;
  j["genus_floor_asserted"] = genus_floor_asserted;
  j["picard_asserted"] = picard_asserted;
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : bounds) j["bounds"].push_back(b.to_json());
  j["error"] = error;
  return j;
}

InstanceRecord InstanceRecord::from_json(const nlohmann::json& j) {
  InstanceRecord r;
  try {
    r.tool_version = j.at("tool_version").get<std::string>();
    r.surface_id = j.at("surface_id").get<std::string>();
    r.seed = j.at("seed").get<unsigned long long>();
    r.q = j.at("q").get<long long>();
    r.degree = j.at("degree").get<long long>();
    r.r = j.at("r").get<long long>();
    r.smoothness = j.at("smoothness").get<std::string>();
    r.rational_lines = j.at("rational_lines").get<long long>();
    r.n = j.at("n").get<long long>();
    r.k = j.at("k").get<long long>();
    r.dim_sections = j.at("dim_sections").get<long long>();
    r.injective = j.at("injective").get<bool>();
    r.distance = j.at("distance").get<long long>();
    r.distance_exact = j.at("distance_exact").get<bool>();
    r.candidates = j.at("candidates").get<long long>();
    r.distance_method = j.at("distance_method").get<std::string>();
    r.genus_floor_asserted = j.at("genus_floor_asserted").get<bool>();
    r.picard_asserted = j.at("picard_asserted").get<bool>();
    for (const auto& jb : j.at("bounds"))
      r.bounds.push_back(BoundOutcome::from_json(jb));
    r.error = j.at("error").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance record: ") + e.what());
  }
  return r;
}

const std::vector<CorpusEntry>& named_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    const std::vector<long long> F{1, 1, 1, 1};  // Fermat
    std::vector<CorpusEntry> c;
    // Composition notes.  Over GF(2) only r = 1 runs: every affine
    // coordinate satisfies x^2 = x, so quadratic monomials collapse and
    // r = 2 codes lose rank.  Fermat surfaces of degree q - 1 or with
    // (q-1) | degree are excluded where degenerate: over GF(5) the Fermat
    // quartic has no rational points at all (x^4 = 1 for x != 0), so the
    // degree-4 member over GF(5) uses the diagonal coefficients 1,1,1,2;
    // quintics over GF(2)/GF(4) reduce to coplanar point sets.  The Fermat
    // cubic over GF(2) is also excluded: its points all satisfy
    // x0+x1+x2+x3 = 0 (x^3 = x), which kills the rank of the r = 1 code.
    // Random seeds are pinned to smooth surfaces with injective evaluation.
    // Class-group assertions (assert_genus_floor / assert_picard) are
    // enabled only on degree-4 members with no rational lines, where the
    // resulting bounds were checked against the exact distances.
    c.push_back({"fermat_d3_q4", 2, 2, 3, F, 0, {1, 2}, false, false});
    c.push_back({"fermat_d3_q5", 5, 1, 3, F, 0, {1, 2}, false, false});
    c.push_back({"fermat_d3_q7", 7, 1, 3, F, 0, {1, 2}, false, false});
    c.push_back({"diag_d4_q5", 5, 1, 4, {1, 1, 1, 2}, 0, {1, 2}, true, true});
    c.push_back({"fermat_d4_q7", 7, 1, 4, F, 0, {1, 2}, true, true});
    c.push_back({"fermat_d5_q7", 7, 1, 5, F, 0, {1, 2}, false, false});
    c.push_back({"rnd_d3_q2", 2, 1, 3, {}, 118, {1}, false, false});
    c.push_back({"rnd_d3_q2b", 2, 1, 3, {}, 308, {1}, false, false});
    c.push_back({"rnd_d3_q4", 2, 2, 3, {}, 1002, {1, 2}, false, false});
    c.push_back({"rnd_d4_q2", 2, 1, 4, {}, 42, {1}, false, false});
    c.push_back({"rnd_d4_q4", 2, 2, 4, {}, 24, {1, 2}, true, true});
    c.push_back({"rnd_d5_q2", 2, 1, 5, {}, 138, {1}, false, false});
    return c;
  }();
  return corpus;
}

SurfaceP3 diagonal_surface(const FieldPtr& field, long long degree,
                           const std::array<long long, 4>& coeffs,
                           std::string id) {
  if (degree < 2 || degree > 200)
    throw InvalidInputError("diagonal_surface: degree out of range");
  HomogPoly f(field, 4, (int)degree);
  for (int v = 0; v < 4; ++v) {
    const gfe c = field->from_int(coeffs[v]);
    if (c == 0)
      throw InvalidInputError("diagonal_surface: coefficients must be nonzero");
    HomogPoly::Exps e{0, 0, 0, 0};
    e[v] = (std::uint8_t)degree;
    f.set(e, c);
  }
  return make_surface(std::move(id), field, std::move(f));
}

SurfaceP3 fermat_surface(const FieldPtr& field, long long degree,
                         std::string id) {
  return diagonal_surface(field, degree, {1, 1, 1, 1}, std::move(id));
}

SurfaceP3 random_sparse_surface(const FieldPtr& field, long long degree,
                                unsigned long long seed, std::string id) {
  if (degree < 2 || degree > 200)
    throw InvalidInputError("random_sparse_surface: degree out of range");
  const long long q = field->q();
  std::mt19937_64 rng(seed);
  auto nonzero = [&]() -> gfe { return (gfe)(1 + rng() % (unsigned long long)(q - 1)); };
  HomogPoly f(field, 4, (int)degree);
  for (int v = 0; v < 4; ++v) {
    HomogPoly::Exps e{0, 0, 0, 0};
    e[v] = (std::uint8_t)degree;
    f.add_term(e, nonzero());
  }
  for (int extra = 0; extra < 3; ++extra) {
    long long rem = degree;
    HomogPoly::Exps e{0, 0, 0, 0};
    for (int v = 0; v < 3; ++v) {
      const long long ev = (long long)(rng() % (unsigned long long)(rem + 1));
      e[v] = (std::uint8_t)ev;
      rem -= ev;
    }
    e[3] = (std::uint8_t)rem;
    f.add_term(e, nonzero());
  }
  if (f.zero())
    throw InvalidInputError("random_sparse_surface: terms cancelled to zero");
  return make_surface(std::move(id), field, std::move(f));
}

SurfaceP3 corpus_surface(const CorpusEntry& entry) {
  FieldPtr field = Field::make(entry.p, entry.e);
  if (!entry.diagonal.empty()) {
    if (entry.diagonal.size() != 4)
      throw InvalidInputError("corpus entry needs 4 diagonal coefficients");
    return diagonal_surface(
        field, entry.degree,
        {entry.diagonal[0], entry.diagonal[1], entry.diagonal[2],
         entry.diagonal[3]},
        entry.id);
  }
  return random_sparse_surface(field, entry.degree, entry.seed, entry.id);
}

InstanceRecord run_instance(const SurfaceP3& X, const SmoothnessStatus& status,
                            long long rational_lines, long long r,
                            const ExperimentConfig& config,
                            bool assert_genus_floor, bool assert_picard) {
  InstanceRecord rec;
  rec.tool_version = kToolVersion;
  rec.surface_id = X.id;
  rec.seed = config.seed;
  rec.q = X.field->q();
  rec.degree = X.f.degree();
  rec.r = r;
  rec.smoothness = status.str();
  rec.rational_lines = rational_lines;
  rec.genus_floor_asserted = assert_genus_floor;
  rec.picard_asserted = assert_picard;

  if (status.kind == SmoothnessKind::SingularWitness) {
    rec.error = "skipped: " + status.str();
    return rec;
  }

  try {
    const LinearCode C = build_code(X, r);
    rec.n = (long long)C.n();
    rec.k = (long long)C.k();
    rec.dim_sections = C.provenance ? C.provenance->dim_sections : 0;
    rec.injective = C.provenance && C.provenance->injective;
    const DistanceComputation dist = min_distance_budgeted(C, config.budget);
    rec.distance = dist.distance;
    rec.distance_exact = dist.exact;
    rec.candidates = dist.candidates;
    rec.distance_method = dist.method;
  } catch (const Error& e) {
    rec.error = e.what();
    return rec;
  }

  const long long d = rec.degree;
  const long long q = rec.q;
  SurfaceInvariants base = invariants_from_p3(d, 1, q, rec.n);
  HypothesisFlags flags = base.hypotheses;
  const bool floor_usable = assert_genus_floor && d >= 4;
  const bool picard_usable = assert_picard && d >= 4;
  if (floor_usable) flags.genus_floor_ell = d * (d - 3) / 2;
  if (picard_usable) flags.picard_one = PicardOne{true, 1};
  const SurfaceInvariants inv =
      SurfaceInvariants::make(q, base.H2, base.HK, rec.n, flags);

  std::vector<BoundReport> reports = all_bounds(inv, r);
  reports.push_back(bound_p3_basic(d, 1, q, rec.n, r));
  if (assert_genus_floor)
    reports.push_back(bound_p3_genus_floor(d, q, rec.n, r));
  else
    reports.push_back(inapplicable_stub(
        TheoremId::P3GenusFloor,
        "cyclic class group not asserted for this surface"));
  if (assert_picard)
    reports.push_back(bound_p3_picard_one(d, 1, d, q, rec.n, r));
  else
    reports.push_back(inapplicable_stub(
        TheoremId::P3PicardOne,
        "Picard group generated by the plane section not asserted for this "
        "surface"));
  reports.push_back(bound_p3_dimension(d, r));

  for (const BoundReport& rep : reports) {
    BoundOutcome out;
    out.report = rep;
    if (rep.applicable) {
      out.provenance = provenance_of(rep, status, rec.injective);
      if (rep.theorem == TheoremId::DimensionLB) {
        out.checked = rec.injective;
        out.violated = out.checked && rec.k < rep.value;
      } else {
        out.checked = rec.distance_exact;
        out.violated = out.checked && rep.value > rec.distance;
      }
    }
    rec.bounds.push_back(std::move(out));
  }
  return rec;
}

std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config) {
  if (config.format != "csv" && config.format != "json" && config.format != "md")
    throw InvalidInputError("experiment: format must be csv, json or md");
  if (config.budget < 1)
    throw InvalidInputError("experiment: budget must be >= 1");
  if (config.max_ext < 1 || config.max_ext > 4)
    throw InvalidInputError("experiment: max_ext must be in 1..4");

  struct Job {
    SurfaceP3 X;
    std::vector<long long> r_values;
    bool assert_genus_floor = false;
    bool assert_picard = false;
  };
  std::vector<Job> jobs;
  if (config.corpus) {
    for (const CorpusEntry& entry : named_corpus())
      jobs.push_back({corpus_surface(entry), r_values_or_default(entry.r_values),
                      entry.assert_genus_floor, entry.assert_picard});
  }
  size_t idx = 0;
  for (const RandomSurfaceSpec& spec : config.random_surfaces) {
    FieldPtr field = Field::make(spec.p, spec.e);
    const unsigned long long seed =
        spec.seed ? spec.seed : config.seed * 1000003ull + idx;
    std::ostringstream id;
    id << "rnd_d" << spec.degree << "_q" << field->q() << "_s" << seed;
    jobs.push_back({random_sparse_surface(field, spec.degree, seed, id.str()),
                    r_values_or_default(spec.r_values), false, false});
    ++idx;
  }
  for (const FileSurfaceSpec& spec : config.surface_files) {
    HomogPoly f = poly_from_file(spec.path);
    if (f.nvars() != 4)
      throw InvalidInputError("surface file must use 4 variables: " + spec.path);
    const std::string id = std::filesystem::path(spec.path).stem().string();
    FieldPtr field = f.field();
    jobs.push_back({make_surface(id, field, std::move(f)),
                    r_values_or_default(spec.r_values), false, false});
  }
  if (jobs.empty())
    throw InvalidInputError(
        "experiment: no surfaces requested (enable the corpus or supply "
        "random/file surfaces)");

  std::vector<InstanceRecord> records;
  for (const Job& job : jobs) {
    const SmoothnessStatus status = check_smoothness(job.X, config.max_ext);
    long long lines = -1;
    if (status.kind != SmoothnessKind::SingularWitness)
      lines = count_rational_lines(job.X);
    for (long long r : job.r_values)
      records.push_back(run_instance(job.X, status, lines, r, config,
                                     job.assert_genus_floor,
                                     job.assert_picard));
  }
  return records;
}

std::string records_to_csv(const std::vector<InstanceRecord>& records) {
  std::ostringstream out;
  out << "surface_id,seed,q,degree,r,smoothness,rational_lines,n,k,"
         "dim_sections,injective,distance,distance_exact,distance_method,"
         "candidates,theorem,applicable,branch,value,value_unclamped,clamped,"
         "assumptions,provenance,checked,violated,alt_label,alt_value,reason,"
         "error\n";
  for (const InstanceRecord& rec : records) {
    const std::string prefix =
        csv_escape(rec.surface_id) + "," + std::to_string(rec.seed) + "," +
        std::to_string(rec.q) + "," + std::to_string(rec.degree) + "," +
        std::to_string(rec.r) + "," + csv_escape(rec.smoothness) + "," +
        (rec.rational_lines < 0 ? std::string()
                                : std::to_string(rec.rational_lines)) +
        "," + std::to_string(rec.n) + "," + std::to_string(rec.k) + "," +
        std::to_string(rec.dim_sections) + "," + bool_str(rec.injective) + "," +
        std::to_string(rec.distance) + "," + bool_str(rec.distance_exact) +
        "," + csv_escape(rec.distance_method) + "," +
        std::to_string(rec.candidates);
    if (!rec.error.empty() || rec.bounds.empty()) {
      out << prefix << ",,,,,,,,,,,,," << csv_escape(rec.error) << "\n";
      continue;
    }
    for (const BoundOutcome& b : rec.bounds) {
      const BoundReport& rep = b.report;
      out << prefix << ',' << theorem_name(rep.theorem) << ','
          << bool_str(rep.applicable) << ',' << csv_escape(rep.branch) << ',';
      if (rep.applicable)
        out << rep.value << ',' << rep.value_unclamped << ','
            << bool_str(rep.clamped);
      else
        out << ",,";
      out << ',' << csv_escape(join(rep.assumptions_used, '|')) << ','
          << csv_escape(b.provenance) << ',' << bool_str(b.checked) << ','
          << bool_str(b.violated) << ',' << csv_escape(rep.alt_label) << ',';
      if (rep.alt_value) out << *rep.alt_value;
      out << ',' << csv_escape(rep.reason) << ",\n";
    }
  }
  return out.str();
}

std::string records_to_json_text(const std::vector<InstanceRecord>& records) {
  nlohmann::json j = nlohmann::json::array();
  for (const InstanceRecord& rec : records) j.push_back(rec.to_json());
  return j.dump(2) + "\n";
}

std::string records_to_markdown(const std::vector<InstanceRecord>& records) {
  std::ostringstream out;
  for (const InstanceRecord& rec : records) {
    out << "## " << rec.surface_id << " (q=" << rec.q << ", degree="
        << rec.degree << ", r=" << rec.r << ")\n\n";
    if (!rec.error.empty()) {
      out << rec.error << "\n\n";
      continue;
    }
    out << "n=" << rec.n << ", k=" << rec.k << ", dim_sections="
        << rec.dim_sections << ", injective=" << bool_str(rec.injective)
        << ", distance=" << rec.distance << " ("
        << (rec.distance_exact ? "exact" : "upper bound") << ", "
        << rec.distance_method << "), smoothness=" << rec.smoothness
        << ", rational_lines=" << rec.rational_lines << "\n\n";
    out << "| bound | applicable | value | branch | provenance | checked | "
           "violated |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const BoundOutcome& b : rec.bounds) {
      const BoundReport& rep = b.report;
      out << "| " << theorem_name(rep.theorem) << " | "
          << bool_str(rep.applicable) << " | ";
      if (rep.applicable)
        out << rep.value;
      else
        out << "-";
      out << " | " << (rep.branch.empty() ? "-" : rep.branch) << " | "
          << (b.provenance.empty() ? "-" : b.provenance) << " | "
          << bool_str(b.checked) << " | " << bool_str(b.violated) << " |\n";
    }
    out << "\n";
  }
  return out.str();
}

std::string emit_records(const std::vector<InstanceRecord>& records,
                         const std::string& format) {
  if (format == "csv") return records_to_csv(records);
  if (format == "json") return records_to_json_text(records);
  if (format == "md") return records_to_markdown(records);
  throw InvalidInputError("emit_records: format must be csv, json or md");
}

int soundness_exit_code(const std::vector<InstanceRecord>& records) {
  for (const InstanceRecord& rec : records)
    for (const BoundOutcome& b : rec.bounds)
      if (b.violated && b.provenance == "machine_verified") return 2;
  return 0;
}

}  // namespace surfcode
