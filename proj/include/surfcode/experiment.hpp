#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcode/bounds.hpp"
#include "surfcode/linear_code.hpp"
#include "surfcode/surface.hpp"

namespace surfcode {

struct RandomSurfaceSpec {
  long long p = 2;
  int e = 1;
  long long degree = 3;
  unsigned long long seed = 0;        // 0: derived from the experiment seed
  std::vector<long long> r_values;    // empty: {1}
};

struct FileSurfaceSpec {
  std::string path;                   // polynomial file
  std::vector<long long> r_values;    // empty: {1}
};

struct ExperimentConfig {
  unsigned long long seed = 1;
  long long budget = 200'000'000;     // codeword cap per distance computation
  int max_ext = 2;                    // extensions searched for singular points
  std::string format = "csv";         // csv | json | md
  bool corpus = false;                // include the named corpus
  std::vector<RandomSurfaceSpec> random_surfaces;
  std::vector<FileSurfaceSpec> surface_files;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

// One evaluated bound, with its soundness-check outcome.  `provenance` is
// "machine_verified" when every assumption behind the bound was checked by
// this tool, "literature_asserted" when at least one was taken on trust, and
// empty for inapplicable bounds.
struct BoundOutcome {
  BoundReport report;
  std::string provenance;
  bool checked = false;   // compared against an exact reference value
  bool violated = false;

  nlohmann::json to_json() const;
  static BoundOutcome from_json(const nlohmann::json& j);
};

struct InstanceRecord {
  std::string tool_version;
  std::string surface_id;
  unsigned long long seed = 0;
  long long q = 0;
  long long degree = 0;
  long long r = 0;
  std::string smoothness;
  long long rational_lines = -1;     // -1: not computed
  long long n = 0;                   // code length
  long long k = 0;                   // code dimension (rank)
  long long dim_sections = 0;        // dimension of the evaluated section space
  bool injective = false;
  long long distance = 0;
  bool distance_exact = false;
  long long candidates = 0;
  std::string distance_method;
  bool genus_floor_asserted = false;
  bool picard_asserted = false;
  std::vector<BoundOutcome> bounds;
  std::string error;                 // nonempty: instance skipped

  nlohmann::json to_json() const;
  static InstanceRecord from_json(const nlohmann::json& j);
};

// Built-in study set: Fermat and seeded sparse random surfaces of degrees
// 3..5 over GF(2)..GF(7), sized so exact distances are reachable.
struct CorpusEntry {
  std::string id;
  long long p = 2;
  int e = 1;
  long long degree = 3;
  std::vector<long long> diagonal;    // diagonal coefficients; empty: random
  unsigned long long seed = 0;        // construction seed of random entries
  std::vector<long long> r_values;
  bool assert_genus_floor = false;    // enable cyclic-class-group bounds
  bool assert_picard = false;
};

const std::vector<CorpusEntry>& named_corpus();

// sum_i c_i x_i^degree with every c_i nonzero.
SurfaceP3 diagonal_surface(const FieldPtr& field, long long degree,
                           const std::array<long long, 4>& coeffs,
                           std::string id);
SurfaceP3 fermat_surface(const FieldPtr& field, long long degree,
                         std::string id);
// Diagonal part with nonzero coefficients plus a few seeded monomials.
SurfaceP3 random_sparse_surface(const FieldPtr& field, long long degree,
                                unsigned long long seed, std::string id);
SurfaceP3 corpus_surface(const CorpusEntry& entry);

// Full pipeline for one surface and one r: smoothness gate, code build,
// exact-as-possible distance, every bound, soundness checks.
InstanceRecord run_instance(const SurfaceP3& X, const SmoothnessStatus& status,
                            long long rational_lines, long long r,
                            const ExperimentConfig& config,
                            bool assert_genus_floor, bool assert_picard);

std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config);

// Deterministic serializations (no timestamps, no floating point).
std::string records_to_csv(const std::vector<InstanceRecord>& records);
std::string records_to_json_text(const std::vector<InstanceRecord>& records);
std::string records_to_markdown(const std::vector<InstanceRecord>& records);
std::string emit_records(const std::vector<InstanceRecord>& records,
                         const std::string& format);

// 2 when any machine-verified bound is violated, otherwise 0.
int soundness_exit_code(const std::vector<InstanceRecord>& records);

}  // namespace surfcode
