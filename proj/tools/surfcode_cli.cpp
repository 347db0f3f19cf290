#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "surfcode/errors.hpp"
#include "surfcode/experiment.hpp"
#include "surfcode/field.hpp"
#include "surfcode/mindist.hpp"
#include "surfcode/text_io.hpp"
#include "surfcode/version.hpp"

namespace {

using namespace surfcode;

std::string field_header_arg(long long q, const std::string& modulus) {
  if (modulus.empty()) return "GF(" + std::to_string(q) + ")";
  return "GF(" + std::to_string(q) + ";" + modulus + ")";
}

int cmd_field(long long q, const std::string& modulus, bool tables) {
  FieldPtr F = Field::parse_header(field_header_arg(q, modulus));
  std::cout << "field: " << F->header() << "\n";
  std::cout << "p: " << F->p() << "\n";
  std::cout << "e: " << F->ext_degree() << "\n";
  std::cout << "q: " << F->q() << "\n";
  if (F->q() <= 64) {
    std::cout << "elements:";
    for (gfe a = 0; (long long)a < F->q(); ++a)
      std::cout << ' ' << F->elem_str(a);
    std::cout << "\n";
  }
  if (tables) {
    if (F->q() > 32)
      throw InvalidInputError("--tables supports orders up to 32");
    for (const char* name : {"add", "mul"}) {
      std::cout << name << ":\n";
      const bool is_add = std::string(name) == "add";
      for (gfe a = 0; (long long)a < F->q(); ++a) {
        for (gfe b = 0; (long long)b < F->q(); ++b) {
          if (b) std::cout << ' ';
          std::cout << F->elem_str(is_add ? F->add(a, b) : F->mul(a, b));
        }
        std::cout << "\n";
      }
    }
  }
  return 0;
}

SurfaceP3 load_surface(const std::string& path) {
  HomogPoly f = poly_from_file(path);
  if (f.nvars() != 4)
    throw InvalidInputError("surface file must use 4 variables: " + path);
  const std::string id = std::filesystem::path(path).stem().string();
  FieldPtr field = f.field();
  return make_surface(id, field, std::move(f));
}

int cmd_points(const std::string& surface_path, const std::string& out_path) {
  const SurfaceP3 X = load_surface(surface_path);
  const std::vector<Point> pts = rational_points(X);
  const std::string text = points_to_text(*X.field, pts);
  std::cout << "surface: " << X.id << "\n";
  std::cout << "n_points: " << pts.size() << "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int cmd_smooth_check(const std::string& surface_path, int max_ext) {
  const SurfaceP3 X = load_surface(surface_path);
  const SmoothnessStatus status = check_smoothness(X, max_ext);
  std::cout << "surface: " << X.id << "\n";
  std::cout << "smoothness: " << status.str() << "\n";
  return 0;
}

std::array<gfe, 4> parse_chart(const Field& F, const std::string& text) {
  std::array<gfe, 4> chart{};
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw InvalidInputError("chart must have 4 colon-separated coefficients");
  for (int i = 0; i < 4; ++i) chart[i] = F.parse_elem(parts[i]);
  return chart;
}

int cmd_build_code(const std::string& surface_path, long long r,
                   const std::string& chart_text, const std::string& out_path) {
  const SurfaceP3 X = load_surface(surface_path);
  std::array<gfe, 4> chart{1, 0, 0, 0};
  if (!chart_text.empty()) chart = parse_chart(*X.field, chart_text);
  const LinearCode C = build_code(X, r, chart);
  std::cerr << "surface=" << X.id << " r=" << r << " n=" << C.n()
            << " k=" << C.k();
  if (C.provenance)
    std::cerr << " dim_sections=" << C.provenance->dim_sections
              << " injective=" << (C.provenance->injective ? "true" : "false");
  std::cerr << "\n";
  const std::string text = matrix_to_text(C);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int cmd_mindist(const std::string& matrix_path, long long budget,
                const std::string& method) {
  const LinearCode C = matrix_from_file(matrix_path);
  DistanceComputation result;
  if (method == "exhaustive") {
    result.distance = min_distance_exhaustive(C, budget);
    result.exact = true;
    result.method = "exhaustive";
    result.candidates = 0;
  } else if (method == "bz") {
    result = min_distance_budgeted(C, budget, /*force_information_sets=*/true);
  } else if (method == "auto") {
    result = min_distance_budgeted(C, budget);
  } else {
    throw InvalidInputError("--method must be auto, exhaustive or bz");
  }
  std::cout << "n: " << C.n() << "\n";
  std::cout << "k: " << C.k() << "\n";
  std::cout << "distance: " << result.distance << "\n";
  std::cout << "exact: " << (result.exact ? "true" : "false") << "\n";
  std::cout << "method: " << result.method << "\n";
  std::cout << "candidates: " << result.candidates << "\n";
  return 0;
}

int cmd_bounds(const std::string& invariants_path, long long r) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(invariants_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invariants file: ") + e.what());
  }
  const SurfaceInvariants inv = invariants_from_json(j);
  nlohmann::json out = nlohmann::json::array();
  for (const BoundReport& rep : all_bounds(inv, r)) out.push_back(rep.to_json());
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Evaluation codes on surfaces in P^3 over small finite fields: "
      "exact parameters and provable distance floors"};
  app.set_version_flag("--version", surfcode::kToolVersion);
  app.require_subcommand(1);

  auto* sub_field = app.add_subcommand("field", "Inspect a finite field");
  long long field_q = 0;
  std::string field_modulus;
  bool field_tables = false;
  sub_field->add_option("--q", field_q, "field order (prime power <= 65536)")
      ->required();
  sub_field->add_option("--modulus", field_modulus,
                        "modulus polynomial in t, e.g. t^2+t+1");
  sub_field->add_flag("--tables", field_tables,
                      "print addition and multiplication tables (order <= 32)");

  auto* sub_points =
      app.add_subcommand("points", "List the rational points of a surface");
  std::string points_surface, points_out;
  sub_points->add_option("--surface", points_surface, "polynomial file")
      ->required();
  sub_points->add_option("--out", points_out, "write the point list here");

  auto* sub_smooth = app.add_subcommand(
      "smooth-check", "Search small-degree extensions for singular points");
  std::string smooth_surface;
  int smooth_max_ext = 2;
  sub_smooth->add_option("--surface", smooth_surface, "polynomial file")
      ->required();
  sub_smooth->add_option("--max-ext", smooth_max_ext,
                         "largest extension degree searched (1..4)");

  auto* sub_build =
      app.add_subcommand("build-code", "Build an evaluation code generator matrix");
  std::string build_surface, build_chart, build_out;
  long long build_r = 1;
  sub_build->add_option("--surface", build_surface, "polynomial file")
      ->required();
  sub_build->add_option("--r", build_r, "twist: sections of O(r)")->required();
  sub_build->add_option("--chart", build_chart,
                        "affine chart linear form, e.g. 1:0:0:0");
  sub_build->add_option("--out", build_out, "write the generator matrix here");

  auto* sub_mindist =
      app.add_subcommand("mindist", "Minimum distance of a generator matrix");
  std::string mindist_matrix, mindist_method = "auto";
  long long mindist_budget = surfcode::kDefaultDistanceBudget;
  sub_mindist->add_option("--matrix", mindist_matrix, "generator matrix file")
      ->required();
  sub_mindist->add_option("--budget", mindist_budget,
                          "codeword enumeration cap");
  sub_mindist->add_option("--method", mindist_method,
                          "auto, exhaustive or bz");

  auto* sub_bounds = app.add_subcommand(
      "bounds", "Evaluate every distance floor for an invariants file");
  std::string bounds_invariants;
  long long bounds_r = 1;
  sub_bounds
      ->add_option("--invariants", bounds_invariants,
                   "surface invariants JSON file")
      ->required();
  sub_bounds->add_option("--r", bounds_r, "twist: sections of O(r)")
      ->required();

  auto* sub_exp = app.add_subcommand(
      "experiment", "Run surfaces end to end and check every bound");
  std::string exp_config, exp_format, exp_out;
  unsigned long long exp_seed = 0;
  long long exp_budget = 0;
  int exp_max_ext = 0;
  bool exp_corpus = false;
  std::vector<std::string> exp_surfaces;
  std::vector<long long> exp_r;
  sub_exp->add_option("--config", exp_config, "experiment config JSON file");
  sub_exp->add_flag("--corpus", exp_corpus, "include the built-in corpus");
  sub_exp->add_option("--seed", exp_seed, "experiment seed");
  sub_exp->add_option("--budget", exp_budget, "codeword cap per distance");
  sub_exp->add_option("--max-ext", exp_max_ext,
                      "largest extension degree searched for singularities");
  sub_exp->add_option("--format", exp_format, "csv, json or md");
  sub_exp->add_option("--out", exp_out, "write records here instead of stdout");
  sub_exp->add_option("--surface", exp_surfaces,
                      "polynomial file (repeatable)");
  sub_exp->add_option("--r", exp_r,
                      "twist values for --surface files (repeatable)");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(sub_field))
      return cmd_field(field_q, field_modulus, field_tables);
    if (app.got_subcommand(sub_points))
      return cmd_points(points_surface, points_out);
    if (app.got_subcommand(sub_smooth))
      return cmd_smooth_check(smooth_surface, smooth_max_ext);
    if (app.got_subcommand(sub_build))
      return cmd_build_code(build_surface, build_r, build_chart, build_out);
    if (app.got_subcommand(sub_mindist))
      return cmd_mindist(mindist_matrix, mindist_budget, mindist_method);
    if (app.got_subcommand(sub_bounds))
      return cmd_bounds(bounds_invariants, bounds_r);
    if (app.got_subcommand(sub_exp)) {
      surfcode::ExperimentConfig config;
      if (!exp_config.empty()) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(surfcode::read_text_file(exp_config));
        } catch (const nlohmann::json::exception& e) {
          throw surfcode::ParseError(std::string("config file: ") + e.what());
        }
        config = surfcode::ExperimentConfig::from_json(j);
      }
      if (exp_corpus) config.corpus = true;
      if (sub_exp->count("--seed")) config.seed = exp_seed;
      if (sub_exp->count("--budget")) config.budget = exp_budget;
      if (sub_exp->count("--max-ext")) config.max_ext = exp_max_ext;
      if (sub_exp->count("--format")) config.format = exp_format;
      for (const std::string& path : exp_surfaces)
        config.surface_files.push_back({path, exp_r});
      const auto records = surfcode::run_experiment(config);
      const std::string text = surfcode::emit_records(records, config.format);
      if (exp_out.empty())
        std::cout << text;
      else
        surfcode::write_text_file(exp_out, text);
      return surfcode::soundness_exit_code(records);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const surfcode::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
