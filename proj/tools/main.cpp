#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "report.hpp"
#include "verify.hpp"

using namespace crmostow;
using namespace crmostow::cli;

namespace {

struct Source {
  std::string input;
  std::string catalog;
  std::vector<std::string> params;
};

void add_source(CLI::App* app, Source& src) {
  app->add_option("input", src.input, "SubalgebraSpec JSON file");
  app->add_option("--catalog", src.catalog, "catalog entry name instead of an input file");
  app->add_option("--param", src.params, "catalog parameter key=value (repeatable)");
}

CatalogParams parse_params(const std::vector<std::string>& items) {
  CatalogParams out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "invalid parameters: expected key=value, got " + item);
    try {
      out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "invalid parameters: not an integer in " + item);
    }
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, "malformed JSON in " + path + ": " + e.what());
  }
}

/// The spec JSON (echoed in reports) and its parse.
std::pair<Json, ParsedSpec> load(const Source& src) {
  if (src.catalog.empty() == src.input.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of an input file or --catalog");
  }
  Json spec = src.catalog.empty() ? read_json(src.input) : export_subalgebra_spec(build(src.catalog, parse_params(src.params)));
  ParsedSpec parsed = parse_subalgebra_spec(spec);
  return {std::move(spec), std::move(parsed)};
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

struct Point {
  std::string zeta_path;
  bool random = false;
  std::uint64_t seed = 0;
  std::string fiber = "hnr";
};

void add_point(CLI::App* app, Point& pt) {
  app->add_option("--zeta", pt.zeta_path, "JSON file with {\"zeta\": matrix}; identity when omitted");
  app->add_flag("--random", pt.random, "use a seeded random zeta in K");
  app->add_option("--seed", pt.seed, "seed for --random and for restarts");
  app->add_option("--fiber", pt.fiber, "fiber data: hnr (default) or naive")->check(CLI::IsMember({"hnr", "naive"}));
}

MostowStructure structure_for(const ParsedSpec& parsed, const Point& pt) {
  return pt.fiber == "naive" ? naive_mostow_structure(parsed.v) : mostow_structure(parsed.v);
}

CMat zeta_for(const MostowStructure& s, const Point& pt) {
  if (pt.random && !pt.zeta_path.empty()) throw Error(ErrorCode::InvalidArgument, "--random and --zeta are exclusive");
  if (pt.random) {
    Rng rng(pt.seed);
    return random_group_element(s, rng);
  }
  if (!pt.zeta_path.empty()) {
    const Json j = read_json(pt.zeta_path);
    return numeric_matrix_from_json(j.is_object() ? j.at("zeta") : j);
  }
  return CMat::Identity(s.n, s.n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure theory and symmetric-space numerics of homogeneous CR manifolds"};
  app.require_subcommand(1);
  std::string out;

  Source analyze_src;
  AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "full structural report for a subalgebra");
  add_source(analyze, analyze_src);
  analyze->add_option("--hd", analyze_opts.hd, "homological dimension of the sheaf");
  analyze->add_option("--levi-grid", analyze_opts.sampling.grid_density, "number of Halton covectors");
  analyze->add_option("--seed", analyze_opts.sampling.seed, "Halton index offset");
  analyze->add_option("--out", out, "write the report here instead of stdout");

  Source dec_src;
  Point dec_pt;
  MostowOptions dec_opts;
  bool allow_nonunique = false;
  auto* decompose = app.add_subcommand("decompose", "Mostow decomposition zeta = u exp(X) exp(Z) v");
  add_source(decompose, dec_src);
  add_point(decompose, dec_pt);
  decompose->add_option("--tol", dec_opts.tol, "accepted log-defect per restart");
  decompose->add_option("--restarts", dec_opts.max_restarts, "number of restarts");
  decompose->add_flag("--allow-nonunique", allow_nonunique, "exit 0 even when restarts disagree");
  decompose->add_option("--out", out, "write the result here instead of stdout");

  Source ex_src;
  Point ex_pt;
  bool cross_check = false;
  auto* exhaust = app.add_subcommand("exhaust", "exhaustion function phi at zeta");
  add_source(exhaust, ex_src);
  add_point(exhaust, ex_pt);
  exhaust->add_flag("--cross-check", cross_check, "compare with |X|^2 from the Mostow decomposition");
  exhaust->add_option("--out", out, "write the result here instead of stdout");

  std::string suite = "all";
  std::uint64_t verify_seed = 1;
  std::string expected_path;
  auto* verify = app.add_subcommand("verify", "run the verification suites (TAP-like output)");
  verify->add_option("--suite", suite, "structural, numeric or all")
      ->check(CLI::IsMember({"structural", "numeric", "all"}));
  verify->add_option("--seed", verify_seed, "seed for the numeric suite");
  verify->add_option("--expected", expected_path, "JSON overrides of catalog expectations");

  auto* catalog = app.add_subcommand("catalog", "list or export catalog entries");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "entry names");
  std::string export_name;
  std::vector<std::string> export_params;
  auto* exp = catalog->add_subcommand("export", "SubalgebraSpec of an entry");
  exp->add_option("name", export_name, "entry name")->required();
  exp->add_option("--param", export_params, "parameter key=value (repeatable)");
  exp->add_option("--out", out, "write the spec here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto [spec, parsed] = load(analyze_src);
      emit(analyze_report(spec, parsed, analyze_opts), out);
      return kOk;
    }
    if (decompose->parsed()) {
      const auto [spec, parsed] = load(dec_src);
      const MostowStructure s = structure_for(parsed, dec_pt);
      dec_opts.seed = dec_pt.seed;
      const MostowDecomposition d = mostow_decompose(zeta_for(s, dec_pt), s, dec_opts);
      emit(decomposition_json(d, s), out);
      if (!d.restarts_agree && !allow_nonunique) {
        std::cerr << "error: restart disagreement (pass --allow-nonunique to accept)\n";
        return kNonUnique;
      }
      return kOk;
    }
    if (exhaust->parsed()) {
      const auto [spec, parsed] = load(ex_src);
      const MostowStructure s = structure_for(parsed, ex_pt);
      PhiOptions opts;
      opts.cross_check = cross_check;
      const PhiResult r = exhaustion_phi_detail(zeta_for(s, ex_pt), s, opts);
      Json j;
      j["schema"] = kSchema;
      j["fiber"] = s.fiber;
      j["phi"] = r.value;
      j["v_params"] = std::vector<double>(r.v_params.data(), r.v_params.data() + r.v_params.size());
      if (r.mostow_x_norm_sq) j["mostow_x_norm_sq"] = *r.mostow_x_norm_sq;
      emit(j, out);
      return kOk;
    }
    if (verify->parsed()) {
      std::vector<Check> checks;
      const Json overrides = expected_path.empty() ? Json::object() : read_json(expected_path);
      if (suite != "numeric") checks = structural_suite(overrides);
      if (suite != "structural") {
        auto more = numeric_suite(verify_seed);
        checks.insert(checks.end(), more.begin(), more.end());
      }
      return print_tap(std::cout, checks) == 0 ? kOk : kFailure;
    }
    if (catalog->parsed()) {
      if (exp->parsed()) {
        emit(export_subalgebra_spec(build(export_name, parse_params(export_params))), out);
      } else {
        for (const auto& name : list()) std::cout << name << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
