#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "report.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace crmostow;
using crmostow::cli::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with stderr discarded; stdout is captured.
Run run(const std::string& args) {
  const std::string cmd = std::string(CRMOSTOW_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("crmostow_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& path, const Json& j) {
  std::ofstream(path) << j.dump(2);
  return path.string();
}

}  // namespace

TEST_CASE("catalog list and export") {
  const Run r = run("catalog list");
  CHECK(r.code == 0);
  CHECK(r.out == "su22_f12\nsu23_f13\nsu23_f12\ngrassmann_pair\nso_n_symmetric\nupper_triangular_horocycle\n");
  const Run e = run("catalog export grassmann_pair --param p=1 --param q=2 --param n=3 --param k=1");
  CHECK(e.code == 0);
  const Json spec = Json::parse(e.out);
  CHECK(spec["schema"] == "crmostow/1");
  CHECK(spec["n"] == 4);
  CHECK(spec["basis"].size() == 8);
  CHECK(run("catalog export nope").code == 1);
  CHECK(run("catalog export grassmann_pair --param p=2 --param q=2").code == 1);
}

TEST_CASE("analyze the exported grassmann entry") {
  const fs::path dir = scratch_dir();
  const std::string spec = (dir / "grassmann.json").string();
  REQUIRE(run("catalog export grassmann_pair --out " + spec).code == 0);
  const Run r = run("analyze " + spec);
  REQUIRE(r.code == 0);
  const Json rep = Json::parse(r.out);
  CHECK(rep["n_reductive"]["value"] == true);
  CHECK(rep["n_reductive"]["source"] == "computed");
  CHECK(rep["hnr"]["value"] == true);
  CHECK(rep["witt_lower_bound"]["value"] == 1);
  CHECK(rep["cohomology_ranges"]["finite_iso_low"] == Json::array({0}));
  CHECK(rep["cohomology_ranges"]["finite_iso_high"] == Json::array({3}));
  CHECK(rep["expected"]["witt"]["source"] == "paper-expected");
  CHECK(rep["expected"]["dim_M_minus"]["value"] == 7);
  CHECK(rep["expected"]["dim_M_minus_quoted"]["value"] == 5);
}

TEST_CASE("analyze su22_f12") {
  const Run r = run("analyze --catalog su22_f12");
  REQUIRE(r.code == 0);
  const Json rep = Json::parse(r.out);
  CHECK(rep["strict_hnr"]["value"] == false);
  CHECK(rep["hnr"]["value"] == true);
  CHECK(rep["witt_lower_bound"]["value"] == 0);
}

TEST_CASE("analyze rejects bad input with the documented exit codes") {
  const fs::path dir = scratch_dir();
  // E12 and E21 in sl2: their bracket leaves the span.
  const ExactMatrix e12 = testing::unit(2, 1, 2), e21 = testing::unit(2, 2, 1);
  const Json open_basis = {{"n", 2},
                           {"ambient", "sl"},
                           {"basis", Json::array({crmostow::cli::exact_matrix_json(e12),
                                                  crmostow::cli::exact_matrix_json(e21)})}};
  CHECK(run("analyze " + write(dir / "open.json", open_basis)).code == 2);
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(run("analyze " + (dir / "broken.json").string()).code == 1);
  CHECK(run("analyze " + write(dir / "shape.json", Json{{"n", 3}, {"basis", open_basis["basis"]}})).code == 1);
  CHECK(run("analyze").code == 1);
}

TEST_CASE("decompose") {
  const Run r = run("decompose --catalog grassmann_pair --random --seed 7");
  REQUIRE(r.code == 0);
  const Json d = Json::parse(r.out);
  CHECK(d["residual"].get<double>() < 1e-8);
  CHECK(d["restarts_agree"] == true);
  const Run id = run("decompose --catalog grassmann_pair");
  REQUIRE(id.code == 0);
  const CMat x = crmostow::cli::numeric_matrix_from_json(Json::parse(id.out)["X"]);
  CHECK(x.norm() < 1e-10);
  CHECK(run("decompose --catalog so_n_symmetric").code == 1);
  CHECK(run("decompose --catalog grassmann_pair --random --seed 7 --tol 1e-40 --restarts 2").code == 4);
}

TEST_CASE("decompose exits 5 on disagreeing restarts unless allowed") {
  const testing::NonUniqueCase c = testing::non_unique_case();
  const fs::path dir = scratch_dir();
  const std::string spec = write(dir / "nonunique.json", crmostow::cli::export_subalgebra_spec(c.v, "nonunique"));
  const std::string zeta = write(dir / "zeta.json", Json{{"zeta", crmostow::cli::numeric_matrix_json(c.zeta)}});
  const std::string args = "decompose " + spec + " --fiber naive --zeta " + zeta + " --seed " + std::to_string(c.seed);
  const Run strict = run(args);
  CHECK(strict.code == 5);
  const Run allowed = run(args + " --allow-nonunique");
  CHECK(allowed.code == 0);
  CHECK(Json::parse(allowed.out)["restarts_agree"] == false);
}

TEST_CASE("exhaust") {
  const Run r = run("exhaust --catalog su23_f12 --random --seed 3 --cross-check");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["phi"].get<double>() >= 0);
  CHECK(testing::rel_err(j["phi"].get<double>(), j["mostow_x_norm_sq"].get<double>()) < 1e-6);
  const Run zero = run("exhaust --catalog su23_f12");
  CHECK(Json::parse(zero.out)["phi"].get<double>() < 1e-16);
}

TEST_CASE("verify numeric suite passes") {
  const Run r = run("verify --suite numeric --seed 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("not ok") == std::string::npos);
  CHECK(r.out.find("jacobi.orthogonality") != std::string::npos);
}

TEST_CASE("verify structural suite") {
  const Run r = run("verify --suite structural");
  // The only red check is the recorded su23_f13 conflict: the exact normalizer of nr(v) is not parabolic.
  CHECK(r.code == 1);
  CHECK(r.out.find("# failed: su23_f13.normalizer_is_q_max\n") != std::string::npos);
  std::istringstream lines(r.out);
  std::size_t failed = 0;
  for (std::string line; std::getline(lines, line);) failed += line.rfind("not ok", 0) == 0;
  CHECK(failed == 1);
}

TEST_CASE("verify names a corrupted expectation") {
  const fs::path dir = scratch_dir();
  const std::string path = write(dir / "corrupt.json", Json{{"su23_f12", {{"cr_dim", 4}}}});
  const Run r = run("verify --suite structural --expected " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("not ok") != std::string::npos);
  CHECK(r.out.find("su23_f12.cr_dim # computed 3, expected 4") != std::string::npos);
  const std::string bad = write(dir / "unknown.json", Json{{"su23_f12", {{"colour", 1}}}});
  CHECK(run("verify --suite structural --expected " + bad).code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(run("analyze --catalog su23_f12 --seed 4").out == run("analyze --catalog su23_f12 --seed 4").out);
  CHECK(run("decompose --catalog su22_f12 --random --seed 9").out ==
        run("decompose --catalog su22_f12 --random --seed 9").out);
}
