#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("catalog listing is stable") {
  const std::vector<std::string> expected{"su22_f12",      "su23_f13",       "su23_f12",
                                          "grassmann_pair", "so_n_symmetric", "upper_triangular_horocycle"};
  CHECK(list() == expected);
  CHECK(list() == list());
}

TEST_CASE("catalog dimensions") {
  CHECK(build("su23_f12").v.dim() == 5);
  CHECK(build("su23_f13").v.dim() == 4);
  CHECK(build("su22_f12").v.dim() == 2);
  CHECK(build("grassmann_pair").v.dim() == 8);
  CHECK(build("upper_triangular_horocycle", {{"n", 4}}).v.dim() == 6);
}

TEST_CASE("catalog parameter validation") {
  auto code = [](const std::string& name, const CatalogParams& params) {
    try {
      build(name, params);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoRootFound;  // sentinel: no error
  };
  CHECK(code("nope", {}) == ErrorCode::UnknownEntry);
  CHECK(code("grassmann_pair", {{"p", 2}, {"q", 2}, {"n", 3}, {"k", 2}}) == ErrorCode::InvalidArgument);
  CHECK(code("grassmann_pair", {{"p", 1}, {"q", 2}, {"n", 3}, {"k", 2}}) == ErrorCode::InvalidArgument);
  CHECK(code("su22_f12", {{"x", 1}}) == ErrorCode::InvalidArgument);
  CHECK(code("so_n_symmetric", {{"n", 2}}) == ErrorCode::InvalidArgument);
}

TEST_CASE("grassmann blocks and parameter sweep") {
  const GrassmannBlocks b = grassmann_blocks({{"p", 1}, {"q", 2}, {"n", 3}, {"k", 1}});
  CHECK(b.n1 + b.n2 + b.n3 + b.n4 == 4);
  CHECK(2 * b.n2 * b.n3 == 4);
  CHECK(b.n1 + b.n4 == 1);
  const auto params = grassmann_parameters(6);
  CHECK(params.size() == 44);
  for (const auto& p : params) {
    const long pp = p.at("p"), q = p.at("q"), n = p.at("n"), k = p.at("k");
    CHECK(n + 1 <= 6);
    CHECK(pp < q);
    CHECK(q <= n);
    CHECK(k <= pp);
    CHECK(k >= std::max(0L, pp + q - n - 1));
  }
}

TEST_CASE("grassmann expectations match brute-force counts") {
  for (const auto& p : grassmann_parameters(6)) {
    const CatalogEntry e = build("grassmann_pair", p);
    const GrassmannBlocks b = grassmann_blocks(p);
    CHECK(*e.expected.dim_M_minus == e.v.ambient().dim() - e.v.dim());
    CHECK(e.expected.cr_type->second == 2 * b.n2 * b.n3);
    CHECK(*e.expected.witt == static_cast<std::size_t>(p.at("p") + p.at("q") - 2 * p.at("k")));
  }
}

TEST_CASE("expected report is attached to each entry") {
  for (const auto& name : list()) {
    const CatalogEntry e = build(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.expected.notes.empty());
    CHECK(expected_report(e).n_reductive == e.expected.n_reductive);
  }
}
