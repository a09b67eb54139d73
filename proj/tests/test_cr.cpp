#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("CR type") {
  const CRType f12 = cr_type(build("su23_f12").v);
  CHECK(f12.cr_dim == 3);
  CHECK(f12.cr_codim == 4);
  CHECK(cr_type(build("su22_f12").v).cr_dim == 1);
  const CRType g = cr_type(build("grassmann_pair", {{"p", 1}, {"q", 2}, {"n", 3}, {"k", 1}}).v);
  CHECK(g.cr_dim == 3);
  CHECK(g.cr_codim == 4);
  CHECK(g.dim_M_minus == 7);
}

TEST_CASE("fiber data") {
  const FiberData b = fiber_data(borel(3));
  CHECK(b.f0.dim() == 0);
  CHECK(b.l.dim() == 0);
  const FiberData g = fiber_data(build("grassmann_pair").v);
  CHECK(g.f0.dim() == 4);
  CHECK(g.l.dim() == 0);
  const FiberData f12 = fiber_data(build("su23_f12").v);
  CHECK(f12.f0.dim() == 4);
  // f0 = {diag(X, -X, 0)} for Hermitian 2x2 X.
  const ExactMatrix x = diag({1, 0, -1, 0, 0}) + unit(5, 1, 2) + unit(5, 2, 1) - unit(5, 3, 4) - unit(5, 4, 3);
  CHECK(f12.f0.contains(x));
}

TEST_CASE("Levi report") {
  const LeviReport su22 = levi_report(build("su22_f12").v);
  CHECK(su22.witt_lower_bound == 0);
  for (const auto& s : su22.sampled_signatures) {
    CHECK(s.positives == 0);
    CHECK(s.negatives == 0);
  }
  const LeviReport g = levi_report(build("grassmann_pair").v);
  CHECK(g.witt_lower_bound == 1);
  try {
    levi_report(build("grassmann_pair", {{"p", 1}, {"q", 2}, {"n", 2}, {"k", 0}}).v);
    FAIL("expected an empty characteristic space");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCharacteristicSpace);
  }
}

TEST_CASE("orbit data") {
  const Subalgebra v = build("su22_f12").v;
  const FiberData f = fiber_data(v);
  const CRType t = cr_type(v);
  const OrbitData zero = orbit_data(v, f, ExactMatrix(4, 4));
  CHECK(zero.dim_M_X == t.dim_M0);
  CHECK(zero.exact);
  if (f.f0.dim() > 0) {
    const ExactMatrix x = f.f0.element(0);
    CHECK(orbit_data(v, f, x).dim_M_X >= t.dim_M0);
    CHECK(orbit_data(v, f, x).dim_M_X == orbit_data(v, f, x * ExactScalar(2)).dim_M_X);
  }
  CHECK_THROWS_AS(orbit_data(v, f, unit(4, 1, 2)), Error);
}

TEST_CASE("cohomology ranges") {
  const CohomologyRanges a = cohomology_ranges(1, 3, 0);
  CHECK(a.finite_iso_low == std::vector<std::size_t>{0});
  CHECK(a.finite_iso_high == std::vector<std::size_t>{3});
  const CohomologyRanges b = cohomology_ranges(0, 1, 0);
  CHECK(b.finite_iso_low.empty());
  CHECK(b.finite_iso_high.empty());
  const CohomologyRanges c = cohomology_ranges(2, 5, 1);
  CHECK(c.finite_iso_low == std::vector<std::size_t>{0});
  CHECK(c.finite_iso_high == std::vector<std::size_t>{4, 5});
}

TEST_CASE("property: genericity on n-reductive catalog entries") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    const CRType t = cr_type(v);
    CHECK(t.cr_dim + t.cr_codim == t.dim_M_minus);
  }
}

TEST_CASE("property: f0 is Hermitian and orthogonal to v + sigma v; l is stable under the compact Levi part") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    const FiberData f = fiber_data(v);
    const Subspace vv = subspace_sum(v.space(), sigma_space(v.space()));
    for (const auto& x : f.f0.basis()) {
      CHECK(x.is_hermitian());
      for (const auto& y : vv.basis()) CHECK(hermitian_product(x, y).re() == 0);
    }
    for (const auto& a : antihermitian_part(v.levi()).basis())
      for (const auto& z : f.l.basis()) CHECK(contains(f.l, bracket(a, z)));
  }
}

TEST_CASE("property: scalar Levi forms are Hermitian and scale correctly") {
  const LeviReport r = levi_report(build("grassmann_pair").v);
  Rng rng(41);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    RationalVec xi;
    for (std::size_t j = 0; j < r.characteristic_basis.size(); ++j) xi.emplace_back(d(rng));
    CHECK(scalar_levi_form(r, xi).is_hermitian());
    const LeviSignature s = levi_signature(r, xi);
    RationalVec scaled = xi, negated = xi;
    for (auto& c : scaled) c *= Rational(5, 2);
    for (auto& c : negated) c = -c;
    const LeviSignature s2 = levi_signature(r, scaled), s3 = levi_signature(r, negated);
    CHECK(s2.positives == s.positives);
    CHECK(s2.negatives == s.negatives);
    CHECK(s3.positives == s.negatives);
    CHECK(s3.negatives == s.positives);
  }
}
