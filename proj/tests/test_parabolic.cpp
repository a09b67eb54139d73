#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

Subspace column_span(std::size_t n, std::initializer_list<std::size_t> coords) {
  std::vector<ExactMatrix> cols;
  for (std::size_t c : coords) {
    ExactVec e(n);
    e[c - 1] = ExactScalar(1);
    cols.emplace_back(n, 1, e);
  }
  return echelonize(n, 1, cols);
}

Subalgebra line_stabilizer(std::size_t n, std::size_t coord) {
  const AmbientAlgebra k = AmbientAlgebra::sl(n);
  return Subalgebra(k, flag_stabilizer(k, {column_span(n, {coord}), Subspace::full(n, 1)}));
}

Subalgebra lower_borel(std::size_t n) {
  std::vector<ExactMatrix> g;
  for (const auto& x : borel(n).basis()) g.push_back(x.transpose());
  return sub(n, g);
}

}  // namespace

TEST_CASE("parabolic test with flag witness") {
  const ParabolicTest b = is_parabolic(borel(2));
  CHECK(b.parabolic);
  REQUIRE(b.flag.size() >= 1);
  CHECK(b.flag.front() == column_span(2, {1}));
  CHECK_FALSE(is_parabolic(cartan(2)).parabolic);
  const Subalgebra v = build("su23_f13").v;
  CHECK(is_parabolic(q_max(v, q_min(v)).q()).parabolic);
  CHECK_THROWS_AS(ParabolicSubalgebra(cartan(3)), Error);
}

TEST_CASE("parabolic subalgebra pieces") {
  const ParabolicSubalgebra q(borel(3));
  CHECK(q.levi() == cartan(3).space());
  CHECK(q.nilradical() == strictly_upper(3).space());
  CHECK(q.sigma_split());
  CHECK(subspace_sum(q.levi(), q.nilradical()) == q.q().space());
}

TEST_CASE("parabolic regularization") {
  const RegularizationTrace p = parabolic_regularization(borel(3));
  CHECK(p.steps == 0);
  CHECK(p.fixed_point == borel(3));
  const RegularizationTrace u = parabolic_regularization(strictly_upper(3));
  CHECK(u.fixed_point == borel(3));
  const Subalgebra g = build("grassmann_pair").v;
  const RegularizationTrace gr = parabolic_regularization(g);
  CHECK(is_parabolic(gr.fixed_point).parabolic);
  CHECK(gr.fixed_point.nr() == g.nr());
}

TEST_CASE("minimal and maximal parabolics") {
  CHECK(q_min(borel(3)).q() == borel(3));
  CHECK(q_max(borel(3), ParabolicSubalgebra(borel(3))).q() == borel(3));
  const Subalgebra su22 = build("su22_f12").v;
  const ParabolicSubalgebra qmin = q_min(su22);
  CHECK(p0_membership(su22, qmin).member);
  CHECK(contains(qmin.nilradical(), su22.nr()));
  const Subalgebra f13 = build("su23_f13").v;
  CHECK(q_max(f13, q_min(f13)).dim() == 9);
}

TEST_CASE("combining parabolics") {
  const ParabolicSubalgebra b(borel(3));
  CHECK(combine_parabolics(b, b).q() == borel(3));
  CHECK(combine_parabolics(ParabolicSubalgebra(borel(2)), ParabolicSubalgebra(lower_borel(2))).q() == borel(2));
  const ParabolicSubalgebra c =
      combine_parabolics(ParabolicSubalgebra(line_stabilizer(3, 1)), ParabolicSubalgebra(line_stabilizer(3, 2)));
  CHECK(is_parabolic(c.q()).parabolic);
}

TEST_CASE("horocyclic subspaces") {
  const AmbientAlgebra sl3 = AmbientAlgebra::sl(3);
  CHECK(is_horocyclic(sl3, Subspace::zero(3, 3)).value);
  CHECK(is_horocyclic(sl3, strictly_upper(3).space()).value);
  CHECK_FALSE(is_horocyclic(sl3, span({unit(3, 1, 3)})).value);
  const Subalgebra su22 = build("su22_f12").v;
  CHECK_FALSE(is_horocyclic(su22.ambient(), su22.nr()).value);
  const Subalgebra g = build("grassmann_pair").v;
  CHECK(is_horocyclic(g.ambient(), g.nr()).value);
}

TEST_CASE("largest subalgebra w between v and v + sigma v") {
  const Subalgebra g = build("grassmann_pair", {{"p", 1}, {"q", 2}, {"n", 3}, {"k", 1}}).v;
  CHECK(compute_w(g) == g);
  const CatalogEntry su22 = build("su22_f12");
  CHECK(compute_w(su22.v).space() == *su22.expected.w);
  CHECK(compute_w(su22.v).dim() == 3);
  const CatalogEntry f12 = build("su23_f12");
  CHECK(compute_w(f12.v).space() == *f12.expected.w);
}

TEST_CASE("HNR verdicts") {
  const HnrVerdict g = hnr_verdict(build("grassmann_pair").v);
  CHECK(g.strict_hnr);
  CHECK(g.hnr);
  REQUIRE(g.witness_parabolic.has_value());
  CHECK(g.witness_parabolic->nilradical() == g.w_n);
  const HnrVerdict s = hnr_verdict(build("su22_f12").v);
  CHECK_FALSE(s.strict_hnr);
  CHECK(s.hnr);
  CHECK(s.w_n.is_zero());
  CHECK_FALSE(hnr_verdict(build("su23_f13").v).strict_hnr);
}

TEST_CASE("strengthening") {
  const Subalgebra u = strictly_upper(3);
  CHECK(strengthen(u, ParabolicSubalgebra(borel(3))) == u);
  const Subalgebra g = build("grassmann_pair").v;
  CHECK(strengthen(g, q_max(g, q_min(g))) == g);
  const Subalgebra f13 = build("su23_f13").v;
  const Subalgebra tilde = strengthen(f13, q_max(f13, q_min(f13)));
  CHECK(contains(tilde.space(), f13.space()));
  CHECK(tilde.dim() > f13.dim());
}

TEST_CASE("property: regularization chains grow and keep v and nr(v)") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    const RegularizationTrace t = parabolic_regularization(v);
    for (std::size_t i = 1; i < t.chain.size(); ++i) CHECK(t.chain[i].dim() > t.chain[i - 1].dim());
    CHECK(contains(t.fixed_point.space(), v.space()));
    CHECK(contains(t.fixed_point.nr(), v.nr()));
    CHECK(is_parabolic(t.fixed_point).parabolic);
    CHECK(t.steps <= v.ambient().dim());
  }
}

TEST_CASE("property: q_min and q_max are in P0(v) and nested in dimension") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    const ParabolicSubalgebra lo = q_min(v);
    const ParabolicSubalgebra hi = q_max(v, lo);
    CHECK(p0_membership(v, lo).member);
    CHECK(p0_membership(v, hi).member);
    CHECK(lo.dim() <= hi.dim());
  }
}

TEST_CASE("property: horocyclic subspaces have parabolic normalizers with that nilradical") {
  Rng rng(31);
  const AmbientAlgebra k = AmbientAlgebra::sl(4);
  for (int trial = 0; trial < 12; ++trial) {
    const Subspace s = lie_closure(span({random_upper(4, rng, true)}));
    const HorocyclicVerdict h = is_horocyclic(k, s);
    if (!h.value) continue;
    const Subalgebra n = normalizer(k, s);
    CHECK(is_parabolic(n).parabolic);
    CHECK(n.nr() == s);
  }
}

TEST_CASE("property: w contains v, lies in v + sigma v, and is n-reductive") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    const Subalgebra w = compute_w(v);
    CHECK(contains(w.space(), v.space()));
    CHECK(contains(subspace_sum(v.space(), sigma_space(v.space())), w.space()));
    CHECK(is_n_reductive(w).value);
  }
}
