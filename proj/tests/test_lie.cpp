#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("ambient algebras") {
  const AmbientAlgebra sl3 = AmbientAlgebra::sl(3);
  CHECK(sl3.dim() == 8);
  CHECK(sl3.compact_form().dim() == 8);
  CHECK(sl3.hermitian_form().dim() == 8);
  const AmbientAlgebra b = AmbientAlgebra::blocks({2, 2});
  CHECK(b.dim() == 7);
  CHECK(b.contains(unit(4, 1, 2)));
  CHECK_FALSE(b.contains(unit(4, 1, 3)));
  CHECK(AmbientAlgebra::sigma(AmbientAlgebra::sigma(unit(3, 1, 2))) == unit(3, 1, 2));
}

TEST_CASE("subalgebra construction checks closure") {
  const AmbientAlgebra sl2 = AmbientAlgebra::sl(2);
  CHECK(make_subalgebra(sl2, {unit(2, 1, 2)}, ClosureMode::RequireClosed).dim() == 1);
  CHECK(make_subalgebra(sl2, {unit(2, 1, 2), unit(2, 2, 1)}, ClosureMode::CloseUp).dim() == 3);
  try {
    make_subalgebra(sl2, {unit(2, 1, 2), unit(2, 2, 1)}, ClosureMode::RequireClosed);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
  CHECK_THROWS_AS(Subalgebra(sl2, span({ExactMatrix::identity(2)})), Error);
}

TEST_CASE("radical and nilradical on small examples") {
  CHECK(radical(sub(2, {unit(2, 1, 2), unit(2, 2, 1), diag({1, -1})})).is_zero());
  const Subalgebra b2 = borel(2);
  CHECK(radical(b2) == b2.space());
  CHECK(nr(b2) == span({unit(2, 1, 2)}));
  CHECK(nr(cartan(3)).is_zero());
  const Subalgebra su22 = build("su22_f12").v;
  CHECK(radical(su22) == su22.space());
  CHECK(nr(su22) == span({unit(4, 1, 2) + unit(4, 3, 4)}));
}

TEST_CASE("conjugate and Levi intersection") {
  const Subalgebra sl = sub(2, {unit(2, 1, 2), unit(2, 2, 1), diag({1, -1})});
  CHECK(conj(sl) == sl);
  CHECK(levi_intersection(sub(2, {unit(2, 1, 2)})).dim() == 0);
  const Subalgebra g = build("grassmann_pair", {{"p", 1}, {"q", 2}, {"n", 3}, {"k", 1}}).v;
  CHECK(levi_intersection(g).dim() == g.dim() - g.nr().dim());
}

TEST_CASE("n-reductive verdicts") {
  const AmbientAlgebra k = AmbientAlgebra::sl(3);
  const NReductiveVerdict whole = is_n_reductive(Subalgebra(k, k.space()));
  CHECK(whole.value);
  CHECK(whole.nr.is_zero());
  CHECK(whole.levi == k.space());
  CHECK_FALSE(is_n_reductive(build("so_n_symmetric").v).value);
  for (const auto& params : grassmann_parameters(5)) CHECK(is_n_reductive(build("grassmann_pair", params).v).value);
}

TEST_CASE("normalizers") {
  CHECK(normalizer(AmbientAlgebra::sl(2), span({unit(2, 1, 2)})) == borel(2));
  CHECK(normalizer(AmbientAlgebra::sl(3), strictly_upper(3).space()) == borel(3));
  // For su23_f13 as built, [E34, E45] = E35 leaves nr(v) = span{E12 + E35, E45}, so E34
  // does not normalize nr(v); the exact normalizer is 7-dimensional.
  const Subalgebra v = build("su23_f13").v;
  CHECK(v.nr() == span({unit(5, 1, 2) + unit(5, 3, 5), unit(5, 4, 5)}));
  CHECK_FALSE(contains(v.nr(), bracket(unit(5, 3, 4), unit(5, 4, 5))));
  const Subalgebra n = normalizer(v.ambient(), v.nr());
  CHECK_FALSE(contains(n.space(), unit(5, 3, 4)));
  CHECK(n.dim() == 7);
}

TEST_CASE("Jordan flags and decomposition") {
  CHECK(jordan_flags(unit(2, 1, 2)) == JordanKind::Nilpotent);
  CHECK(jordan_flags(diag({1, -1})) == JordanKind::Semisimple);
  CHECK(jordan_flags(diag({1, 1, -2}) + unit(3, 1, 2)) == JordanKind::Mixed);
  const ExactMatrix x = diag({1, 1, -2}) + unit(3, 1, 2);
  const auto [s, nil] = jordan_decomposition(x);
  CHECK(s + nil == x);
  CHECK(bracket(s, nil).is_zero());
  CHECK(is_nilpotent(nil));
  CHECK(jordan_flags(s) == JordanKind::Semisimple);
}

TEST_CASE("property: rad cap [v, v] lies in nr(v) on catalog entries") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    CHECK(contains(v.nr(), subspace_intersect(v.radical(), v.derived())));
  }
}

TEST_CASE("property: Levi part is sigma-stable and closed; sigma-stable v equals its Levi part") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    const Subspace l = v.levi();
    CHECK(sigma_space(l) == l);
    CHECK(contains(l, bracket_space(l, l)));
  }
  const Subalgebra b = cartan(3);
  CHECK(b.levi() == b.space());
}

TEST_CASE("property: n-reductive implies nilpotent nr basis and anti-Hermitian compact Levi elements") {
  for (const auto& name : list()) {
    const Subalgebra v = build(name).v;
    if (!is_n_reductive(v).value) continue;
    for (const auto& x : v.nr().basis()) CHECK(is_nilpotent(x));
    for (const auto& x : antihermitian_part(v.levi()).basis()) {
      CHECK(x.adjoint() == -x);
      CHECK(contains(v.space(), x));
    }
  }
}

TEST_CASE("property: normalizer contains every candidate that normalizes") {
  Rng rng(21);
  const AmbientAlgebra k = AmbientAlgebra::sl(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Subalgebra v = Subalgebra(k, lie_closure(span({random_upper(3, rng, true)})));
    const Subalgebra n = normalizer(k, v.space());
    CHECK(contains(n.space(), v.space()));
    for (const auto& x : borel(3).basis())
      if (contains(v.space(), bracket_space(span({x}), v.space()))) CHECK(contains(n.space(), x));
  }
}

TEST_CASE("property: nr of random solvable algebras matches the nilpotent-combination oracle") {
  Rng rng(22);
  for (int trial = 0; trial < 12; ++trial) {
    const Subspace closed = lie_closure(span({random_upper(3, rng, false), random_upper(3, rng, true)}));
    if (closed.dim() > 3) continue;
    const Subalgebra v(AmbientAlgebra::sl(3), closed);
    const auto basis = v.radical().basis();
    std::vector<ExactMatrix> nilpotent;
    const long grid[] = {-1, 0, 1, 2};
    std::vector<std::size_t> idx(basis.size(), 0);
    for (bool done = basis.empty(); !done;) {
      ExactMatrix x(3, 3);
      for (std::size_t j = 0; j < basis.size(); ++j) x += ExactScalar(grid[idx[j]]) * basis[j];
      if (!x.is_zero() && is_nilpotent(x)) nilpotent.push_back(x);
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == 4) idx[j++] = 0;
      done = j == idx.size();
    }
    const Subspace oracle = nilpotent.empty() ? Subspace::zero(3, 3) : span(nilpotent);
    CHECK(v.nr() == oracle);
  }
}
