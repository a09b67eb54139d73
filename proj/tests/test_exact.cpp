#include "doctest.h"
#include "support.hpp"

#include "crmostow/polynomial.hpp"

using namespace testing;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(7, 3)) == "7/3");
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("gaussian rational arithmetic") {
  const ExactScalar a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
  CHECK(a * a.inverse() == ExactScalar(1));
  CHECK((a + b) - b == a);
  CHECK(a.conj().im() == Rational(-3));
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
}

TEST_CASE("matrix operations") {
  const ExactMatrix e12 = unit(2, 1, 2), e21 = unit(2, 2, 1);
  CHECK(bracket(e12, e21) == diag({1, -1}));
  CHECK(trace_product(e12, e21) == ExactScalar(1));
  CHECK(hermitian_product(e12, e12) == ExactScalar(1));
  CHECK(power(e12, 2).is_zero());
  const ExactMatrix m = diag({2, 3}) + e12;
  CHECK(m * inverse(m) == ExactMatrix::identity(2));
  CHECK_THROWS_AS(inverse(e12), Error);
}

TEST_CASE("subspace echelon form is canonical") {
  const std::size_t n = 2;
  const Subspace a = echelonize(n, n, {unit(n, 1, 2), unit(n, 1, 2) + unit(n, 2, 1)});
  const Subspace b = echelonize(n, n, {unit(n, 2, 1) * ExactScalar(3), unit(n, 1, 2) * ExactScalar::i()});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(contains(a, unit(n, 1, 2) - unit(n, 2, 1)));
  CHECK_FALSE(contains(a, unit(n, 1, 1)));
}

TEST_CASE("sum, intersection and complements") {
  const std::size_t n = 3;
  const Subspace upper = strictly_upper(n).space();
  const Subspace b = borel(n).space();
  CHECK(subspace_intersect(upper, b) == upper);
  CHECK(subspace_sum(upper, cartan(n).space()) == b);
  const Subspace comp = hermitian_complement_in(b, upper);
  CHECK(comp == cartan(n).space());
  CHECK(hermitian_orthogonal(Subspace::full(n, n)).is_zero());
  const ExactMatrix x = unit(n, 1, 2) + unit(n, 1, 1);
  CHECK(orthogonal_projection(upper, x) == unit(n, 1, 2));
}

TEST_CASE("real subspaces of Hermitian and anti-Hermitian parts") {
  const AmbientAlgebra k = AmbientAlgebra::sl(2);
  CHECK(hermitian_part(k.space()).dim() == 3);
  CHECK(antihermitian_part(k.space()).dim() == 3);
  CHECK(RealSubspace::from_complex(k.space()).dim() == 6);
  const RealSubspace p0 = k.hermitian_form();
  CHECK(p0.contains(unit(2, 1, 2) + unit(2, 2, 1)));
  CHECK_FALSE(p0.contains(unit(2, 1, 2)));
  CHECK(real_intersect(p0, k.compact_form()).dim() == 0);
  CHECK(real_sum(p0, k.compact_form()).dim() == 6);
}

TEST_CASE("polynomials") {
  const ExactMatrix x = diag({1, 1, -2}) + unit(3, 1, 2);
  const Poly minimal = minimal_polynomial(x);
  CHECK(minimal.size() == 4);  // (t-1)^2 (t+2)
  CHECK(poly_eval(minimal, x).is_zero());
  const Poly chi = characteristic_polynomial(x);
  CHECK(poly_eval(chi, x).is_zero());
  const auto roots = rational_roots(real_coefficients(chi));
  CHECK(roots.size() == 3);
  const SignCounts s = descartes_counts(real_coefficients(chi));
  CHECK(s.positive == 2);
  CHECK(s.negative == 1);
  CHECK(s.zero == 0);
  // t^2 - 2 has irrational roots.
  CHECK_THROWS_AS(rational_roots(RatPoly{Rational(-2), Rational(0), Rational(1)}), Error);
}

TEST_CASE("property: echelon form does not depend on generator order or scaling") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ExactMatrix> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_exact(3, rng));
    std::vector<ExactMatrix> shuffled(gens.rbegin(), gens.rend());
    shuffled[0] = shuffled[0] * ExactScalar(Rational(-3, 7), Rational(1));
    shuffled.push_back(gens[0] + gens[1]);
    CHECK(echelonize(3, 3, gens) == echelonize(3, 3, shuffled));
  }
}

TEST_CASE("property: dim(a + b) + dim(a cap b) = dim a + dim b") {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ExactMatrix> ga, gb;
    const ExactMatrix shared = random_exact(3, rng);
    ga = {shared, random_exact(3, rng), random_exact(3, rng)};
    gb = {shared, random_exact(3, rng)};
    const Subspace a = echelonize(3, 3, ga), b = echelonize(3, 3, gb);
    CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
  }
}
