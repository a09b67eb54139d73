#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace testing;

namespace {

CMat diag_real(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<std::complex<double>>().asDiagonal();
}

}  // namespace

TEST_CASE("matrix exponential and logarithm") {
  CMat nil = CMat::Zero(2, 2);
  nil(0, 1) = 3.0;
  CMat expected = CMat::Identity(2, 2);
  expected(0, 1) = 3.0;
  CHECK((expm(nil) - expected).norm() < 1e-14);
  Rng rng(51);
  for (int i = 0; i < 5; ++i) {
    const CMat h = random_hermitian_traceless(3, rng);
    CHECK((expm(h) - hermitian_exp(h)).norm() < 1e-12);
    CHECK((hermitian_log(hermitian_exp(h)) - h).norm() < 1e-12);
  }
  CHECK_THROWS_AS(hermitian_log(diag_real({1, -1})), Error);
}

TEST_CASE("points of the symmetric space") {
  CHECK_THROWS_AS(SpdPoint(diag_real({2, 1})), Error);
  CHECK_THROWS_AS(SpdPoint(diag_real({-1, -1})), Error);
  const SpdPoint e = SpdPoint::identity(2);
  CHECK(dist(e, e) == doctest::Approx(0.0));
  const SpdPoint far(diag_real({std::exp(2.0), std::exp(-2.0)}));
  CHECK(dist(e, far) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
  Rng rng(52);
  for (int i = 0; i < 5; ++i) {
    const CMat z = random_special_linear(2, rng);
    CHECK(dist(e.congruence(z), far.congruence(z)) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(dist(e, SpdPoint(diag_real({1e7, 1e-7}))), Error);
}

TEST_CASE("Jacobi fields") {
  Rng rng(53);
  const CMat h = diag_real({1.0, 0.5, -1.5});
  const JacobiFieldSpec zero{h, CMat::Zero(3, 3), CMat::Zero(3, 3)};
  CHECK(jacobi_eval(zero, 0.7).j.norm() == 0.0);
  // An anti-Hermitian z commuting with h is in the kernel.
  const CMat cu = std::complex<double>(0, 1) * diag_real({1.0, -2.0, 1.0});
  const JacobiFieldSpec kernel{h, cu, CMat::Zero(3, 3)};
  CHECK(jacobi_eval(kernel, 0.3).j.norm() < 1e-14);
  CHECK(jacobi_eval(kernel, 1.7).j.norm() < 1e-14);
  const JacobiFieldSpec bad{h, CMat::Zero(3, 3), random_hermitian_traceless(3, rng)};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("Jacobi derivative matches a transported central difference") {
  Rng rng(54);
  for (int i = 0; i < 5; ++i) {
    const JacobiFieldSpec spec = random_jacobi_spec(3, rng);
    const double t = 0.4, s = 1e-4;
    const CMat back = hermitian_exp(-0.5 * s * spec.h);
    const CMat fwd = hermitian_exp(0.5 * s * spec.h);
    const CMat plus = back * jacobi_eval(spec, t + s).j * back;
    const CMat minus = fwd * jacobi_eval(spec, t - s).j * fwd;
    const CMat fd = (plus - minus) / (2 * s);
    const CMat jdot = jacobi_eval(spec, t).jdot;
    CHECK((fd - jdot).norm() / std::max(1.0, jdot.norm()) < 1e-6);
  }
}

TEST_CASE("Jacobi norms") {
  Rng rng(55);
  const JacobiFieldSpec spec = random_jacobi_spec(3, rng);
  const CMat j0 = spec.z + spec.z.adjoint();
  CHECK(jacobi_norm_sq(spec, 0.0) == doctest::Approx(j0.squaredNorm()).epsilon(1e-12));
  const double tt = (spec.t * spec.t).trace().real();
  const JacobiFieldSpec linear{spec.h, CMat::Zero(3, 3), spec.t};
  for (double t : {0.5, 1.0, 2.0}) CHECK(jacobi_norm_sq(linear, t) == doctest::Approx(4 * t * t * tt).epsilon(1e-10));
  // t theta_T has constant derivative theta_T of squared length 4 tr(T^2), so its energy is 2 tr(T^2).
  CHECK(jacobi_energy(linear) == doctest::Approx(2 * tt).epsilon(1e-8));
  // theta_T itself is parallel.
  const JacobiFieldSpec parallel{spec.h, spec.t, CMat::Zero(3, 3)};
  CHECK(std::abs(jacobi_energy(parallel)) < 1e-10);
  CHECK(jacobi_energy(spec) >= -1e-10);
}

TEST_CASE("orthogonality case of the Taylor identity") {
  Rng rng(56);
  for (int i = 0; i < 5; ++i) {
    const CMat h = random_hermitian_traceless(3, rng);
    CMat z = random_traceless(3, rng, 0.3);
    const CMat x = random_hermitian_traceless(3, rng, 0.3);
    // Enforce tr(x z) = 0 by removing the component of z along x*.
    z -= ((x * z).trace() / (x * x.adjoint()).trace()) * x.adjoint();
    const JacobiFieldSpec diff = difference_field(h, z, x);
    CHECK((jacobi_eval(diff, 0.0).j - (z + z.adjoint())).norm() < 1e-12);
    const double lhs = jacobi_norm_sq(diff, 1.0);
    const double rhs = (z + z.adjoint()).squaredNorm() + 2 * (h * (z * z.adjoint() - z.adjoint() * z)).trace().real() +
                       2 * jacobi_energy(diff);
    CHECK(rel_err(lhs, rhs) < 1e-7);
  }
}

TEST_CASE("polar decomposition") {
  Rng rng(57);
  const CMat u = expm(random_antihermitian_traceless(3, rng));
  const PolarDecomposition pu = polar_decompose(u);
  CHECK(pu.x.norm() < 1e-12);
  const CMat x0 = random_hermitian_traceless(3, rng);
  const PolarDecomposition px = polar_decompose(hermitian_exp(x0));
  CHECK((px.u - CMat::Identity(3, 3)).norm() < 1e-12);
  CHECK((px.x - x0).norm() < 1e-12);
  for (int i = 0; i < 10; ++i) {
    const CMat z = random_special_linear(3, rng);
    const PolarDecomposition p = polar_decompose(z);
    CHECK((p.u * hermitian_exp(p.x) - z).norm() < 1e-10);
    CHECK((p.u.adjoint() * p.u - CMat::Identity(3, 3)).norm() < 1e-10);
    CHECK(std::abs(p.x.trace()) < 1e-12);
  }
  CHECK_THROWS_AS(polar_decompose(CMat::Zero(2, 2)), Error);
}

TEST_CASE("minor determinant inequality") {
  const MinorInequality d = minor_log_inequality(SpdPoint(diag_real({2.0, 0.25, 2.0})));
  CHECK(d.lhs == doctest::Approx(d.rhs).epsilon(1e-12));
  CHECK_FALSE(d.strict);
  CMat hand(2, 2);
  hand << 2, 1, 1, 1;
  const MinorInequality m = minor_log_inequality(SpdPoint(hand));
  const double l1 = std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(m.lhs == doctest::Approx(2 * l1 * l1).epsilon(1e-12));
  CHECK(m.rhs == doctest::Approx(2 * std::log(2.0) * std::log(2.0)).epsilon(1e-12));
  CHECK(m.strict);
}

TEST_CASE("counterexample search") {
  const Counterexample c = counterexample_search();
  CHECK(c.theta_one_norm < 1e-8);
  CHECK(c.theta_zero_norm > 0.1);
  CHECK(c.trace_pairing < 1e-8);
  CHECK(c.a * c.b > 0);
  CHECK(is_nilpotent(to_exact(c.z)));
  CHECK((c.y + c.y.adjoint()).norm() < 1e-10);
  CHECK((theta(c.h, c.z + c.y, 1.0)).norm() == doctest::Approx(c.theta_one_norm).epsilon(1e-6));
}

TEST_CASE("property: Taylor identity and closed form on random specs") {
  Rng rng(58);
  for (int i = 0; i < 100; ++i) {
    const JacobiFieldSpec spec = random_jacobi_spec(2 + static_cast<std::size_t>(i % 3), rng);
    const JacobiValue j0 = jacobi_eval(spec, 0.0);
    const double taylor = jacobi_norm_sq(spec, 0.0) + 2 * frob_inner(j0.j, j0.jdot) + 2 * jacobi_energy(spec);
    CHECK(rel_err(jacobi_norm_sq(spec, 1.0), taylor) < 1e-7);
    for (double t : {0.1, 0.8, 1.9}) {
      CHECK(rel_err(jacobi_norm_sq_blocks(spec, t), jacobi_norm_sq_direct(spec, t)) < 1e-9);
    }
  }
}

TEST_CASE("property: dist is invariant under congruence") {
  Rng rng(59);
  for (int i = 0; i < 20; ++i) {
    const SpdPoint p(random_spd_det_one(3, rng)), q(random_spd_det_one(3, rng));
    const CMat z = random_special_linear(3, rng);
    CHECK(std::abs(dist(p, q) - dist(p.congruence(z), q.congruence(z))) < 1e-8);
  }
}

TEST_CASE("property: minor inequality is strict off the diagonal") {
  Rng rng(60);
  for (int i = 0; i < 200; ++i) {
    const SpdPoint h(random_spd_det_one(2 + static_cast<std::size_t>(i % 4), rng));
    const MinorInequality m = minor_log_inequality(h);
    CHECK(m.lhs >= m.rhs - 1e-12);
    CHECK(m.strict);
  }
}
