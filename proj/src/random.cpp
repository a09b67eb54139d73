#include "crmostow/random.hpp"

namespace crmostow {

CMat random_complex(std::size_t n, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  CMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = {g(rng), g(rng)};
  return out;
}

namespace {
void remove_trace(CMat& a) {
  const auto n = a.rows();
  a -= (a.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
}
}  // namespace

CMat random_traceless(std::size_t n, Rng& rng, double scale) {
  CMat a = random_complex(n, rng, scale);
  remove_trace(a);
  return a;
}

CMat random_hermitian_traceless(std::size_t n, Rng& rng, double scale) {
  const CMat a = random_complex(n, rng, scale);
  CMat h = 0.5 * (a + a.adjoint());
  remove_trace(h);
  return h;
}

CMat random_antihermitian_traceless(std::size_t n, Rng& rng, double scale) {
  const CMat a = random_complex(n, rng, scale);
  CMat y = 0.5 * (a - a.adjoint());
  remove_trace(y);
  return y;
}

CMat random_special_linear(std::size_t n, Rng& rng, double scale) { return expm(random_traceless(n, rng, scale)); }

CMat random_spd_det_one(std::size_t n, Rng& rng, double scale) {
  return hermitian_exp(random_hermitian_traceless(n, rng, scale));
}

JacobiFieldSpec random_jacobi_spec(std::size_t n, Rng& rng, double scale) {
  JacobiFieldSpec spec;
  spec.h = random_hermitian_traceless(n, rng, scale);
  spec.z = random_traceless(n, rng, scale);
  const Eigen::SelfAdjointEigenSolver<CMat> es(spec.h);
  std::normal_distribution<double> g(0.0, scale);
  Eigen::VectorXd d(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) d(i) = g(rng);
  d.array() -= d.mean();
  const CMat u = es.eigenvectors();
  spec.t = u * d.cast<std::complex<double>>().asDiagonal() * u.adjoint();
  spec.t = 0.5 * (spec.t + spec.t.adjoint()).eval();
  return spec;
}

}  // namespace crmostow
