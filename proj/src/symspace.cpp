#include "crmostow/symspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace crmostow {

namespace {

using Complex = std::complex<double>;

double one_norm(const CMat& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

/// Pade numerator/denominator pair for degree m in {3, 5, 7, 9}.
void pade_low(const CMat& a, int m, CMat& u, CMat& v) {
  static const double b3[] = {120., 60., 12., 1.};
  static const double b5[] = {30240., 15120., 3360., 420., 30., 1.};
  static const double b7[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
  static const double b9[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                              2162160.,     110880.,     3960.,       90.,        1.};
  const double* b = m == 3 ? b3 : m == 5 ? b5 : m == 7 ? b7 : b9;
  const Eigen::Index n = a.rows();
  const CMat a2 = a * a;
  CMat pw = CMat::Identity(n, n);
  CMat odd = b[1] * pw;
  v = b[0] * pw;
  for (int k = 2; k <= m; k += 2) {
    pw = pw * a2;
    v += b[k] * pw;
    odd += b[k + 1] * pw;
  }
  u = a * odd;
}

void pade13(const CMat& a, CMat& u, CMat& v) {
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
                             129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
                             1323241920.,        40840800.,          960960.,           16380.,
                             182.,               1.};
  const Eigen::Index n = a.rows();
  const CMat id = CMat::Identity(n, n);
  const CMat a2 = a * a;
  const CMat a4 = a2 * a2;
  const CMat a6 = a4 * a2;
  const CMat uhigh = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u = a * (uhigh + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

/// Eigendecomposition of a Hermitian matrix (symmetrized first).
Eigen::SelfAdjointEigenSolver<CMat> hermitian_eigen(const CMat& h) {
  const CMat s = 0.5 * (h + h.adjoint());
  return Eigen::SelfAdjointEigenSolver<CMat>(s);
}

void require_square(const CMat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " must be a nonempty square matrix");
  }
}

/// (x - y)/(e^x - e^y), continuous across x = y.
double exp_divided_difference(double x, double y) {
  const double u = x - y;
  if (u == 0.0) return std::exp(-y);
  return std::exp(-y) * u / std::expm1(u);
}

}  // namespace

CMat to_numeric(const ExactMatrix& x) {
  CMat out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      out(i, j) = Complex(x(i, j).re().get_d(), x(i, j).im().get_d());
    }
  }
  return out;
}

ExactMatrix to_exact(const CMat& a) {
  ExactVec e;
  e.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) e.emplace_back(Rational(a(i, j).real()), Rational(a(i, j).imag()));
  return ExactMatrix(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()), std::move(e));
}

CMat expm(const CMat& a) {
  require_square(a, "expm argument");
  static const double theta[] = {1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
                                 2.097847961257068e0};
  static const int degree[] = {3, 5, 7, 9};
  const double norm = one_norm(a);
  CMat u, v;
  for (int k = 0; k < 4; ++k) {
    if (norm <= theta[k]) {
      pade_low(a, degree[k], u, v);
      return (v - u).partialPivLu().solve(v + u);
    }
  }
  const double theta13 = 5.371920351148152;
  int s = norm > theta13 ? static_cast<int>(std::ceil(std::log2(norm / theta13))) : 0;
  const CMat scaled = a / std::ldexp(1.0, s);
  pade13(scaled, u, v);
  CMat r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

CMat hermitian_exp(const CMat& h) {
  require_square(h, "hermitian_exp argument");
  const auto es = hermitian_eigen(h);
  const Eigen::VectorXd e = es.eigenvalues().array().exp();
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

CMat hermitian_log(const CMat& p) {
  require_square(p, "hermitian_log argument");
  const auto es = hermitian_eigen(p);
  if (es.eigenvalues().minCoeff() <= 0.0) throw Error(ErrorCode::NotPositiveDefinite, "not positive definite");
  const Eigen::VectorXd e = es.eigenvalues().array().log();
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

double frob_inner(const CMat& a, const CMat& b) { return (a.array() * b.array().conjugate()).sum().real(); }

double hermitian_defect(const CMat& a) { return (a - a.adjoint()).norm(); }

SpdPoint::SpdPoint(CMat p) : p_(std::move(p)) {
  require_square(p_, "SpdPoint");
  const double scale = std::max(1.0, p_.norm());
  if (hermitian_defect(p_) > tol::herm * scale) throw Error(ErrorCode::NotPositiveDefinite, "not Hermitian");
  p_ = 0.5 * (p_ + p_.adjoint()).eval();
  const auto es = hermitian_eigen(p_);
  if (es.eigenvalues().minCoeff() <= 0.0) throw Error(ErrorCode::NotPositiveDefinite, "not positive definite");
  const double logdet = es.eigenvalues().array().log().sum();
  if (std::abs(std::expm1(logdet)) > tol::det) {
    std::ostringstream os;
    os << "determinant " << std::exp(logdet) << " differs from 1";
    throw Error(ErrorCode::NotPositiveDefinite, os.str());
  }
}

SpdPoint SpdPoint::congruence(const CMat& z) const { return SpdPoint(z.adjoint() * p_ * z); }

double dist_sq_unnormalized(const CMat& p, const CMat& q) {
  for (const CMat* m : {&p, &q}) {
    const auto es = hermitian_eigen(*m);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0.0) throw Error(ErrorCode::NotPositiveDefinite, "not positive definite");
    if (hi / lo > tol::max_condition) throw Error(ErrorCode::NotPositiveDefinite, "not positive definite: condition number above 1e12");
  }
  const Eigen::LLT<CMat> llt(0.5 * (p + p.adjoint()));
  const CMat lq = llt.matrixL().solve(q);
  const CMat m = llt.matrixL().solve(lq.adjoint()).adjoint();
  const auto es = hermitian_eigen(m);
  return es.eigenvalues().array().log().square().sum();
}

double dist(const SpdPoint& p, const SpdPoint& q) {
  if (p.n() != q.n()) throw Error(ErrorCode::ShapeMismatch, "dist: size mismatch");
  return std::sqrt(dist_sq_unnormalized(p.matrix(), q.matrix()));
}

double riemannian_inner(const CMat& p, const CMat& a, const CMat& b) {
  const auto lu = p.partialPivLu();
  return (lu.solve(a) * lu.solve(b)).trace().real();
}

CMat theta(const CMat& h, const CMat& z, double t) {
  const CMat e = hermitian_exp(t * h);
  return z.adjoint() * e + e * z;
}

void JacobiFieldSpec::validate() const {
  require_square(h, "H");
  if (z.rows() != h.rows() || z.cols() != h.cols() || t.rows() != h.rows() || t.cols() != h.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "Jacobi spec: H, Z, T must have the same size");
  }
  const double scale = std::max(1.0, h.norm() + t.norm());
  if (hermitian_defect(h) > tol::herm * scale) throw Error(ErrorCode::InvalidArgument, "H is not Hermitian");
  if (hermitian_defect(t) > tol::herm * scale) throw Error(ErrorCode::InvalidArgument, "T is not Hermitian");
  if ((h * t - t * h).norm() > 1e-9 * scale * scale) throw Error(ErrorCode::InvalidArgument, "T does not commute with H");
}

JacobiValue jacobi_eval(const JacobiFieldSpec& spec, double t) {
  const CMat e = hermitian_exp(t * spec.h);
  const CMat te = spec.t * e;
  const CMat hz = spec.h * spec.z - spec.z * spec.h;
  JacobiValue out;
  out.j = spec.z.adjoint() * e + e * spec.z + 2.0 * t * te;
  out.jdot = 0.5 * (hz.adjoint() * e + e * hz) + 2.0 * te;
#ifndef NDEBUG
  if (t == 0.0) {
    const CMat j0 = spec.z + spec.z.adjoint();
    const CMat zd = spec.z - spec.z.adjoint();
    const CMat jd0 = 0.5 * (spec.h * zd - zd * spec.h) + 2.0 * spec.t;
    const double scale = 1e-12 * std::max(1.0, j0.norm() + jd0.norm());
    if ((out.j - j0).norm() > scale || (out.jdot - jd0).norm() > scale) {
      throw Error(ErrorCode::CertificateFailed, "Jacobi field initial values disagree");
    }
  }
#endif
  return out;
}

CMat jacobi_second(const JacobiFieldSpec& spec, double t) {
  const CMat hz = spec.h * spec.z - spec.z * spec.h;
  const CMat hhz = spec.h * hz - hz * spec.h;
  return 0.25 * theta(spec.h, hhz, t);
}

double jacobi_norm_sq_direct(const JacobiFieldSpec& spec, double t) {
  const CMat j = jacobi_eval(spec, t).j;
  const CMat inv = hermitian_exp(-t * spec.h);
  return (inv * j * inv * j).trace().real();
}

double jacobi_norm_sq_blocks(const JacobiFieldSpec& spec, double t) {
  const auto es = hermitian_eigen(spec.h);
  const CMat& u = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const CMat z = u.adjoint() * spec.z * u;
  const CMat tt = u.adjoint() * spec.t * u;
  CMat zt(z.rows(), z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < z.cols(); ++j) zt(i, j) = z(i, j) * std::exp(0.5 * t * (lam(i) - lam(j)));
  }
  const CMat m = zt + zt.adjoint() + 2.0 * t * tt;
  return m.squaredNorm();
}

double jacobi_norm_sq(const JacobiFieldSpec& spec, double t) {
  const double direct = jacobi_norm_sq_direct(spec, t);
  const double blocks = jacobi_norm_sq_blocks(spec, t);
  if (std::abs(direct - blocks) > tol::xcheck * std::max(std::abs(direct), std::abs(blocks)) + 1e-14) {
    std::ostringstream os;
    os << "cross-check divergence: direct " << direct << " vs block formula " << blocks;
    throw Error(ErrorCode::CrossCheckDivergence, os.str());
  }
  return direct;
}

double jacobi_energy(const JacobiFieldSpec& spec) {
  auto integrand = [&](double t) {
    const JacobiValue jv = jacobi_eval(spec, t);
    const CMat jdd = jacobi_second(spec, t);
    const CMat g = hermitian_exp(t * spec.h);
    return (1.0 - t) * (riemannian_inner(g, jv.jdot, jv.jdot) + riemannian_inner(g, jv.j, jdd));
  };
  double err = 0;
  double l1 = 0;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  // A negligible integrand already meets the absolute target; bisecting noise would not.
  const double coarse = Rule::integrate(integrand, 0.0, 1.0, 0, 1e-13, &err, &l1);
  if (l1 < tol::quad) return coarse;
  const double value = Rule::integrate(integrand, 0.0, 1.0, 15, 1e-13, &err, &l1);
  if (!std::isfinite(value) || err > tol::quad * std::max(1.0, l1)) {
    std::ostringstream os;
    os << "quadrature did not converge: error estimate " << err;
    throw Error(ErrorCode::QuadratureFailure, os.str());
  }
  return value;
}

TangentSplit split_tangent(const CMat& h, const CMat& x) {
  const auto es = hermitian_eigen(h);
  const CMat& u = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double gap = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());
  const CMat xs = u.adjoint() * x * u;
  CMat y = CMat::Zero(x.rows(), x.cols());
  CMat t = CMat::Zero(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double dl = lam(i) - lam(j);
      if (std::abs(dl) <= gap) {
        t(i, j) = 0.5 * xs(i, j);
      } else {
        y(i, j) = xs(i, j) / dl;
      }
    }
  }
  return {u * y * u.adjoint(), u * t * u.adjoint()};
}

JacobiFieldSpec difference_field(const CMat& h, const CMat& z, const CMat& x) {
  const TangentSplit s = split_tangent(h, x);
  return {h, z - s.y, -s.t};
}

PolarDecomposition polar_decompose(const CMat& z, bool det_one) {
  require_square(z, "polar_decompose argument");
  const CMat zz = z.adjoint() * z;
  const auto es = hermitian_eigen(zz);
  if (es.eigenvalues().minCoeff() <= 1e-24 * std::max(1.0, es.eigenvalues().maxCoeff())) {
    throw Error(ErrorCode::InvalidArgument, "singular input");
  }
  if (det_one) {
    const double logdet = 0.5 * es.eigenvalues().array().log().sum();
    if (std::abs(std::expm1(logdet)) > tol::det) throw Error(ErrorCode::InvalidArgument, "|det z| is not 1");
  }
  const Eigen::VectorXd half_log = 0.5 * es.eigenvalues().array().log();
  const Eigen::VectorXd inv_sqrt = (-half_log.array()).exp();
  PolarDecomposition out;
  out.x = es.eigenvectors() * half_log.asDiagonal() * es.eigenvectors().adjoint();
  out.u = z * es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
  if (det_one) out.x -= (out.x.trace() / static_cast<double>(z.rows())) * CMat::Identity(z.rows(), z.cols());
  return out;
}

MinorInequality minor_log_inequality(const SpdPoint& h) {
  const CMat& p = h.matrix();
  const auto es = hermitian_eigen(p);
  MinorInequality out;
  out.lhs = es.eigenvalues().array().log().square().sum();
  // D_l / D_{l-1} is the squared l-th Cholesky pivot.
  const Eigen::LLT<CMat> llt(p);
  const CMat l = llt.matrixL();
  for (Eigen::Index k = 0; k < p.rows(); ++k) {
    const double ratio = std::norm(l(k, k));
    out.rhs += std::log(ratio) * std::log(ratio);
  }
  const double offdiag = (p - CMat(p.diagonal().asDiagonal())).norm();
  out.strict = offdiag > 1e-12 * p.norm() && out.lhs - out.rhs > 1e-12;
  return out;
}

Counterexample counterexample_search(const CounterexampleOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> lam_dist(-1.5, -0.5);
  std::uniform_real_distribution<double> a_dist(8.0, 12.0);
  std::uniform_real_distribution<double> b_dist(0.8, 1.2);
  Counterexample out;
  out.lambda1 = lam_dist(rng);
  // a, b on a 2^-20 grid and c = 1 make d = -ab exact, so Z^3 = 0 holds exactly.
  auto dyadic = [](double x) { return std::ldexp(std::round(std::ldexp(x, 20)), -20); };
  out.a = dyadic(a_dist(rng));
  out.b = dyadic(b_dist(rng));
  out.c = 1.0;
  out.d = -(out.a * out.b);
  const double l1 = out.lambda1;
  const double a = out.a, b = out.b, c = out.c;
  const double ab = a * b;
  auto terms = [&](double l2, double* scale) {
    const double l3 = -l1 - l2;
    const double e1 = std::exp(l1), e2 = std::exp(l2), e3 = std::exp(l3);
    const double g12 = exp_divided_difference(l2, l1);
    const double g23 = exp_divided_difference(l2, l3);
    const double first = a * a * e1 + ab * (e1 + e2) + b * b * e2;
    const double second = c * c * e2 - ab * (e2 + e3) + ab * ab / (c * c) * e3;
    if (scale != nullptr) {
      *scale = g12 * (a * a * e1 + ab * (e1 + e2) + b * b * e2) +
               g23 * (c * c * e2 + ab * (e2 + e3) + ab * ab / (c * c) * e3);
    }
    return g12 * first + g23 * second;
  };
  auto f = [&](double l2) { return terms(l2, nullptr); };
  const double lo = -l1 / 2;
  const double flo = f(lo);
  if (!(flo > 0)) throw Error(ErrorCode::NoRootFound, "no root found: equation is not positive at the symmetric point");
  double width = 1.0;
  double fhi = f(lo + width);
  std::size_t doublings = 0;
  while (fhi > 0) {
    if (++doublings > options.max_doublings) {
      throw Error(ErrorCode::NoRootFound, "no root found: enlarge the lambda2 range");
    }
    width *= 2;
    fhi = f(lo + width);
  }
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(f, lo, lo + width, flo, fhi,
                                                         boost::math::tools::eps_tolerance<double>(52), iters);
  out.lambda2 = 0.5 * (bracket.first + bracket.second);
  double scale = 0;
  out.equation_residual = std::abs(terms(out.lambda2, &scale)) / scale;
  if (out.equation_residual > options.residual_tol) {
    std::ostringstream os;
    os << "no root found: relative residual " << out.equation_residual;
    throw Error(ErrorCode::NoRootFound, os.str());
  }
  const double l2 = out.lambda2;
  const double l3 = -l1 - l2;
  const double e1 = std::exp(l1), e2 = std::exp(l2), e3 = std::exp(l3);
  const double alpha = (a * e1 + b * e2) / (e2 - e1);
  const double beta = (c * e2 + out.d * e3) / (e3 - e2);
  out.h = CMat::Zero(3, 3);
  out.h(0, 0) = l1;
  out.h(1, 1) = l2;
  out.h(2, 2) = l3;
  out.z = CMat::Zero(3, 3);
  out.z(0, 1) = a;
  out.z(1, 0) = b;
  out.z(1, 2) = c;
  out.z(2, 1) = out.d;
  out.y = CMat::Zero(3, 3);
  out.y(0, 1) = alpha;
  out.y(1, 0) = -alpha;
  out.y(1, 2) = beta;
  out.y(2, 1) = -beta;
  const CMat zy = out.z + out.y;
  out.theta_one_norm = theta(out.h, zy, 1.0).norm();
  out.theta_zero_norm = theta(out.h, zy, 0.0).norm();
  const CMat hy = out.h * out.y - out.y * out.h;
  out.trace_pairing = std::abs((hy * out.z).trace());
  if (out.theta_one_norm >= 10 * options.residual_tol || !(out.theta_zero_norm > 0.1) ||
      out.trace_pairing > 1e-6 * std::max(1.0, hy.norm() * out.z.norm())) {
    std::ostringstream os;
    os << "counterexample verification failed: |theta(1)| = " << out.theta_one_norm
       << ", |theta(0)| = " << out.theta_zero_norm << ", |tr([H,Y]Z)| = " << out.trace_pairing;
    throw Error(ErrorCode::CertificateFailed, os.str());
  }
  return out;
}

}  // namespace crmostow
