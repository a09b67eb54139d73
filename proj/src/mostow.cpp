#include "crmostow/mostow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/NonLinearOptimization>

namespace crmostow {

namespace {

using Eigen::VectorXd;

double real_inner(const CMat& a, const CMat& b) { return (a.array() * b.conjugate().array()).real().sum(); }

std::vector<CMat> orthonormal_real(const std::vector<CMat>& gens) {
  std::vector<CMat> out;
  for (CMat g : gens) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) g -= real_inner(g, b) * b;
    const double nrm = g.norm();
    if (nrm > 1e-12) out.push_back(g / nrm);
  }
  return out;
}

/// Orthonormal for Re tr(a b*) on the realification: spans the complex span of gens.
std::vector<CMat> orthonormal_complex(const std::vector<CMat>& gens) {
  std::vector<CMat> out;
  for (CMat g : gens) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) g -= (g.array() * b.conjugate().array()).sum() * b;
    const double nrm = g.norm();
    if (nrm > 1e-12) out.push_back(g / nrm);
  }
  return out;
}

std::vector<CMat> numeric(const std::vector<ExactMatrix>& xs) {
  std::vector<CMat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_numeric(x));
  return out;
}

/// Hermitian matrix as n^2 reals with |hvec(h)| = |h|_F.
VectorXd hvec(const CMat& h) {
  const Eigen::Index n = h.rows();
  VectorXd out(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) out(k++) = h(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(k++) = std::sqrt(2.0) * h(i, j).real();
      out(k++) = std::sqrt(2.0) * h(i, j).imag();
    }
  }
  return out;
}

CMat real_combo(const std::vector<CMat>& basis, const double* c, std::size_t n) {
  CMat out = CMat::Zero(n, n);
  for (std::size_t j = 0; j < basis.size(); ++j) out += c[j] * basis[j];
  return out;
}

CMat complex_combo(const std::vector<CMat>& basis, const double* re, const double* im, std::size_t n) {
  CMat out = CMat::Zero(n, n);
  for (std::size_t j = 0; j < basis.size(); ++j) out += std::complex<double>(re[j], im[j]) * basis[j];
  return out;
}

struct LeastSquares {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = VectorXd;
  using ValueType = VectorXd;
  using JacobianType = Eigen::MatrixXd;

  std::function<void(const VectorXd&, VectorXd&)> f;
  int n_inputs = 0;
  int n_values = 0;
  int inputs() const { return n_inputs; }
  int values() const { return n_values; }
  int operator()(const VectorXd& x, VectorXd& r) const {
    try {
      f(x, r);
    } catch (const Error&) {
      r.setConstant(n_values, 1e10);
    }
    if (!r.allFinite()) r.setConstant(n_values, 1e10);
    return 0;
  }
  /// Central differences with an absolute step floor; Eigen's NumericalDiff scales the
  /// step by |x_j|, which collapses for coordinates that are tiny but nonzero.
  int df(const VectorXd& x, Eigen::MatrixXd& jac) const {
    jac.resize(n_values, n_inputs);
    VectorXd xp = x, rp(n_values), rm(n_values);
    for (int j = 0; j < n_inputs; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x(j)));
      xp(j) = x(j) + h;
      (*this)(xp, rp);
      xp(j) = x(j) - h;
      (*this)(xp, rm);
      xp(j) = x(j);
      jac.col(j) = (rp - rm) / (2 * h);
    }
    return 0;
  }
};

/// Levenberg-Marquardt; returns the final residual norm.
double minimize(LeastSquares fn, VectorXd& x, std::size_t max_evaluations) {
  VectorXd r(fn.n_values);
  if (fn.n_inputs == 0) {
    fn(x, r);
    return r.norm();
  }
  Eigen::LevenbergMarquardt<LeastSquares> lm(fn);
  lm.parameters.maxfev = static_cast<int>(max_evaluations);
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.minimize(x);
  fn(x, r);
  return r.norm();
}

MostowStructure common_structure(const Subalgebra& v) {
  const AmbientAlgebra& k = v.ambient();
  MostowStructure s;
  s.n = k.n();
  if (k.kind() == AmbientKind::BlockSpecialLinear) s.block_sizes = k.block_sizes();
  s.k = orthonormal_complex(numeric(k.space().basis()));
  s.k0 = orthonormal_real(numeric(k.compact_form().basis()));
  s.v_n = orthonormal_complex(numeric(v.nr().basis()));
  s.v_p0 = orthonormal_real(numeric(hermitian_part(v.space()).basis()));
  const Subalgebra q = normalizer(k, v.nr());
  s.levi_q_minus_levi_v = orthonormal_complex(numeric(hermitian_complement_in(q.levi(), v.levi()).basis()));
  return s;
}

void require_structure_n_reductive(const Subalgebra& v) {
  const NReductiveVerdict verdict = is_n_reductive(v);
  if (!verdict.value) throw Error(ErrorCode::InvalidArgument, "v is not n-reductive: " + verdict.reason);
}

}  // namespace

MostowStructure mostow_structure(const Subalgebra& v) {
  require_structure_n_reductive(v);
  MostowStructure s = common_structure(v);
  const HnrVerdict h = hnr_verdict(v);
  const ParabolicSubalgebra q = fiber_parabolic_of_w(h.w);
  const FiberData fiber = fiber_data(v, h.w, q);
  s.f0 = orthonormal_real(numeric(fiber.f0.basis()));
  s.l = orthonormal_complex(numeric(fiber.l.basis()));
  s.unique = h.hnr;
  s.fiber = "hnr";
  return s;
}

MostowStructure naive_mostow_structure(const Subalgebra& v) {
  require_structure_n_reductive(v);
  MostowStructure s = common_structure(v);
  const AmbientAlgebra& k = v.ambient();
  const Subspace perp = hermitian_complement_in(k.space(), subspace_sum(v.space(), sigma_space(v.space())));
  s.f0 = orthonormal_real(numeric(hermitian_part(perp).basis()));
  s.unique = false;
  s.fiber = "naive";
  return s;
}

void require_in_group(const MostowStructure& s, const CMat& zeta) {
  if (zeta.rows() != static_cast<Eigen::Index>(s.n) || zeta.cols() != static_cast<Eigen::Index>(s.n)) {
    throw Error(ErrorCode::ShapeMismatch, "zeta has the wrong shape");
  }
  if (!zeta.allFinite()) throw Error(ErrorCode::InvalidArgument, "zeta is not finite");
  const double scale = std::max(1.0, zeta.norm());
  if (!s.block_sizes.empty()) {
    std::vector<std::size_t> block;
    for (std::size_t b = 0; b < s.block_sizes.size(); ++b) block.insert(block.end(), s.block_sizes[b], b);
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j)
        if (block[i] != block[j] && std::abs(zeta(i, j)) > tol::unit * scale) {
          throw Error(ErrorCode::InvalidArgument, "zeta is not block diagonal");
        }
  }
  if (std::abs(zeta.determinant() - 1.0) > tol::det * scale) throw Error(ErrorCode::InvalidArgument, "det zeta != 1");
}

CMat v_prime_element(const MostowStructure& s, const VectorXd& p) {
  if (static_cast<std::size_t>(p.size()) != s.v_param_dim()) throw Error(ErrorCode::ShapeMismatch, "v_params length");
  const std::size_t a = s.v_p0.size(), b = s.v_n.size();
  const CMat y0 = real_combo(s.v_p0, p.data(), s.n);
  const CMat yn = complex_combo(s.v_n, p.data() + a, p.data() + a + b, s.n);
  return hermitian_exp(y0) * expm(yn);
}

MostowDecomposition mostow_decompose(const CMat& zeta, const MostowStructure& s, const MostowOptions& options) {
  require_in_group(s, zeta);
  const std::size_t n = s.n;
  const std::size_t dx = s.f0.size(), dl = s.l.size(), dv = s.v_param_dim();
  const std::size_t dim = dx + 2 * dl + dv;
  const Eigen::LLT<CMat> chol(zeta.adjoint() * zeta);
  const CMat linv = chol.matrixL().solve(CMat::Identity(n, n));

  auto pieces = [&](const VectorXd& p, CMat& x, CMat& z, CMat& v) {
    x = real_combo(s.f0, p.data(), n);
    z = complex_combo(s.l, p.data() + dx, p.data() + dx + dl, n);
    v = v_prime_element(s, p.segment(dx + 2 * dl, dv));
  };
  LeastSquares fn;
  fn.n_inputs = static_cast<int>(dim);
  fn.n_values = static_cast<int>(n * n);
  fn.f = [&](const VectorXd& p, VectorXd& r) {
    CMat x, z, v;
    pieces(p, x, z, v);
    const CMat b = expm(z) * v;
    const CMat m = b.adjoint() * hermitian_exp(2 * x) * b;
    CMat rel = linv * m * linv.adjoint();
    rel = 0.5 * (rel + rel.adjoint()).eval();
    r = hvec(hermitian_log(rel));
  };

  Rng rng(options.seed);
  std::normal_distribution<double> gauss(0.0, options.start_scale);
  const double accept = options.tol * std::max(1.0, hermitian_log(zeta.adjoint() * zeta).norm());
  MostowDecomposition best;
  bool have_best = false;
  double best_defect = std::numeric_limits<double>::infinity();
  std::vector<VectorXd> solutions;
  const std::size_t restarts = std::max<std::size_t>(1, options.max_restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    VectorXd p = VectorXd::Zero(dim);
    if (r > 0)
      for (Eigen::Index j = 0; j < p.size(); ++j) p(j) = gauss(rng);
    const double defect = minimize(fn, p, 400 * (dim + 1));
    ++best.restarts_run;
    if (!(defect <= accept)) continue;
    CMat x, z, v;
    pieces(p, x, z, v);
    best.x_norms.push_back(x.norm());
    solutions.push_back(p);
    if (defect < best_defect) {
      best_defect = defect;
      have_best = true;
      best.x = x;
      best.z = z;
      best.v = v;
      best.x_coords = p.head(dx);
      best.z_coords.resize(static_cast<Eigen::Index>(dl));
      for (std::size_t j = 0; j < dl; ++j) best.z_coords(j) = {p(dx + j), p(dx + dl + j)};
      best.v_params = p.segment(dx + 2 * dl, dv);
    }
  }
  best.restarts_converged = solutions.size();
  if (!have_best) {
    std::ostringstream os;
    os << "non-convergent: no restart out of " << restarts << " reached the tolerance";
    throw Error(ErrorCode::NonConvergent, os.str());
  }
  const auto [lo, hi] = std::minmax_element(best.x_norms.begin(), best.x_norms.end());
  best.restarts_agree = *hi - *lo <= options.agree_tol;
  if (!best.restarts_agree && s.unique) {
    std::ostringstream os;
    os << "restart disagreement: |X| ranges over [" << *lo << ", " << *hi << "]";
    throw Error(ErrorCode::RestartDisagreement, os.str());
  }
  const CMat g = hermitian_exp(best.x) * expm(best.z) * best.v;
  best.u = polar_decompose(zeta * g.inverse(), false).u;
  best.residual = (zeta - best.u * g).norm();
  return best;
}

PhiResult exhaustion_phi_detail(const CMat& zeta, const MostowStructure& s, const PhiOptions& options) {
  require_in_group(s, zeta);
  const std::size_t dv = s.v_param_dim();
  LeastSquares fn;
  fn.n_inputs = static_cast<int>(dv);
  fn.n_values = static_cast<int>(s.n * s.n);
  fn.f = [&](const VectorXd& p, VectorXd& r) {
    const CMat w = zeta * v_prime_element(s, p).inverse();
    CMat ww = w.adjoint() * w;
    ww = 0.5 * (ww + ww.adjoint()).eval();
    r = hvec(hermitian_log(ww));
  };
  PhiResult out;
  out.v_params = VectorXd::Zero(dv);
  double best = minimize(fn, out.v_params, options.max_evaluations);
  if (options.warm_start) {
    if (static_cast<std::size_t>(options.warm_start->size()) != dv) {
      throw Error(ErrorCode::ShapeMismatch, "warm start has the wrong length");
    }
    VectorXd p = *options.warm_start;
    const double d = minimize(fn, p, options.max_evaluations);
    if (d < best) {
      best = d;
      out.v_params = p;
    }
  }
  out.value = 0.25 * best * best;
  if (options.cross_check) {
    if (!s.unique || !s.l.empty()) {
      throw Error(ErrorCode::InvalidArgument, "cross-check needs a unique decomposition with l = 0");
    }
    const MostowDecomposition d = mostow_decompose(zeta, s);
    const double x2 = d.x.squaredNorm();
    out.mostow_x_norm_sq = x2;
    if (std::abs(out.value - x2) > options.cross_tol * std::max(1.0, x2)) {
      std::ostringstream os;
      os << "cross-check divergence: phi = " << out.value << " but |X|^2 = " << x2;
      throw Error(ErrorCode::CrossCheckDivergence, os.str());
    }
  }
  return out;
}

double exhaustion_phi(const CMat& zeta, const MostowStructure& s, const PhiOptions& options) {
  return exhaustion_phi_detail(zeta, s, options).value;
}

ProbeResult phi_levi_probe(const CMat& zeta, const MostowStructure& s, const std::vector<CMat>& directions,
                           const ProbeOptions& options) {
  if (!(options.step > 0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const PhiResult base = exhaustion_phi_detail(zeta, s);
  if (!(base.value > 1e-12)) throw Error(ErrorCode::InvalidArgument, "phi(zeta) is not positive");
  ProbeResult out;
  out.phi = base.value;
  out.step = options.step;
  out.gap = options.gap;
  const double h = options.step;
  // Five evaluations per Laplacian, each off by phi_accuracy * phi at worst, and
  // the polarization sums four Laplacians.
  out.noise_floor = 16 * options.phi_accuracy * std::max(1.0, base.value) / (h * h);
  if (out.noise_floor >= options.gap) {
    std::ostringstream os;
    os << "step too small / noise-dominated: noise floor " << out.noise_floor << " >= gap " << options.gap;
    throw Error(ErrorCode::NoiseDominated, os.str());
  }
  PhiOptions warm;
  warm.warm_start = base.v_params;
  auto f = [&](const CMat& a) { return exhaustion_phi(zeta * expm(a), s, warm); };
  auto laplacian = [&](const CMat& a) {
    if (a.norm() == 0) return 0.0;
    const std::complex<double> i(0, 1);
    return (f(h * a) + f(-h * a) + f(i * h * a) + f(-i * h * a) - 4 * base.value) / (h * h);
  };
  const std::size_t m = directions.size();
  out.form = CMat::Zero(m, m);
  std::vector<double> diag(m);
  for (std::size_t a = 0; a < m; ++a) diag[a] = laplacian(directions[a]);
  const std::complex<double> i(0, 1);
  for (std::size_t a = 0; a < m; ++a) {
    out.form(a, a) = diag[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      // Polarization: H(A, B) = 1/4 sum_k i^k L(A + i^k B); the diagonal terms
      // of the four Laplacians cancel, so only the mixed parts are evaluated.
      const double p0 = laplacian(directions[a] + directions[b]);
      const double p2 = laplacian(directions[a] - directions[b]);
      const double p1 = laplacian(directions[a] + i * directions[b]);
      const double p3 = laplacian(directions[a] - i * directions[b]);
      const std::complex<double> hab = 0.25 * (p0 - p2 + i * p1 - i * p3);
      out.form(a, b) = hab;
      out.form(b, a) = std::conj(hab);
    }
  }
  const Eigen::SelfAdjointEigenSolver<CMat> es(out.form, Eigen::EigenvaluesOnly);
  out.eigenvalues = es.eigenvalues();
  for (Eigen::Index j = 0; j < out.eigenvalues.size(); ++j) {
    const double lam = out.eigenvalues(j);
    if (lam > options.gap) {
      ++out.positive;
    } else if (lam < -options.gap) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

CMat random_group_element(const MostowStructure& s, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  CMat a = CMat::Zero(s.n, s.n);
  for (const auto& b : s.k) a += std::complex<double>(g(rng), g(rng)) * b;
  return expm(a);
}

CMat random_compact_element(const MostowStructure& s, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  CMat a = CMat::Zero(s.n, s.n);
  for (const auto& b : s.k0) a += g(rng) * b;
  return expm(a);
}

CMat random_fiber_element(const MostowStructure& s, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  CMat a = CMat::Zero(s.n, s.n);
  for (const auto& b : s.f0) a += g(rng) * b;
  return a;
}

VectorXd random_v_params(const MostowStructure& s, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  VectorXd p(static_cast<Eigen::Index>(s.v_param_dim()));
  for (Eigen::Index j = 0; j < p.size(); ++j) p(j) = g(rng);
  return p;
}

}  // namespace crmostow
