#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "crmostow/exact.hpp"

namespace crmostow {

using CMat = Eigen::MatrixXcd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double unit = 1e-10;
inline constexpr double det = 1e-8;
inline constexpr double xcheck = 1e-8;
inline constexpr double quad = 1e-10;
inline constexpr double max_condition = 1e12;
}  // namespace tol

CMat to_numeric(const ExactMatrix& x);
/// Exact rational image of a double matrix (every double is a dyadic rational).
ExactMatrix to_exact(const CMat& a);

/// exp(a) by scaling and squaring with a degree 3..13 Pade approximant.
CMat expm(const CMat& a);
/// exp(h) for Hermitian h via its eigendecomposition.
CMat hermitian_exp(const CMat& h);
/// log(p) for Hermitian positive definite p; throws NotPositiveDefinite.
CMat hermitian_log(const CMat& p);

/// Frobenius inner product Re tr(a b*).
double frob_inner(const CMat& a, const CMat& b);
double hermitian_defect(const CMat& a);

/// Positive definite Hermitian matrix of determinant one.
class SpdPoint {
 public:
  /// Throws NotPositiveDefinite when p is not Hermitian positive definite of
  /// determinant one within tolerance.
  explicit SpdPoint(CMat p);
  static SpdPoint identity(std::size_t n) { return SpdPoint(CMat::Identity(n, n)); }

  const CMat& matrix() const { return p_; }
  std::size_t n() const { return static_cast<std::size_t>(p_.rows()); }
  /// z* p z.
  SpdPoint congruence(const CMat& z) const;

 private:
  CMat p_;
};

/// (sum log^2 lambda_i(p^-1 q))^(1/2); throws NotPositiveDefinite on condition numbers above 1e12.
double dist(const SpdPoint& p, const SpdPoint& q);
/// Squared distance between Hermitian positive definite matrices (no det constraint).
double dist_sq_unnormalized(const CMat& p, const CMat& q);
/// g_p(a, b) = Re tr(p^-1 a p^-1 b).
double riemannian_inner(const CMat& p, const CMat& a, const CMat& b);

/// theta_z(t) = z* exp(tH) + exp(tH) z.
CMat theta(const CMat& h, const CMat& z, double t);

/// J(t) = theta_z(t) + t theta_t(t) along gamma(t) = exp(tH).
struct JacobiFieldSpec {
  CMat h;  // Hermitian, traceless
  CMat z;  // traceless
  CMat t;  // Hermitian, commutes with h
  /// Throws InvalidArgument when the shape or commutation constraints fail.
  void validate() const;
};

struct JacobiValue {
  CMat j;
  CMat jdot;
};

JacobiValue jacobi_eval(const JacobiFieldSpec& spec, double t);
/// Second covariant derivative, 1/4 theta_{ad_H^2 z}(t).
CMat jacobi_second(const JacobiFieldSpec& spec, double t);
/// |J(t)|^2 by the direct trace formula, cross-checked against the block
/// formula in the eigenbasis of H; throws CrossCheckDivergence.
double jacobi_norm_sq(const JacobiFieldSpec& spec, double t);
double jacobi_norm_sq_direct(const JacobiFieldSpec& spec, double t);
double jacobi_norm_sq_blocks(const JacobiFieldSpec& spec, double t);
/// int_0^1 (1-t)(|Jdot|^2 + (J, Jddot)) dt; throws QuadratureFailure.
double jacobi_energy(const JacobiFieldSpec& spec);

/// x = [h, y] + 2 t with y anti-Hermitian and t in the centralizer of h.
struct TangentSplit {
  CMat y;
  CMat t;
};
TangentSplit split_tangent(const CMat& h, const CMat& x);
/// Spec of theta_z - J_x, where J_x = theta_y + t theta_t is the field with J_x(0) = 0
/// and J_x(1) = d exp_h(x).
JacobiFieldSpec difference_field(const CMat& h, const CMat& z, const CMat& x);

struct PolarDecomposition {
  CMat u;  // unitary
  CMat x;  // Hermitian
};
/// z = u exp(x); throws InvalidArgument for singular z or |det z| != 1 under det_one.
PolarDecomposition polar_decompose(const CMat& z, bool det_one = true);

struct MinorInequality {
  double lhs = 0;
  double rhs = 0;
  bool strict = false;
};
/// lhs = sum log^2 of eigenvalues, rhs = sum log^2 of ratios of leading principal minors.
MinorInequality minor_log_inequality(const SpdPoint& h);

struct CounterexampleOptions {
  std::uint64_t seed = 0;
  double residual_tol = 1e-9;
  std::size_t max_doublings = 60;
};

struct Counterexample {
  double lambda1 = 0;
  double lambda2 = 0;
  double a = 0;
  double b = 0;
  double c = 0;
  double d = 0;
  CMat h;
  CMat z;
  CMat y;
  double equation_residual = 0;
  double theta_one_norm = 0;   // |theta_{z+y}(1)|
  double theta_zero_norm = 0;  // |theta_{z+y}(0)|
  double trace_pairing = 0;    // |tr([h, y] z)|
};

/// Nilpotent z and anti-Hermitian y in sl_3 with theta_{z+y}(1) = 0 while
/// theta_{z+y}(0) != 0 and [h, y] trace-orthogonal to z; throws NoRootFound.
Counterexample counterexample_search(const CounterexampleOptions& options = {});

}  // namespace crmostow
