#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crmostow/cr.hpp"
#include "crmostow/random.hpp"
#include "crmostow/symspace.hpp"

namespace crmostow {

/// Floating-point bases for the factors of K = K0 exp(f0) exp(l) V'.
/// Real bases are Frobenius-orthonormal; complex bases are orthonormal for Re tr(a b*)
/// after realification, so coordinates are plain least-squares coordinates.
struct MostowStructure {
  std::size_t n = 0;
  /// Empty for sl_n; otherwise the diagonal block sizes of k.
  std::vector<std::size_t> block_sizes;
  std::vector<CMat> k;     // complex basis of k
  std::vector<CMat> k0;    // anti-Hermitian part of k
  std::vector<CMat> f0;    // Hermitian fiber directions
  std::vector<CMat> l;     // complex
  std::vector<CMat> v_n;   // complex basis of nr(v)
  std::vector<CMat> v_p0;  // Hermitian elements of v
  /// Complex complement of L(v) in L(q) for q = N_k(nr v), the Q- directions.
  std::vector<CMat> levi_q_minus_levi_v;
  /// True when HNR holds, so the decomposition is unique and restarts must agree.
  bool unique = false;
  /// "hnr" for the fiber built from w, "naive" for q_n = 0.
  std::string fiber;

  std::size_t v_param_dim() const { return v_p0.size() + 2 * v_n.size(); }
};

/// Fiber from the HNR machinery: q = q_max(w) grown from q_min(w). Throws
/// InvalidArgument when v is not n-reductive.
MostowStructure mostow_structure(const Subalgebra& v);
/// Fiber with q_n = 0: f0 = p0 cap (v + sigma v)^perp and l = 0. Useful outside
/// HNR, where uniqueness can fail.
MostowStructure naive_mostow_structure(const Subalgebra& v);

/// Throws InvalidArgument unless zeta is in K (block pattern, det 1) within tolerance.
void require_in_group(const MostowStructure& s, const CMat& zeta);

/// exp(Y0) exp(Yn) for v_params = (Y0 coordinates, Re Yn coordinates, Im Yn coordinates).
CMat v_prime_element(const MostowStructure& s, const Eigen::VectorXd& v_params);

struct MostowOptions {
  /// Bound on |log| of the defect at an accepted restart.
  double tol = 1e-11;
  std::size_t max_restarts = 8;
  std::uint64_t seed = 0;
  /// Spread of |X| among converged restarts still counted as agreement.
  double agree_tol = 1e-6;
  double start_scale = 1.0;
};

struct MostowDecomposition {
  CMat u;
  CMat x;
  CMat z;
  CMat v;
  Eigen::VectorXd x_coords;
  Eigen::VectorXcd z_coords;
  Eigen::VectorXd v_params;
  /// |zeta - u exp(X) exp(Z) v|_F.
  double residual = 0;
  bool restarts_agree = true;
  std::size_t restarts_run = 0;
  std::size_t restarts_converged = 0;
  /// |X| of every converged restart, in restart order.
  std::vector<double> x_norms;
};

/// zeta = u exp(X) exp(Z) v with u in K0, X in f0, Z in l, v in V'. Throws
/// NonConvergent when no restart converges, RestartDisagreement when restarts
/// disagree on a structure with unique = true.
MostowDecomposition mostow_decompose(const CMat& zeta, const MostowStructure& s, const MostowOptions& options = {});

struct PhiOptions {
  /// Start for the V' coordinates; the identity is always tried as well.
  std::optional<Eigen::VectorXd> warm_start;
  /// Compare with |X|^2 from mostow_decompose (requires unique and l = 0).
  bool cross_check = false;
  double cross_tol = 1e-6;
  std::size_t max_evaluations = 4000;
};

struct PhiResult {
  double value = 0;
  Eigen::VectorXd v_params;
  std::optional<double> mostow_x_norm_sq;
};

/// phi(zeta) = 1/4 min over v in V' of dist^2(zeta* zeta, v* v); with this
/// normalization phi(u exp(X)) = |X|^2 on the fiber.
PhiResult exhaustion_phi_detail(const CMat& zeta, const MostowStructure& s, const PhiOptions& options = {});
double exhaustion_phi(const CMat& zeta, const MostowStructure& s, const PhiOptions& options = {});

struct ProbeOptions {
  double step = 1e-3;
  double gap = 1e-4;
  /// Assumed relative accuracy of a single phi evaluation.
  double phi_accuracy = 1e-13;
};

struct ProbeResult {
  /// Hermitian form H(A_a, A_b) estimated by second differences.
  CMat form;
  Eigen::VectorXd eigenvalues;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  double phi = 0;
  double step = 0;
  double gap = 0;
  double noise_floor = 0;
};

/// Complex Hessian of w -> phi(zeta exp(w A)) over the span of the directions,
/// by second differences at step h. Throws InvalidArgument when phi(zeta) is
/// not positive and NoiseDominated when the noise floor reaches the gap.
ProbeResult phi_levi_probe(const CMat& zeta, const MostowStructure& s, const std::vector<CMat>& directions,
                           const ProbeOptions& options = {});

/// exp of a random element of k with complex Gaussian coefficients of the given scale.
CMat random_group_element(const MostowStructure& s, Rng& rng, double scale = 0.5);
CMat random_compact_element(const MostowStructure& s, Rng& rng, double scale = 1.5);
CMat random_fiber_element(const MostowStructure& s, Rng& rng, double scale = 0.5);
Eigen::VectorXd random_v_params(const MostowStructure& s, Rng& rng, double scale = 0.5);

}  // namespace crmostow
