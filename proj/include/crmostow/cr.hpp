#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "crmostow/parabolic.hpp"

namespace crmostow {

struct CRType {
  std::size_t cr_dim = 0;       // dim_C nr(v)
  std::size_t cr_codim = 0;     // dim_R M0 - 2 cr_dim
  std::size_t dim_M_minus = 0;  // dim_C k - dim_C v
  std::size_t dim_M0 = 0;       // dim_R k0 - dim_R (v cap k0)
};

CRType cr_type(const Subalgebra& v);

struct FiberData {
  /// Hermitian part of the fiber: p0 cap (v + n(q))^perp.
  RealSubspace f0;
  /// Complement of nr(v) in nr(v) + n(q), Hermitian-orthogonal.
  Subspace l;
  ParabolicSubalgebra q_used;
};

/// The parabolic used for fiber data by default: q_max(w) grown from q_min(w).
ParabolicSubalgebra fiber_parabolic(const Subalgebra& v);
/// Same, for an already computed w = compute_w(v).
ParabolicSubalgebra fiber_parabolic_of_w(const Subalgebra& w);
FiberData fiber_data(const Subalgebra& v, const ParabolicSubalgebra& q);
/// Skips recomputing w; w must equal compute_w(v).
FiberData fiber_data(const Subalgebra& v, const Subalgebra& w, const ParabolicSubalgebra& q);
FiberData fiber_data(const Subalgebra& v);

struct LeviSampling {
  std::size_t grid_density = 64;
  std::size_t refinement_steps = 8;
  std::uint64_t seed = 0;
};

struct LeviSignature {
  RationalVec xi;  // coordinates in the characteristic basis
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;
};

struct LeviReport {
  std::vector<ExactMatrix> nr_basis;
  /// Complement of v + sigma(v) in k (Hermitian-orthogonal, sigma-stable).
  Subspace complement;
  /// vector_form[a][b] = projection of [Z_a, sigma(Z_b)] onto the complement.
  std::vector<std::vector<ExactMatrix>> vector_form;
  /// Hermitian H representing xi(Y) = tr(H Y) on k / (v + sigma(v)).
  std::vector<ExactMatrix> characteristic_basis;
  /// scalar_forms[j] is the Hermitian matrix of the Levi form for characteristic_basis[j].
  std::vector<ExactMatrix> scalar_forms;
  std::vector<LeviSignature> sampled_signatures;
  std::size_t witt_lower_bound = 0;
  LeviSampling sampling;
};

/// Throws EmptyCharacteristicSpace when v + sigma(v) = k.
LeviReport levi_report(const Subalgebra& v, const LeviSampling& sampling = {});
/// Exact signature of the Levi form at xi.
LeviSignature levi_signature(const LeviReport& report, const RationalVec& xi);
ExactMatrix scalar_levi_form(const LeviReport& report, const RationalVec& xi);

struct OrbitData {
  RealSubspace v_X;
  std::size_t dim_M_X = 0;
  /// Ad(exp X)(v); exact only when X = 0.
  bool exact = false;
  std::optional<Subalgebra> conjugated;
  std::vector<Eigen::MatrixXcd> conjugated_numeric;
};

/// Throws InvalidArgument ("X not in f0") when X is outside f0.
OrbitData orbit_data(const Subalgebra& v, const FiberData& fiber, const ExactMatrix& x);

struct CohomologyRanges {
  std::size_t r = 0;
  std::size_t nu = 0;
  std::size_t hd = 0;
  /// Degrees j with j < r - hd.
  std::vector<std::size_t> finite_iso_low;
  /// Degrees j with nu - r < j <= nu.
  std::vector<std::size_t> finite_iso_high;
};

CohomologyRanges cohomology_ranges(std::size_t r, std::size_t nu, std::size_t hd = 0);

}  // namespace crmostow
