#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crmostow/lie.hpp"

namespace crmostow {

/// Subspaces of C^n (stored as n x 1 column spaces).
using Flag = std::vector<Subspace>;

struct ParabolicTest {
  bool parabolic = false;
  /// Kernel series of nr(q): 0 = F_0 < F_1 < ... < F_m = C^n.
  Flag flag;
  /// Stabilizer of the flag inside k.
  Subspace stabilizer;
};

ParabolicTest is_parabolic(const Subalgebra& q);
/// {Z in k : Z F_j in F_j for all j}.
Subspace flag_stabilizer(const AmbientAlgebra& ambient, const Flag& flag);

class ParabolicSubalgebra {
 public:
  /// Throws MembershipFailed when q is not parabolic.
  explicit ParabolicSubalgebra(Subalgebra q);

  const Subalgebra& q() const { return q_; }
  /// L(q) = q cap sigma(q).
  const Subspace& levi() const { return q_.levi(); }
  const Subspace& nilradical() const { return q_.nr(); }
  const Flag& invariant_flag() const { return flag_; }
  std::size_t dim() const { return q_.dim(); }
  /// q = L(q) + n(q) as a direct sum.
  bool sigma_split() const;

 private:
  Subalgebra q_;
  Flag flag_;
};

struct RegularizationTrace {
  std::vector<Subalgebra> chain;
  Subalgebra fixed_point;
  std::size_t steps = 0;
};

RegularizationTrace parabolic_regularization(const Subalgebra& v);

struct P0Check {
  bool member = false;
  std::string reason;
};
/// q parabolic, v in q, nr(v) in n(q), q = L(q) + n(q).
P0Check p0_membership(const Subalgebra& v, const ParabolicSubalgebra& q);

ParabolicSubalgebra q_min(const Subalgebra& v);

struct WeightSpace {
  RationalVec weight;
  Subspace space;
};

/// Decomposition of k under the Hermitian part of the center of L(q); the
/// zero weight space is returned first.
std::vector<WeightSpace> center_weights(const ParabolicSubalgebra& q);

ParabolicSubalgebra q_max(const Subalgebra& v, const ParabolicSubalgebra& start);
ParabolicSubalgebra combine_parabolics(const ParabolicSubalgebra& q1, const ParabolicSubalgebra& q2);

struct HorocyclicVerdict {
  bool value = false;
  std::optional<ParabolicSubalgebra> witness;
  std::string reason;
};
HorocyclicVerdict is_horocyclic(const AmbientAlgebra& ambient, const Subspace& s);

struct WResult {
  Subalgebra w;
  /// Number of refinement rounds of the descending recursion.
  std::size_t rounds = 0;
};
/// Largest subalgebra w with v in w in v + sigma(v).
WResult compute_w_detail(const Subalgebra& v);
Subalgebra compute_w(const Subalgebra& v);

struct HnrVerdict {
  Subalgebra w;
  Subspace w_n;
  bool hnr = false;
  bool strict_hnr = false;
  std::optional<ParabolicSubalgebra> witness_parabolic;
};
HnrVerdict hnr_verdict(const Subalgebra& v);

Subalgebra strengthen(const Subalgebra& v, const ParabolicSubalgebra& q);

}  // namespace crmostow
