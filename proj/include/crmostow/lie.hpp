#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crmostow/exact.hpp"

namespace crmostow {

enum class AmbientKind { SpecialLinear, BlockSpecialLinear };

/// k = sl_n(C) or the block-diagonal s(gl_a x gl_b x ...) inside sl_n(C),
/// with conjugation sigma(X) = -X* and trace form tr(XY).
class AmbientAlgebra {
 public:
  static AmbientAlgebra sl(std::size_t n);
  static AmbientAlgebra blocks(std::vector<std::size_t> sizes);

  std::size_t n() const { return n_; }
  AmbientKind kind() const { return kind_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }
  const Subspace& space() const { return *space_; }
  std::size_t dim() const { return space_->dim(); }
  bool contains(const ExactMatrix& x) const;
  /// Block index of each row/column.
  std::vector<std::size_t> block_of() const;

  static ExactMatrix sigma(const ExactMatrix& x) { return -x.adjoint(); }
  static ExactScalar beta(const ExactMatrix& x, const ExactMatrix& y) { return (x * y).trace(); }

  /// k0 = {X in k : X* = -X} as a real subspace.
  RealSubspace compact_form() const;
  /// p0 = {X in k : X* = X} as a real subspace.
  RealSubspace hermitian_form() const;

  std::string describe() const;

  friend bool operator==(const AmbientAlgebra& a, const AmbientAlgebra& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  AmbientAlgebra(std::size_t n, AmbientKind kind, std::vector<std::size_t> blocks);
  std::size_t n_ = 0;
  AmbientKind kind_ = AmbientKind::SpecialLinear;
  std::vector<std::size_t> blocks_;
  std::shared_ptr<const Subspace> space_;
};

enum class ClosureMode { RequireClosed, CloseUp };

/// A bracket-closed subspace of k together with lazily cached structure.
class Subalgebra {
 public:
  /// Verifies bracket closure and containment in k.
  Subalgebra(AmbientAlgebra ambient, Subspace space);
  /// Skips verification; for spaces closed by construction (normalizers, closures).
  static Subalgebra trusted(AmbientAlgebra ambient, Subspace space);

  const AmbientAlgebra& ambient() const { return data_->ambient; }
  const Subspace& space() const { return data_->space; }
  std::size_t dim() const { return data_->space.dim(); }
  std::vector<ExactMatrix> basis() const { return data_->space.basis(); }

  const Subspace& derived() const;
  const Subspace& radical() const;
  const Subspace& nr() const;
  const Subspace& levi() const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) {
    return a.ambient() == b.ambient() && a.space() == b.space();
  }
  friend bool operator!=(const Subalgebra& a, const Subalgebra& b) { return !(a == b); }

 private:
  struct Data {
    Data(AmbientAlgebra a, Subspace s) : ambient(std::move(a)), space(std::move(s)) {}
    AmbientAlgebra ambient;
    Subspace space;
    std::once_flag derived_once, radical_once, nr_once, levi_once;
    std::optional<Subspace> derived, radical, nr, levi;
  };
  Subalgebra() = default;
  std::shared_ptr<Data> data_;
};

/// Throws NotClosed naming the first bracket that leaves the span.
void require_closed(const Subspace& s);
/// Smallest subalgebra containing s.
Subspace lie_closure(const Subspace& s);

Subalgebra make_subalgebra(const AmbientAlgebra& ambient, const std::vector<ExactMatrix>& generators,
                           ClosureMode mode);
Subalgebra make_subalgebra(const AmbientAlgebra& ambient, const Subspace& space, ClosureMode mode);

/// Radical, with the semisimplicity of the quotient checked via its Killing form.
Subspace radical(const Subalgebra& v);
Subspace nr(const Subalgebra& v);
Subalgebra conj(const Subalgebra& v);
Subalgebra levi_intersection(const Subalgebra& v);

struct NReductiveVerdict {
  bool value = false;
  Subspace nr;
  Subspace levi;
  std::string reason;
};
NReductiveVerdict is_n_reductive(const Subalgebra& v);

/// N_k(s) = {Z in k : [Z, s] in s}.
Subalgebra normalizer(const AmbientAlgebra& ambient, const Subspace& s);

enum class JordanKind { Semisimple, Nilpotent, Mixed };
JordanKind jordan_flags(const ExactMatrix& x);
std::string to_string(JordanKind k);
bool is_nilpotent(const ExactMatrix& x);
/// Exact Jordan-Chevalley parts (semisimple, nilpotent).
std::pair<ExactMatrix, ExactMatrix> jordan_decomposition(const ExactMatrix& x);
/// Spot check of splittability on the basis and on sums of basis pairs; throws NotSplittable.
void check_splittable(const Subalgebra& v);

/// sigma applied to every element of a subspace.
Subspace sigma_space(const Subspace& s);

}  // namespace crmostow
