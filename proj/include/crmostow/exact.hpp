#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "crmostow/error.hpp"

namespace crmostow {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Gaussian rational re + i*im.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return ExactScalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  ExactScalar conj() const { return ExactScalar(re_, -im_); }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
  /// *this += x * y without a temporary scalar.
  void add_product(const ExactScalar& x, const ExactScalar& y);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) {
    a += b;
    return a;
  }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) {
    a -= b;
    return a;
  }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) {
    a *= b;
    return a;
  }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) {
    a /= b;
    return a;
  }
  friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar(-a.re_, -a.im_); }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

using ExactVec = std::vector<ExactScalar>;
using RationalVec = std::vector<Rational>;

/// Dense matrix over Q(i); entries are fixed once constructed.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, ExactVec entries);

  static ExactMatrix identity(std::size_t n);
  /// Matrix unit E_ij (0-based indices).
  static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static ExactMatrix diagonal(const ExactVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const ExactVec& flat() const { return e_; }

  bool is_zero() const;
  ExactScalar trace() const;
  ExactMatrix adjoint() const;
  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  bool is_hermitian() const { return *this == adjoint(); }

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    a += b;
    return a;
  }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    a -= b;
    return a;
  }
  friend ExactMatrix operator-(ExactMatrix a) {
    a *= ExactScalar(-1);
    return a;
  }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) {
    a *= s;
    return a;
  }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) {
    a *= s;
    return a;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ExactVec e_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y);
/// tr(x y) without forming the product.
ExactScalar trace_product(const ExactMatrix& x, const ExactMatrix& y);
/// Inner product tr(x y*) (Hermitian, positive definite).
ExactScalar hermitian_product(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix power(const ExactMatrix& x, std::size_t k);
/// Throws InvalidArgument when singular.
ExactMatrix inverse(const ExactMatrix& x);

/// Complex linear subspace of the r x c matrices over Q(i), kept in canonical
/// reduced row echelon form of the row-major flattening.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static Subspace zero(std::size_t rows, std::size_t cols) { return Subspace(rows, cols); }
  static Subspace full(std::size_t rows, std::size_t cols);
  /// Span of flat vectors; the result is canonical.
  static Subspace span(std::size_t rows, std::size_t cols, const std::vector<ExactVec>& vecs);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t ambient_dim() const { return rows_ * cols_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }

  const std::vector<ExactVec>& flat_basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  ExactMatrix element(std::size_t k) const;
  std::vector<ExactMatrix> basis() const;

  /// x minus its reduction against the pivots; zero iff x lies in the span.
  ExactVec residual(const ExactVec& x) const;
  /// Coordinates of x w.r.t. the canonical basis (read off at the pivots).
  ExactVec coordinates(const ExactVec& x) const;
  ExactMatrix combine(const ExactVec& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactVec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace echelonize(const std::vector<ExactMatrix>& vectors);
Subspace echelonize(std::size_t rows, std::size_t cols, const std::vector<ExactMatrix>& vectors);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const ExactMatrix& x);
bool contains(const Subspace& a, const Subspace& b);
Subspace bracket_space(const Subspace& a, const Subspace& b);
/// [a, a], using each unordered pair once.
Subspace derived_space(const Subspace& a);
/// Image of a subspace under a C-linear or conjugate-linear entrywise map.
Subspace map_space(const Subspace& a, ExactMatrix (*f)(const ExactMatrix&));
/// {x : tr(x y*) = 0 for all y in a} inside the ambient matrix space.
Subspace hermitian_orthogonal(const Subspace& a);
/// {x in inside : tr(x y*) = 0 for all y in a}.
Subspace hermitian_complement_in(const Subspace& inside, const Subspace& a);
/// Orthogonal projection onto a w.r.t. tr(x y*).
ExactMatrix orthogonal_projection(const Subspace& a, const ExactMatrix& x);

/// Real linear subspace of r x c complex matrices, stored as a rational space
/// of twice the dimension (interleaved real and imaginary parts).
class RealSubspace {
 public:
  RealSubspace() = default;
  RealSubspace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RealSubspace span(std::size_t rows, std::size_t cols, const std::vector<ExactMatrix>& gens);
  /// Real subspace underlying a complex subspace (dimension doubles).
  static RealSubspace from_complex(const Subspace& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<RationalVec>& flat_basis() const { return basis_; }
  ExactMatrix element(std::size_t k) const;
  std::vector<ExactMatrix> basis() const;
  bool contains(const ExactMatrix& x) const;
  RationalVec coordinates(const ExactMatrix& x) const;
  ExactMatrix combine(const RationalVec& coeffs) const;
  /// Image under multiplication by i.
  RealSubspace complex_structure() const;

  friend bool operator==(const RealSubspace& a, const RealSubspace& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.basis_ == b.basis_;
  }

 private:
  static RationalVec realify(const ExactMatrix& x);
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalVec> basis_;
  std::vector<std::size_t> pivots_;
};

RealSubspace real_sum(const RealSubspace& a, const RealSubspace& b);
RealSubspace real_intersect(const RealSubspace& a, const RealSubspace& b);
/// Hermitian elements of a sigma-stable complex subspace.
RealSubspace hermitian_part(const Subspace& s);
/// Anti-Hermitian elements of a sigma-stable complex subspace.
RealSubspace antihermitian_part(const Subspace& s);

}  // namespace crmostow
