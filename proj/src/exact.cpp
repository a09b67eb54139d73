#include "crmostow/exact.hpp"

#include <sstream>

#include "linalg.hpp"

namespace crmostow {

using detail::Echelon;

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- ExactScalar

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (is_real()) return ExactScalar(1 / re_);
  Rational n = norm_sq();
  return ExactScalar(re_ / n, -im_ / n);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void ExactScalar::add_product(const ExactScalar& x, const ExactScalar& y) {
  thread_local Rational t;
  mpq_mul(t.get_mpq_t(), x.re_.get_mpq_t(), y.re_.get_mpq_t());
  re_ += t;
  if (x.is_real() && y.is_real()) return;
  mpq_mul(t.get_mpq_t(), x.im_.get_mpq_t(), y.im_.get_mpq_t());
  re_ -= t;
  mpq_mul(t.get_mpq_t(), x.re_.get_mpq_t(), y.im_.get_mpq_t());
  im_ += t;
  mpq_mul(t.get_mpq_t(), x.im_.get_mpq_t(), y.re_.get_mpq_t());
  im_ += t;
}

std::string ExactScalar::str() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  s += sgn(im_) > 0 ? "+" : "";
  return s + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, ExactVec entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactVec e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return ExactMatrix(n, n, std::move(e));
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ExactVec e(n * n);
  e[i * n + j] = 1;
  return ExactMatrix(n, n, std::move(e));
}

ExactMatrix ExactMatrix::diagonal(const ExactVec& d) {
  const std::size_t n = d.size();
  ExactVec e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return ExactMatrix(n, n, std::move(e));
}

bool ExactMatrix::is_zero() const { return detail::all_zero(e_); }

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += e_[i * cols_ + i];
  return t;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactVec e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = e_[i * cols_ + j].conj();
  return ExactMatrix(cols_, rows_, std::move(e));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactVec e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = e_[i * cols_ + j];
  return ExactMatrix(cols_, rows_, std::move(e));
}

ExactMatrix ExactMatrix::conj() const {
  ExactVec e(e_.size());
  for (std::size_t k = 0; k < e_.size(); ++k) e[k] = e_[k].conj();
  return ExactMatrix(rows_, cols_, std::move(e));
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : e_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  ExactVec e(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a.e_[i * a.cols_ + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactScalar& y = b.e_[k * b.cols_ + j];
        if (y.is_zero()) continue;
        e[i * b.cols_ + j].add_product(x, y);
      }
    }
  }
  return ExactMatrix(a.rows_, b.cols_, std::move(e));
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << "]";
}

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) {
  if (!x.square() || x.rows() != y.rows() || !y.square()) {
    throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  }
  return x * y - y * x;
}

ExactScalar trace_product(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows() != y.cols() || x.cols() != y.rows()) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  ExactScalar s;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const auto& a = x(i, k);
      if (a.is_zero()) continue;
      const auto& b = y(k, i);
      if (!b.is_zero()) s.add_product(a, b);
    }
  }
  return s;
}

ExactScalar hermitian_product(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  ExactScalar s;
  for (std::size_t k = 0; k < x.flat().size(); ++k) {
    const auto& a = x.flat()[k];
    const auto& b = y.flat()[k];
    if (!a.is_zero() && !b.is_zero()) s += a * b.conj();
  }
  return s;
}

ExactMatrix power(const ExactMatrix& x, std::size_t k) {
  ExactMatrix r = ExactMatrix::identity(x.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * x;
  return r;
}

ExactMatrix inverse(const ExactMatrix& x) {
  if (!x.square()) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
  const std::size_t n = x.rows();
  ExactVec e(n * n);
  {
    std::vector<ExactVec> rows;
    std::vector<ExactVec> tags;
    for (std::size_t i = 0; i < n; ++i) {
      rows.emplace_back(x.flat().begin() + static_cast<long>(i * n), x.flat().begin() + static_cast<long>((i + 1) * n));
      ExactVec tag(n);
      tag[i] = 1;
      tags.push_back(std::move(tag));
    }
    // Gauss-Jordan with explicit pivot search keeps the tag bookkeeping simple.
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && rows[piv][c].is_zero()) ++piv;
      if (piv == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
      std::swap(rows[piv], rows[c]);
      std::swap(tags[piv], tags[c]);
      ExactScalar f = rows[c][c].inverse();
      detail::scale(rows[c], f);
      detail::scale(tags[c], f);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || rows[r][c].is_zero()) continue;
        ExactScalar g = rows[r][c];
        detail::axpy_sub(rows[r], g, rows[c]);
        detail::axpy_sub(tags[r], g, tags[c]);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] = tags[i][j];
  }
  return ExactMatrix(n, n, std::move(e));
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t rows, std::size_t cols) {
  std::vector<ExactVec> vecs;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    ExactVec v(rows * cols);
    v[k] = 1;
    vecs.push_back(std::move(v));
  }
  return span(rows, cols, vecs);
}

Subspace Subspace::span(std::size_t rows, std::size_t cols, const std::vector<ExactVec>& vecs) {
  Echelon<ExactScalar> ech(rows * cols);
  for (const auto& v : vecs) {
    if (v.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
    if (ech.rank() == rows * cols) break;
    if (!detail::all_zero(v)) ech.insert(v);
  }
  Subspace s(rows, cols);
  auto [b, p] = ech.sorted();
  s.basis_ = std::move(b);
  s.pivots_ = std::move(p);
  return s;
}

ExactMatrix Subspace::element(std::size_t k) const { return ExactMatrix(rows_, cols_, basis_.at(k)); }

std::vector<ExactMatrix> Subspace::basis() const {
  std::vector<ExactMatrix> out;
  out.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) out.push_back(element(k));
  return out;
}

ExactVec Subspace::residual(const ExactVec& x) const {
  ExactVec r = x;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p].is_zero()) continue;
    ExactScalar f = r[p];
    detail::axpy_sub(r, f, basis_[k]);
  }
  return r;
}

ExactVec Subspace::coordinates(const ExactVec& x) const {
  ExactVec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = x[pivots_[k]];
  return c;
}

ExactMatrix Subspace::combine(const ExactVec& coeffs) const {
  ExactVec e(rows_ * cols_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    detail::axpy_sub(e, -coeffs[k], basis_[k]);
  }
  return ExactMatrix(rows_, cols_, std::move(e));
}

Subspace echelonize(std::size_t rows, std::size_t cols, const std::vector<ExactMatrix>& vectors) {
  std::vector<ExactVec> flat;
  flat.reserve(vectors.size());
  for (const auto& m : vectors) {
    if (m.rows() != rows || m.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
    flat.push_back(m.flat());
  }
  return Subspace::span(rows, cols, flat);
}

Subspace echelonize(const std::vector<ExactMatrix>& vectors) {
  if (vectors.empty()) return Subspace(0, 0);
  return echelonize(vectors.front().rows(), vectors.front().cols(), vectors);
}

namespace {
void require_same(const Subspace& a, const Subspace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "ambient mismatch");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  std::vector<ExactVec> all = a.flat_basis();
  all.insert(all.end(), b.flat_basis().begin(), b.flat_basis().end());
  return Subspace::span(a.rows(), a.cols(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  std::vector<ExactVec> images;
  images.reserve(a.dim());
  for (const auto& v : a.flat_basis()) images.push_back(b.residual(v));
  auto ker = detail::kernel(images, a.ambient_dim());
  std::vector<ExactVec> vecs;
  for (const auto& c : ker) vecs.push_back(a.combine(c).flat());
  return Subspace::span(a.rows(), a.cols(), vecs);
}

bool contains(const Subspace& a, const ExactMatrix& x) {
  if (x.rows() != a.rows() || x.cols() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "ambient mismatch");
  return detail::all_zero(a.residual(x.flat()));
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  for (const auto& v : b.flat_basis()) {
    if (!detail::all_zero(a.residual(v))) return false;
  }
  return true;
}

Subspace bracket_space(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  const auto ab = a.basis();
  const auto bb = b.basis();
  std::vector<ExactVec> vecs;
  for (const auto& x : ab)
    for (const auto& y : bb) vecs.push_back(bracket(x, y).flat());
  return Subspace::span(a.rows(), a.cols(), vecs);
}

Subspace derived_space(const Subspace& a) {
  const auto ab = a.basis();
  std::vector<ExactVec> vecs;
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = i + 1; j < ab.size(); ++j) vecs.push_back(bracket(ab[i], ab[j]).flat());
  return Subspace::span(a.rows(), a.cols(), vecs);
}

Subspace map_space(const Subspace& a, ExactMatrix (*f)(const ExactMatrix&)) {
  std::vector<ExactVec> vecs;
  for (const auto& x : a.basis()) vecs.push_back(f(x).flat());
  return Subspace::span(a.rows(), a.cols(), vecs);
}

Subspace hermitian_complement_in(const Subspace& inside, const Subspace& a) {
  require_same(inside, a);
  // x = sum c_k e_k; constraint sum_k c_k tr(e_k y*) = 0 for y in basis(a).
  const auto eb = inside.basis();
  const auto ab = a.basis();
  std::vector<ExactVec> rows;
  for (const auto& y : ab) {
    ExactVec r(eb.size());
    for (std::size_t k = 0; k < eb.size(); ++k) r[k] = hermitian_product(eb[k], y);
    rows.push_back(std::move(r));
  }
  auto sol = detail::solve_homogeneous(rows, eb.size());
  std::vector<ExactVec> vecs;
  for (const auto& c : sol) vecs.push_back(inside.combine(c).flat());
  return Subspace::span(inside.rows(), inside.cols(), vecs);
}

Subspace hermitian_orthogonal(const Subspace& a) {
  return hermitian_complement_in(Subspace::full(a.rows(), a.cols()), a);
}

ExactMatrix orthogonal_projection(const Subspace& a, const ExactMatrix& x) {
  // Solve the Gram system G c = (tr(x b_j*))_j with G_jk = tr(b_k b_j*).
  const auto b = a.basis();
  const std::size_t m = b.size();
  if (m == 0) return ExactMatrix(x.rows(), x.cols());
  std::vector<ExactVec> aug;
  for (std::size_t j = 0; j < m; ++j) {
    ExactVec row(m + 1);
    for (std::size_t k = 0; k < m; ++k) row[k] = hermitian_product(b[k], b[j]);
    row[m] = -hermitian_product(x, b[j]);
    aug.push_back(std::move(row));
  }
  auto sol = detail::solve_homogeneous(aug, m + 1);
  // The unique solution has last coordinate 1 after normalization.
  for (const auto& s : sol) {
    if (s[m].is_zero()) continue;
    ExactVec c(m);
    ExactScalar inv = s[m].inverse();
    for (std::size_t k = 0; k < m; ++k) c[k] = s[k] * inv;
    ExactMatrix out(x.rows(), x.cols());
    for (std::size_t k = 0; k < m; ++k) out += b[k] * c[k];
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "degenerate Gram system");
}

// ---------------------------------------------------------------- RealSubspace

RationalVec RealSubspace::realify(const ExactMatrix& x) {
  RationalVec v(2 * x.flat().size());
  for (std::size_t k = 0; k < x.flat().size(); ++k) {
    v[2 * k] = x.flat()[k].re();
    v[2 * k + 1] = x.flat()[k].im();
  }
  return v;
}

RealSubspace RealSubspace::span(std::size_t rows, std::size_t cols, const std::vector<ExactMatrix>& gens) {
  const std::size_t n = 2 * rows * cols;
  Echelon<Rational> ech(n);
  for (const auto& g : gens) {
    if (g.rows() != rows || g.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "incompatible shapes");
    if (ech.rank() == n) break;
    RationalVec v = realify(g);
    if (!detail::all_zero(v)) ech.insert(std::move(v));
  }
  RealSubspace s(rows, cols);
  auto [b, p] = ech.sorted();
  s.basis_ = std::move(b);
  s.pivots_ = std::move(p);
  return s;
}

RealSubspace RealSubspace::from_complex(const Subspace& s) {
  std::vector<ExactMatrix> gens;
  for (const auto& b : s.basis()) {
    gens.push_back(b);
    gens.push_back(b * ExactScalar::i());
  }
  return span(s.rows(), s.cols(), gens);
}

ExactMatrix RealSubspace::element(std::size_t k) const {
  const auto& v = basis_.at(k);
  ExactVec e(rows_ * cols_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = ExactScalar(v[2 * j], v[2 * j + 1]);
  return ExactMatrix(rows_, cols_, std::move(e));
}

std::vector<ExactMatrix> RealSubspace::basis() const {
  std::vector<ExactMatrix> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) out.push_back(element(k));
  return out;
}

bool RealSubspace::contains(const ExactMatrix& x) const {
  RationalVec r = realify(x);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(r[p]) == 0) continue;
    Rational f = r[p];
    detail::axpy_sub(r, f, basis_[k]);
  }
  return detail::all_zero(r);
}

RationalVec RealSubspace::coordinates(const ExactMatrix& x) const {
  RationalVec r = realify(x);
  RationalVec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = r[pivots_[k]];
  return c;
}

ExactMatrix RealSubspace::combine(const RationalVec& coeffs) const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    out += element(k) * ExactScalar(coeffs[k]);
  }
  return out;
}

RealSubspace RealSubspace::complex_structure() const {
  std::vector<ExactMatrix> gens;
  for (const auto& b : basis()) gens.push_back(b * ExactScalar::i());
  return span(rows_, cols_, gens);
}

RealSubspace real_sum(const RealSubspace& a, const RealSubspace& b) {
  auto g = a.basis();
  auto h = b.basis();
  g.insert(g.end(), h.begin(), h.end());
  return RealSubspace::span(a.rows(), a.cols(), g);
}

RealSubspace real_intersect(const RealSubspace& a, const RealSubspace& b) {
  const auto ab = a.basis();
  // x = sum c_k a_k lies in b iff its reduction modulo b vanishes; the
  // reduction is linear, so take the kernel over Q.
  std::vector<RationalVec> images;
  for (const auto& x : ab) {
    RationalVec r(2 * a.rows() * a.cols());
    const auto coords = b.coordinates(x);
    ExactMatrix res = x - b.combine(coords);
    for (std::size_t k = 0; k < res.flat().size(); ++k) {
      r[2 * k] = res.flat()[k].re();
      r[2 * k + 1] = res.flat()[k].im();
    }
    images.push_back(std::move(r));
  }
  auto ker = detail::kernel(images, 2 * a.rows() * a.cols());
  std::vector<ExactMatrix> gens;
  for (const auto& c : ker) gens.push_back(a.combine(c));
  return RealSubspace::span(a.rows(), a.cols(), gens);
}

namespace {
RealSubspace symmetric_part(const Subspace& s, bool hermitian) {
  // Real coordinates (a_k, b_k) for x = sum (a_k + i b_k) e_k; constraint
  // x -+ x* = 0 is Q-linear in those coordinates.
  const auto eb = s.basis();
  std::vector<ExactMatrix> gens;
  for (const auto& e : eb) {
    gens.push_back(e);
    gens.push_back(e * ExactScalar::i());
  }
  const std::size_t m = gens.size();
  const std::size_t n = s.rows() * s.cols();
  std::vector<RationalVec> images;
  for (const auto& g : gens) {
    ExactMatrix d = hermitian ? g - g.adjoint() : g + g.adjoint();
    RationalVec r(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      r[2 * k] = d.flat()[k].re();
      r[2 * k + 1] = d.flat()[k].im();
    }
    images.push_back(std::move(r));
  }
  auto ker = detail::kernel(images, 2 * n);
  std::vector<ExactMatrix> out;
  for (const auto& c : ker) {
    ExactMatrix x(s.rows(), s.cols());
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(c[k]) != 0) x += gens[k] * ExactScalar(c[k]);
    }
    out.push_back(std::move(x));
  }
  return RealSubspace::span(s.rows(), s.cols(), out);
}
}  // namespace

RealSubspace hermitian_part(const Subspace& s) { return symmetric_part(s, true); }
RealSubspace antihermitian_part(const Subspace& s) { return symmetric_part(s, false); }

}  // namespace crmostow
