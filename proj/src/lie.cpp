#include "crmostow/lie.hpp"

#include <deque>
#include <sstream>

#include "crmostow/polynomial.hpp"
#include "linalg.hpp"

namespace crmostow {

// ---------------------------------------------------------------- AmbientAlgebra

AmbientAlgebra::AmbientAlgebra(std::size_t n, AmbientKind kind, std::vector<std::size_t> blocks)
    : n_(n), kind_(kind), blocks_(std::move(blocks)) {
  const auto owner = block_of();
  std::vector<ExactMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && owner[i] == owner[j]) gens.push_back(ExactMatrix::unit(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1));
  }
  space_ = std::make_shared<const Subspace>(echelonize(n, n, gens));
}

AmbientAlgebra AmbientAlgebra::sl(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sl_n needs n >= 2");
  return AmbientAlgebra(n, AmbientKind::SpecialLinear, {n});
}

AmbientAlgebra AmbientAlgebra::blocks(std::vector<std::size_t> sizes) {
  std::size_t n = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "empty block");
    n += s;
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ambient needs n >= 2");
  if (sizes.size() == 1) return sl(n);
  return AmbientAlgebra(n, AmbientKind::BlockSpecialLinear, std::move(sizes));
}

std::vector<std::size_t> AmbientAlgebra::block_of() const {
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t k = 0; k < blocks_[b]; ++k) owner.push_back(b);
  return owner;
}

bool AmbientAlgebra::contains(const ExactMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  return crmostow::contains(*space_, x);
}

RealSubspace AmbientAlgebra::compact_form() const { return antihermitian_part(*space_); }
RealSubspace AmbientAlgebra::hermitian_form() const { return hermitian_part(*space_); }

std::string AmbientAlgebra::describe() const {
  std::ostringstream os;
  if (kind_ == AmbientKind::SpecialLinear) {
    os << "sl(" << n_ << ")";
  } else {
    os << "s(";
    for (std::size_t b = 0; b < blocks_.size(); ++b) os << (b ? "x" : "") << "gl(" << blocks_[b] << ")";
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- closure

void require_closed(const Subspace& s) {
  const auto b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      ExactMatrix c = bracket(b[i], b[j]);
      if (!contains(s, c)) {
        std::ostringstream os;
        os << "not closed under bracket: [b" << i << ", b" << j << "] = " << c << " with b" << i << " = " << b[i]
           << ", b" << j << " = " << b[j];
        throw Error(ErrorCode::NotClosed, os.str());
      }
    }
  }
}

Subspace lie_closure(const Subspace& s) {
  Subspace cur = s;
  // Bracket new elements against everything until nothing new appears.
  std::vector<ExactMatrix> all = cur.basis();
  std::size_t processed = 0;
  while (processed < all.size()) {
    std::vector<ExactVec> vecs = cur.flat_basis();
    bool grew = false;
    const std::size_t upto = all.size();
    for (std::size_t i = processed; i < upto; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        ExactMatrix c = bracket(all[i], all[j]);
        if (!contains(cur, c)) {
          vecs.push_back(c.flat());
          cur = Subspace::span(s.rows(), s.cols(), vecs);
          all.push_back(c);
          grew = true;
        }
      }
    }
    processed = upto;
    if (!grew) break;
  }
  return cur;
}

// ---------------------------------------------------------------- Subalgebra

Subalgebra::Subalgebra(AmbientAlgebra ambient, Subspace space) {
  if (space.rows() != ambient.n() || space.cols() != ambient.n()) {
    throw Error(ErrorCode::ShapeMismatch, "subspace shape does not match the ambient algebra");
  }
  if (!contains(ambient.space(), space)) throw Error(ErrorCode::NotInAmbient, "not inside ambient");
  require_closed(space);
  data_ = std::make_shared<Data>(std::move(ambient), std::move(space));
}

Subalgebra Subalgebra::trusted(AmbientAlgebra ambient, Subspace space) {
  Subalgebra v;
  v.data_ = std::make_shared<Data>(std::move(ambient), std::move(space));
  return v;
}

namespace {

Subspace radical_space(const Subspace& v, const Subspace& derived) {
  const auto vb = v.basis();
  const auto db = derived.basis();
  std::vector<ExactVec> rows;
  for (const auto& d : db) {
    ExactVec r(vb.size());
    for (std::size_t k = 0; k < vb.size(); ++k) r[k] = trace_product(vb[k], d);
    rows.push_back(std::move(r));
  }
  auto sol = detail::solve_homogeneous(rows, vb.size());
  std::vector<ExactVec> vecs;
  for (const auto& c : sol) vecs.push_back(v.combine(c).flat());
  return Subspace::span(v.rows(), v.cols(), vecs);
}

Subspace nr_space(const Subspace& rad) {
  const std::size_t n = rad.rows();
  const auto rb = rad.basis();
  if (rb.empty()) return Subspace(n, n);
  // Unital associative algebra generated by rad.
  detail::Echelon<ExactScalar> ech(n * n);
  std::vector<ExactMatrix> alg;
  std::deque<ExactMatrix> queue;
  queue.push_back(ExactMatrix::identity(n));
  while (!queue.empty()) {
    ExactMatrix a = std::move(queue.front());
    queue.pop_front();
    if (!ech.insert(a.flat())) continue;
    alg.push_back(a);
    if (ech.rank() == n * n) break;
    for (const auto& r : rb) queue.push_back(r * a);
  }
  // X = sum c_k r_k is nilpotent iff tr(X M) = 0 for every M in the algebra.
  std::vector<ExactVec> rows;
  for (const auto& m : alg) {
    ExactVec row(rb.size());
    for (std::size_t k = 0; k < rb.size(); ++k) row[k] = trace_product(rb[k], m);
    rows.push_back(std::move(row));
  }
  auto sol = detail::solve_homogeneous(rows, rb.size());
  std::vector<ExactVec> vecs;
  for (const auto& c : sol) vecs.push_back(rad.combine(c).flat());
  return Subspace::span(n, n, vecs);
}

}  // namespace

const Subspace& Subalgebra::derived() const {
  std::call_once(data_->derived_once, [this] { data_->derived = derived_space(data_->space); });
  return *data_->derived;
}

const Subspace& Subalgebra::radical() const {
  std::call_once(data_->radical_once, [this] { data_->radical = radical_space(data_->space, derived()); });
  return *data_->radical;
}

const Subspace& Subalgebra::nr() const {
  std::call_once(data_->nr_once, [this] { data_->nr = nr_space(radical()); });
  return *data_->nr;
}

const Subspace& Subalgebra::levi() const {
  std::call_once(data_->levi_once,
                 [this] { data_->levi = subspace_intersect(data_->space, sigma_space(data_->space)); });
  return *data_->levi;
}

Subspace sigma_space(const Subspace& s) { return map_space(s, &AmbientAlgebra::sigma); }

Subalgebra make_subalgebra(const AmbientAlgebra& ambient, const Subspace& space, ClosureMode mode) {
  if (!contains(ambient.space(), space)) throw Error(ErrorCode::NotInAmbient, "not inside ambient");
  if (mode == ClosureMode::RequireClosed) return Subalgebra(ambient, space);
  return Subalgebra::trusted(ambient, lie_closure(space));
}

Subalgebra make_subalgebra(const AmbientAlgebra& ambient, const std::vector<ExactMatrix>& generators,
                           ClosureMode mode) {
  for (const auto& g : generators) {
    if (!ambient.contains(g)) throw Error(ErrorCode::NotInAmbient, "not inside ambient");
  }
  return make_subalgebra(ambient, echelonize(ambient.n(), ambient.n(), generators), mode);
}

Subspace radical(const Subalgebra& v) {
  const Subspace& rad = v.radical();
  // Killing form of v/rad must be nondegenerate.
  const auto vb = v.basis();
  const std::size_t dv = vb.size();
  const auto rb = rad.basis();
  detail::Echelon<ExactScalar> ech(dv);
  for (const auto& r : rb) ech.insert(v.space().coordinates(r.flat()));
  std::vector<std::size_t> comp;
  for (std::size_t k = 0; k < dv; ++k) {
    ExactVec e(dv);
    e[k] = 1;
    if (ech.insert(e)) comp.push_back(k);
  }
  const std::size_t m = comp.size();
  if (m == 0) return rad;
  // Change of basis: columns rad basis then complement, in v-coordinates.
  std::vector<ExactVec> cols;
  for (const auto& r : rb) cols.push_back(v.space().coordinates(r.flat()));
  for (std::size_t k : comp) {
    ExactVec e(dv);
    e[k] = 1;
    cols.push_back(e);
  }
  ExactVec bm(dv * dv);
  for (std::size_t c = 0; c < dv; ++c)
    for (std::size_t r = 0; r < dv; ++r) bm[r * dv + c] = cols[c][r];
  const ExactMatrix binv = inverse(ExactMatrix(dv, dv, bm));
  const std::size_t off = rb.size();
  std::vector<std::vector<ExactVec>> ad(m, std::vector<ExactVec>(m, ExactVec(m)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ExactMatrix c = bracket(vb[comp[a]], vb[comp[b]]);
      ExactVec coords = v.space().coordinates(c.flat());
      for (std::size_t t = 0; t < m; ++t) {
        ExactScalar s;
        for (std::size_t r = 0; r < dv; ++r) {
          if (!coords[r].is_zero()) s += binv(off + t, r) * coords[r];
        }
        ad[a][t][b] = s;  // column b of ad(c_a) in quotient coordinates
      }
    }
  }
  std::vector<ExactVec> killing(m, ExactVec(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      ExactScalar s;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (!ad[a][i][j].is_zero() && !ad[b][j][i].is_zero()) s += ad[a][i][j] * ad[b][j][i];
        }
      killing[a][b] = s;
    }
  if (!detail::solve_homogeneous(killing, m).empty()) {
    throw Error(ErrorCode::InvalidArgument, "quotient by the radical is not semisimple");
  }
  return rad;
}

Subspace nr(const Subalgebra& v) {
  const Subspace& s = v.nr();
  for (const auto& x : s.basis()) {
    if (!is_nilpotent(x)) throw Error(ErrorCode::InvalidArgument, "nr basis element is not nilpotent");
  }
  return s;
}

Subalgebra conj(const Subalgebra& v) { return Subalgebra::trusted(v.ambient(), sigma_space(v.space())); }

Subalgebra levi_intersection(const Subalgebra& v) { return Subalgebra::trusted(v.ambient(), v.levi()); }

NReductiveVerdict is_n_reductive(const Subalgebra& v) {
  NReductiveVerdict out;
  out.nr = v.nr();
  out.levi = v.levi();
  const Subspace meet = subspace_intersect(out.nr, out.levi);
  if (!meet.is_zero()) {
    out.reason = "nr(v) and L(v) intersect nontrivially";
  } else if (out.nr.dim() + out.levi.dim() != v.dim()) {
    std::ostringstream os;
    os << "dim nr(v) + dim L(v) = " << out.nr.dim() + out.levi.dim() << " < dim v = " << v.dim();
    out.reason = os.str();
  } else {
    out.value = true;
    out.reason = "v = nr(v) + L(v)";
  }
  return out;
}

Subalgebra normalizer(const AmbientAlgebra& ambient, const Subspace& s) {
  const auto kb = ambient.space().basis();
  const auto sb = s.basis();
  const std::size_t n2 = ambient.n() * ambient.n();
  std::vector<ExactVec> images;
  images.reserve(kb.size());
  for (const auto& z : kb) {
    ExactVec img;
    img.reserve(sb.size() * n2);
    for (const auto& y : sb) {
      ExactVec r = s.residual(bracket(z, y).flat());
      img.insert(img.end(), r.begin(), r.end());
    }
    images.push_back(std::move(img));
  }
  auto ker = detail::kernel(images, sb.size() * n2);
  std::vector<ExactVec> vecs;
  for (const auto& c : ker) vecs.push_back(ambient.space().combine(c).flat());
  return Subalgebra::trusted(ambient, Subspace::span(ambient.n(), ambient.n(), vecs));
}

// ---------------------------------------------------------------- Jordan data

bool is_nilpotent(const ExactMatrix& x) { return power(x, x.rows()).is_zero(); }

JordanKind jordan_flags(const ExactMatrix& x) {
  if (is_nilpotent(x)) return JordanKind::Nilpotent;
  const Poly m = minimal_polynomial(x);
  const Poly g = poly_gcd(m, poly_derivative(m));
  return g.size() <= 1 ? JordanKind::Semisimple : JordanKind::Mixed;
}

std::string to_string(JordanKind k) {
  switch (k) {
    case JordanKind::Semisimple:
      return "semisimple";
    case JordanKind::Nilpotent:
      return "nilpotent";
    case JordanKind::Mixed:
      return "mixed";
  }
  return "?";
}

std::pair<ExactMatrix, ExactMatrix> jordan_decomposition(const ExactMatrix& x) {
  const Poly m = minimal_polynomial(x);
  const Poly sf = poly_divmod(m, poly_gcd(m, poly_derivative(m))).first;
  const Poly dsf = poly_derivative(sf);
  // Newton iteration y <- y - sf(y) sf'(y)^{-1} terminates at the semisimple part.
  ExactMatrix y = x;
  for (std::size_t it = 0; it <= x.rows() + 1; ++it) {
    ExactMatrix val = poly_eval(sf, y);
    if (val.is_zero()) return {y, x - y};
    y = y - val * inverse(poly_eval(dsf, y));
  }
  throw Error(ErrorCode::InvalidArgument, "Jordan decomposition did not terminate");
}

void check_splittable(const Subalgebra& v) {
  const auto b = v.basis();
  std::vector<ExactMatrix> probes = b;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) probes.push_back(b[i] + b[i + 1] * ExactScalar(static_cast<long>(i + 2)));
  if (!b.empty()) {
    ExactMatrix all(b.front().rows(), b.front().cols());
    for (std::size_t i = 0; i < b.size(); ++i) all += b[i] * ExactScalar(static_cast<long>(i + 1));
    probes.push_back(all);
  }
  for (const auto& x : probes) {
    if (is_nilpotent(x)) continue;
    auto [s, n] = jordan_decomposition(x);
    if (!contains(v.space(), s)) {
      std::ostringstream os;
      os << "not splittable: semisimple part of " << x << " leaves v";
      throw Error(ErrorCode::NotSplittable, os.str());
    }
  }
}

}  // namespace crmostow
