#include "crmostow/parabolic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crmostow/polynomial.hpp"
#include "linalg.hpp"

namespace crmostow {

namespace {

ExactMatrix column(const ExactMatrix& x, std::size_t j) {
  ExactVec c(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) c[i] = x(i, j);
  return ExactMatrix(x.rows(), 1, std::move(c));
}

/// {x in C^n : X x in f for every X in gens}.
Subspace preimage(const std::vector<ExactMatrix>& gens, const Subspace& f, std::size_t n) {
  std::vector<ExactVec> images;
  for (std::size_t i = 0; i < n; ++i) {
    ExactVec img;
    for (const auto& x : gens) {
      ExactVec r = f.residual(column(x, i).flat());
      img.insert(img.end(), r.begin(), r.end());
    }
    images.push_back(std::move(img));
  }
  std::vector<ExactVec> vecs;
  for (auto& c : detail::kernel(images, gens.size() * n)) vecs.push_back(std::move(c));
  return Subspace::span(n, 1, vecs);
}

Flag kernel_series(const Subspace& nil, std::size_t n) {
  const auto gens = nil.basis();
  Flag flag;
  Subspace cur(n, 1);
  while (cur.dim() < n) {
    Subspace next = gens.empty() ? Subspace::full(n, 1) : preimage(gens, cur, n);
    if (next == cur) throw Error(ErrorCode::InvalidArgument, "kernel series stalled: generators are not nilpotent");
    flag.push_back(next);
    cur = std::move(next);
  }
  return flag;
}

Subspace kernel_in(const Subspace& domain, const std::vector<ExactVec>& images, std::size_t len) {
  std::vector<ExactVec> vecs;
  for (const auto& c : detail::kernel(images, len)) vecs.push_back(domain.combine(c).flat());
  return Subspace::span(domain.rows(), domain.cols(), vecs);
}

/// {Z in a : [Z, b] = 0}.
Subspace centralizer_in(const Subspace& a, const Subspace& b) {
  const auto bb = b.basis();
  const std::size_t n2 = a.ambient_dim();
  std::vector<ExactVec> images;
  for (const auto& z : a.basis()) {
    ExactVec img;
    for (const auto& y : bb) {
      const ExactMatrix c = bracket(z, y);
      img.insert(img.end(), c.flat().begin(), c.flat().end());
    }
    images.push_back(std::move(img));
  }
  return kernel_in(a, images, bb.size() * n2);
}

/// Null space of a square matrix as a column subspace.
Subspace null_columns(const ExactMatrix& x) {
  std::vector<ExactVec> rows;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    ExactVec r(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) r[j] = x(i, j);
    rows.push_back(std::move(r));
  }
  return Subspace::span(x.cols(), 1, detail::solve_homogeneous(rows, x.cols()));
}

struct JointEigenspace {
  RationalVec weight;
  Subspace space;
};

/// Joint eigenspaces of commuting Hermitian matrices; throws IrrationalWeights.
std::vector<JointEigenspace> joint_eigenspaces(const std::vector<ExactMatrix>& hs, std::size_t n) {
  std::vector<JointEigenspace> cur{{RationalVec{}, Subspace::full(n, 1)}};
  for (const auto& h : hs) {
    std::vector<Rational> roots = rational_roots(real_coefficients(characteristic_polynomial(h)));
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<JointEigenspace> next;
    for (const auto& js : cur) {
      for (const auto& lam : roots) {
        Subspace s = subspace_intersect(js.space, null_columns(h - ExactMatrix::identity(n) * ExactScalar(lam)));
        if (s.is_zero()) continue;
        RationalVec w = js.weight;
        w.push_back(lam);
        next.push_back({std::move(w), std::move(s)});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_zero_weight(const RationalVec& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalVec weight_diff(const RationalVec& a, const RationalVec& b) {
  RationalVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

RationalVec weight_neg(const RationalVec& a) {
  RationalVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = -a[i];
  return d;
}

std::string weight_str(const RationalVec& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

/// L-module generated by s: s + [L,s] + [L,[L,s]] + ...
Subspace module_generated(const Subspace& levi, const Subspace& s) {
  Subspace cur = s;
  while (true) {
    Subspace next = subspace_sum(cur, bracket_space(levi, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace

Subspace flag_stabilizer(const AmbientAlgebra& ambient, const Flag& flag) {
  const Subspace& k = ambient.space();
  std::vector<ExactVec> images;
  std::size_t len = 0;
  for (const auto& z : k.basis()) {
    ExactVec img;
    for (const auto& f : flag) {
      for (const auto& x : f.basis()) {
        ExactVec r = f.residual((z * x).flat());
        img.insert(img.end(), r.begin(), r.end());
      }
    }
    len = img.size();
    images.push_back(std::move(img));
  }
  if (len == 0) return k;
  return kernel_in(k, images, len);
}

ParabolicTest is_parabolic(const Subalgebra& q) {
  ParabolicTest out;
  const std::size_t n = q.ambient().n();
  for (const auto& x : q.nr().basis()) {
    if (!is_nilpotent(x)) return out;
  }
  out.flag = kernel_series(q.nr(), n);
  out.stabilizer = flag_stabilizer(q.ambient(), out.flag);
  out.parabolic = out.stabilizer == q.space();
  return out;
}

ParabolicSubalgebra::ParabolicSubalgebra(Subalgebra q) : q_(std::move(q)) {
  ParabolicTest t = is_parabolic(q_);
  if (!t.parabolic) {
    std::ostringstream os;
    os << "not parabolic: dim q = " << q_.dim() << " but the invariant flag has stabilizer of dim "
       << t.stabilizer.dim();
    throw Error(ErrorCode::MembershipFailed, os.str());
  }
  flag_ = std::move(t.flag);
}

bool ParabolicSubalgebra::sigma_split() const {
  return subspace_intersect(levi(), nilradical()).is_zero() && levi().dim() + nilradical().dim() == dim();
}

RegularizationTrace parabolic_regularization(const Subalgebra& v) {
  check_splittable(v);
  const AmbientAlgebra& k = v.ambient();
  std::vector<Subalgebra> chain{v};
  // Each step strictly grows, so dim k bounds the number of steps.
  for (std::size_t step = 0; step <= k.dim(); ++step) {
    Subalgebra next = normalizer(k, chain.back().nr());
    if (next.space() == chain.back().space()) break;
    if (!contains(next.space(), chain.back().space())) {
      throw Error(ErrorCode::CertificateFailed, "regularization step is not increasing");
    }
    chain.push_back(std::move(next));
  }
  const Subalgebra& e = chain.back();
  if (normalizer(k, e.nr()).space() != e.space()) {
    throw Error(ErrorCode::CertificateFailed, "regularization did not reach a fixed point");
  }
  if (!is_parabolic(e).parabolic) throw Error(ErrorCode::CertificateFailed, "regularization fixed point is not parabolic");
  if (!contains(e.nr(), v.nr())) throw Error(ErrorCode::CertificateFailed, "nr(v) is not inside nr(e)");
  RegularizationTrace out{chain, e, chain.size() - 1};
  return out;
}

P0Check p0_membership(const Subalgebra& v, const ParabolicSubalgebra& q) {
  if (!(v.ambient() == q.q().ambient())) return {false, "ambient mismatch"};
  if (!contains(q.q().space(), v.space())) return {false, "v is not contained in q"};
  if (!contains(q.nilradical(), v.nr())) return {false, "nr(v) is not contained in n(q)"};
  if (!q.sigma_split()) return {false, "q is not the direct sum of L(q) and n(q)"};
  return {true, "q in P0(v)"};
}

ParabolicSubalgebra q_min(const Subalgebra& v) {
  const RegularizationTrace trace = parabolic_regularization(v);
  const Subalgebra& e = trace.fixed_point;
  const Subspace space = subspace_sum(e.levi(), e.nr());
  ParabolicSubalgebra q(Subalgebra(v.ambient(), space));
  const P0Check check = p0_membership(v, q);
  if (!check.member) throw Error(ErrorCode::MembershipFailed, "P0 membership failed: " + check.reason);
  return q;
}

std::vector<WeightSpace> center_weights(const ParabolicSubalgebra& q) {
  const AmbientAlgebra& k = q.q().ambient();
  const std::size_t n = k.n();
  const Subspace z = centralizer_in(q.levi(), q.levi());
  const std::vector<ExactMatrix> hs = hermitian_part(z).basis();
  const auto eig = joint_eigenspaces(hs, n);
  std::map<RationalVec, std::vector<ExactVec>> pieces;
  for (const auto& a : eig) {
    for (const auto& b : eig) {
      auto& dst = pieces[weight_diff(a.weight, b.weight)];
      for (const auto& x : a.space.basis())
        for (const auto& y : b.space.basis()) dst.push_back((x * y.adjoint()).flat());
    }
  }
  std::vector<WeightSpace> out;
  std::vector<WeightSpace> rest;
  for (auto& [w, vecs] : pieces) {
    Subspace s = subspace_intersect(k.space(), Subspace::span(n, n, vecs));
    if (s.is_zero()) continue;
    if (is_zero_weight(w)) {
      out.push_back({w, std::move(s)});
    } else {
      rest.push_back({w, std::move(s)});
    }
  }
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

ParabolicSubalgebra q_max(const Subalgebra& v, const ParabolicSubalgebra& start) {
  const P0Check check = p0_membership(v, start);
  if (!check.member) throw Error(ErrorCode::MembershipFailed, "start is not in P0(v): " + check.reason);
  const AmbientAlgebra& k = v.ambient();
  ParabolicSubalgebra q = start;
  for (std::size_t round = 0; round <= k.dim(); ++round) {
    const auto weights = center_weights(q);
    std::vector<const WeightSpace*> positive;
    for (const auto& ws : weights) {
      if (is_zero_weight(ws.weight)) continue;
      if (contains(q.nilradical(), ws.space)) {
        positive.push_back(&ws);
      } else if (!subspace_intersect(q.q().space(), ws.space).is_zero()) {
        throw Error(ErrorCode::AscentStalled, "weight space straddles q: " + weight_str(ws.weight));
      }
    }
    std::map<RationalVec, bool> is_positive;
    for (const auto* p : positive) is_positive[p->weight] = true;
    const Subspace g = lie_closure(subspace_sum(v.nr(), q.levi()));
    const WeightSpace* add = nullptr;
    for (const auto* mu : positive) {
      bool simple = true;
      for (const auto* a : positive) {
        if (is_positive.count(weight_diff(mu->weight, a->weight)) != 0) {
          simple = false;
          break;
        }
      }
      if (!simple) continue;
      if (subspace_intersect(g, mu->space).is_zero()) {
        add = mu;
        break;
      }
    }
    if (add == nullptr) break;
    const RationalVec neg = weight_neg(add->weight);
    auto it = std::find_if(weights.begin(), weights.end(), [&](const WeightSpace& w) { return w.weight == neg; });
    if (it == weights.end()) throw Error(ErrorCode::AscentStalled, "missing opposite weight " + weight_str(neg));
    try {
      q = ParabolicSubalgebra(Subalgebra(k, subspace_sum(q.q().space(), it->space)));
    } catch (const Error& e) {
      throw Error(ErrorCode::AscentStalled, std::string("weight ascent stalled: ") + e.what());
    }
  }
  const Subspace g = lie_closure(subspace_sum(v.nr(), q.levi()));
  if (g != q.q().space()) throw Error(ErrorCode::CertificateFailed, "q_max is not generated by nr(v) and L(q)");
  if (module_generated(q.levi(), v.nr()) != q.nilradical()) {
    throw Error(ErrorCode::CertificateFailed, "n(q_max) is not the L(q)-module generated by nr(v)");
  }
  return q;
}

ParabolicSubalgebra combine_parabolics(const ParabolicSubalgebra& q1, const ParabolicSubalgebra& q2) {
  if (!(q1.q().ambient() == q2.q().ambient())) throw Error(ErrorCode::InvalidArgument, "ambient mismatch");
  Subspace s = subspace_sum(subspace_intersect(q1.q().space(), q2.q().space()), q1.nilradical());
  return ParabolicSubalgebra(Subalgebra(q1.q().ambient(), std::move(s)));
}

HorocyclicVerdict is_horocyclic(const AmbientAlgebra& ambient, const Subspace& s) {
  for (const auto& x : s.basis()) {
    if (!is_nilpotent(x)) throw Error(ErrorCode::InvalidArgument, "horocyclic test needs nilpotent elements");
  }
  HorocyclicVerdict out;
  Subalgebra p = normalizer(ambient, s);
  if (!is_parabolic(p).parabolic) {
    out.reason = "normalizer is not parabolic";
    return out;
  }
  if (p.nr() != s) {
    std::ostringstream os;
    os << "normalizer is parabolic but its nilradical has dim " << p.nr().dim() << " instead of " << s.dim();
    out.reason = os.str();
    return out;
  }
  out.value = true;
  out.reason = "nilradical of its normalizer";
  out.witness = ParabolicSubalgebra(std::move(p));
  return out;
}

WResult compute_w_detail(const Subalgebra& v) {
  const auto vb = v.basis();
  Subspace cur = subspace_sum(v.space(), sigma_space(v.space()));
  std::size_t rounds = 0;
  // Every subalgebra between v and v + sigma(v) is a v-submodule of each stage.
  while (true) {
    const auto cb = cur.basis();
    std::vector<ExactVec> images;
    std::size_t len = 0;
    for (const auto& z : cb) {
      ExactVec img;
      for (const auto& y : vb) {
        ExactVec r = cur.residual(bracket(z, y).flat());
        img.insert(img.end(), r.begin(), r.end());
      }
      len = img.size();
      images.push_back(std::move(img));
    }
    Subspace next = len == 0 ? cur : kernel_in(cur, images, len);
    if (next == cur) break;
    cur = std::move(next);
    ++rounds;
  }
  try {
    require_closed(cur);
  } catch (const Error& e) {
    throw Error(ErrorCode::CertificateFailed, std::string("maximality certificate failed: ") + e.what());
  }
  if (!contains(cur, v.space())) throw Error(ErrorCode::CertificateFailed, "maximality certificate failed: v lost");
  WResult out{Subalgebra::trusted(v.ambient(), cur), rounds};
  if (!is_n_reductive(out.w).value) throw Error(ErrorCode::CertificateFailed, "w is not n-reductive");
  return out;
}

Subalgebra compute_w(const Subalgebra& v) { return compute_w_detail(v).w; }

HnrVerdict hnr_verdict(const Subalgebra& v) {
  Subalgebra w = compute_w(v);
  Subspace wn = w.nr();
  HorocyclicVerdict h = is_horocyclic(v.ambient(), wn);
  HorocyclicVerdict s = is_horocyclic(v.ambient(), v.nr());
  HnrVerdict out{std::move(w), std::move(wn), h.value, s.value, std::move(h.witness)};
  return out;
}

Subalgebra strengthen(const Subalgebra& v, const ParabolicSubalgebra& q) {
  const P0Check check = p0_membership(v, q);
  if (!check.member) throw Error(ErrorCode::MembershipFailed, "not in P0: " + check.reason);
  Subalgebra out(v.ambient(), subspace_sum(v.space(), q.nilradical()));
  if (!is_n_reductive(out).value) throw Error(ErrorCode::CertificateFailed, "strengthened algebra is not n-reductive");
  if (out.levi() != v.levi()) throw Error(ErrorCode::CertificateFailed, "strengthening changed L(v)");
  return out;
}

}  // namespace crmostow
