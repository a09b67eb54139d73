#include "verify.hpp"

#include <cmath>
#include <sstream>

#include "crmostow/random.hpp"

namespace crmostow::cli {

namespace {

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

template <class T>
Check compare(const std::string& name, const T& computed, const T& expected) {
  return {name, computed == expected, "computed " + show(computed) + ", expected " + show(expected)};
}

Check compare_pair(const std::string& name, std::pair<std::size_t, std::size_t> computed,
                   std::pair<std::size_t, std::size_t> expected) {
  auto s = [](auto p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };
  return {name, computed == expected, "computed " + s(computed) + ", expected " + s(expected)};
}

void apply_overrides(ExpectedReport& ex, const Json& o) {
  for (const auto& [key, value] : o.items()) {
    if (key == "n_reductive") {
      ex.n_reductive = value.get<bool>();
    } else if (key == "strict_hnr") {
      ex.strict_hnr = value.get<bool>();
    } else if (key == "hnr") {
      ex.hnr = value.get<bool>();
    } else if (key == "cr_type") {
      ex.cr_type = {{value.at(0).get<std::size_t>(), value.at(1).get<std::size_t>()}};
    } else if (key == "cr_dim") {
      ex.cr_dim = value.get<std::size_t>();
    } else if (key == "dim_M_minus") {
      ex.dim_M_minus = value.get<std::size_t>();
    } else if (key == "witt") {
      ex.witt = value.get<std::size_t>();
    } else if (key == "f0_dim") {
      ex.f0_dim = value.get<std::size_t>();
    } else if (key == "l_dim") {
      ex.l_dim = value.get<std::size_t>();
    } else if (key == "normalizer_is_q_max") {
      ex.normalizer_is_q_max = value.get<bool>();
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown expected field '" + key + "'");
    }
  }
}

void entry_checks(const CatalogEntry& entry, const ExpectedReport& ex, std::vector<Check>& out) {
  const std::string p = entry.name + ".";
  const Subalgebra& v = entry.v;
  const bool nred = is_n_reductive(v).value;
  out.push_back(compare(p + "n_reductive", nred, ex.n_reductive));
  if (!nred) return;
  const HnrVerdict h = hnr_verdict(v);
  if (ex.strict_hnr) out.push_back(compare(p + "strict_hnr", h.strict_hnr, *ex.strict_hnr));
  if (ex.hnr) out.push_back(compare(p + "hnr", h.hnr, *ex.hnr));
  if (ex.w) out.push_back({p + "w", h.w.space() == *ex.w, "dim " + std::to_string(h.w.dim())});
  const CRType cr = cr_type(v);
  if (ex.cr_dim) out.push_back(compare(p + "cr_dim", cr.cr_dim, *ex.cr_dim));
  if (ex.cr_type) out.push_back(compare_pair(p + "cr_type", {cr.cr_dim, cr.cr_codim}, *ex.cr_type));
  if (ex.dim_M_minus) out.push_back(compare(p + "dim_M_minus", cr.dim_M_minus, *ex.dim_M_minus));
  if (ex.f0_dim || ex.l_dim) {
    const FiberData f = fiber_data(v, h.w, fiber_parabolic_of_w(h.w));
    if (ex.f0_dim) out.push_back(compare(p + "f0_dim", f.f0.dim(), *ex.f0_dim));
    if (ex.l_dim) out.push_back(compare(p + "l_dim", f.l.dim(), *ex.l_dim));
  }
  if (ex.normalizer_is_q_max) {
    const Subalgebra normal = normalizer(v.ambient(), v.nr());
    const bool parabolic = is_parabolic(normal).parabolic;
    const bool equal = parabolic && normal == q_max(v, q_min(v)).q();
    out.push_back({p + "normalizer_is_q_max", equal == *ex.normalizer_is_q_max,
                   "normalizer dim " + std::to_string(normal.dim()) + ", parabolic " + (parabolic ? "yes" : "no")});
  }
  const RegularizationTrace reg = parabolic_regularization(v);
  out.push_back({p + "regularization_steps", reg.steps <= v.ambient().dim(),
                 std::to_string(reg.steps) + " steps, dim k " + std::to_string(v.ambient().dim())});
  if (ex.regularization) {
    out.push_back({p + "regularization", reg.fixed_point.space() == *ex.regularization,
                   "fixed point dim " + std::to_string(reg.fixed_point.dim())});
  }
  if (ex.witt) out.push_back(compare(p + "witt", levi_report(v).witt_lower_bound, *ex.witt));
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Block-diagonal part (upper = false) or strictly block-upper part (upper = true) of a.
CMat block_part(const CMat& a, const std::vector<Eigen::Index>& blocks, bool upper) {
  CMat out = CMat::Zero(a.rows(), a.cols());
  std::vector<Eigen::Index> id;
  for (std::size_t b = 0; b < blocks.size(); ++b) id.insert(id.end(), blocks[b], static_cast<Eigen::Index>(b));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (upper ? id[i] < id[j] : id[i] == id[j]) out(i, j) = a(i, j);
  return out;
}

}  // namespace

double jacobi_orthogonality_defect(Rng& rng, std::size_t n) {
  std::vector<Eigen::Index> blocks;
  for (std::size_t left = n; left > 0;) {
    const std::size_t b = std::min<std::size_t>(left, 1 + rng() % 2);
    blocks.push_back(static_cast<Eigen::Index>(b));
    left -= b;
  }
  const CMat h = block_part(random_hermitian_traceless(n, rng), blocks, false);
  CMat t = h * h;
  t -= (t.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
  CMat z0 = block_part(random_complex(n, rng), blocks, false);
  z0 -= (z0.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
  const CMat zn = block_part(random_complex(n, rng), blocks, true);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double s = -1.0 + 0.1 * i;
    const CMat gamma = hermitian_exp(s * h);
    const CMat a = theta(h, z0, s) + s * theta(h, t, s);
    const CMat b = theta(h, zn, s);
    const double scale = std::sqrt(riemannian_inner(gamma, a, a) * riemannian_inner(gamma, b, b));
    worst = std::max(worst, std::abs(riemannian_inner(gamma, a, b)) / std::max(1.0, scale));
  }
  return worst;
}

double exp_differential_defect(Rng& rng, std::size_t n) {
  const CMat h = random_hermitian_traceless(n, rng);
  const CMat x = random_hermitian_traceless(n, rng);
  const TangentSplit split = split_tangent(h, x);
  const double step = 1e-5;
  const CMat fd = (hermitian_exp(h + step * x) - hermitian_exp(h - step * x)) / (2 * step);
  const CMat eh = hermitian_exp(h);
  const CMat formula = eh * split.y - split.y * eh + 2.0 * split.t * eh;
  return (fd - formula).norm() / std::max(1.0, formula.norm());
}

std::vector<Check> structural_suite(const Json& overrides) {
  std::vector<Check> out;
  for (const auto& name : list()) {
    const CatalogEntry entry = build(name);
    ExpectedReport ex = entry.expected;
    if (overrides.contains(name)) apply_overrides(ex, overrides[name]);
    entry_checks(entry, ex, out);
  }
  for (const auto& params : grassmann_parameters(6)) {
    const CatalogEntry e = build("grassmann_pair", params);
    std::ostringstream tag;
    tag << "grassmann_pair(" << params.at("p") << "," << params.at("q") << "," << params.at("n") << "," << params.at("k")
        << ").";
    out.push_back(compare(tag.str() + "n_reductive", is_n_reductive(e.v).value, true));
    out.push_back(compare(tag.str() + "strict_hnr", is_horocyclic(e.v.ambient(), e.v.nr()).value, true));
    const CRType cr = cr_type(e.v);
    out.push_back(compare_pair(tag.str() + "cr_type", {cr.cr_dim, cr.cr_codim}, *e.expected.cr_type));
    out.push_back(compare(tag.str() + "genericity", cr.cr_dim + cr.cr_codim, cr.dim_M_minus));
  }
  return out;
}

std::vector<Check> numeric_suite(std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);
  double taylor = 0, closed = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const JacobiFieldSpec spec = random_jacobi_spec(n, rng);
    const JacobiValue j0 = jacobi_eval(spec, 0.0);
    const double lhs = jacobi_norm_sq(spec, 1.0);
    const double rhs = jacobi_norm_sq(spec, 0.0) + 2 * frob_inner(j0.j, j0.jdot) + 2 * jacobi_energy(spec);
    taylor = std::max(taylor, rel(lhs, rhs));
    for (double t : {0.3, 0.7, 1.5}) closed = std::max(closed, rel(jacobi_norm_sq_blocks(spec, t), jacobi_norm_sq_direct(spec, t)));
  }
  out.push_back({"jacobi.taylor_identity", taylor < 1e-7, "max relative error " + show(taylor)});
  out.push_back({"jacobi.closed_form_vs_direct", closed < 1e-9, "max relative error " + show(closed)});

  double orthogonality = 0, differential = 0;
  for (int i = 0; i < 20; ++i) {
    orthogonality = std::max(orthogonality, jacobi_orthogonality_defect(rng, 2 + static_cast<std::size_t>(i % 3)));
    differential = std::max(differential, exp_differential_defect(rng, 2 + static_cast<std::size_t>(i % 3)));
  }
  out.push_back({"jacobi.orthogonality", orthogonality < 1e-9, "max relative inner product " + show(orthogonality)});
  out.push_back({"exp.differential", differential < 1e-5, "max relative error " + show(differential)});

  double minor_violation = 0;
  std::size_t not_strict = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const MinorInequality m = minor_log_inequality(SpdPoint(random_spd_det_one(n, rng)));
    minor_violation = std::max(minor_violation, m.rhs - m.lhs);
    if (!m.strict) ++not_strict;
  }
  out.push_back({"minor.inequality", minor_violation <= 1e-10 && not_strict == 0,
                 "max rhs - lhs " + show(minor_violation) + ", non-strict " + show(not_strict)});
  CMat hand(2, 2);
  hand << 2, 1, 1, 1;
  const MinorInequality m = minor_log_inequality(SpdPoint(hand));
  out.push_back({"minor.hand_case", std::abs(m.lhs - 1.8524) < 1e-3 && std::abs(m.rhs - 0.9609) < 1e-3 && m.strict,
                 "lhs " + show(m.lhs) + ", rhs " + show(m.rhs)});

  const Counterexample c = counterexample_search({seed, 1e-9, 60});
  out.push_back({"counterexample.theta", c.theta_one_norm < 1e-8 && c.theta_zero_norm > 0.1,
                 "|theta(1)| " + show(c.theta_one_norm) + ", |theta(0)| " + show(c.theta_zero_norm)});
  out.push_back({"counterexample.nilpotent", is_nilpotent(to_exact(c.z)), "Z^3 = 0 checked exactly"});

  double invariance = 0;
  for (int i = 0; i < 10; ++i) {
    const SpdPoint p(random_spd_det_one(3, rng)), q(random_spd_det_one(3, rng));
    const CMat z = random_special_linear(3, rng);
    invariance = std::max(invariance, std::abs(dist(p, q) - dist(p.congruence(z), q.congruence(z))));
  }
  out.push_back({"dist.invariance", invariance < 1e-8, "max deviation " + show(invariance)});
  return out;
}

std::size_t print_tap(std::ostream& os, const std::vector<Check>& checks) {
  os << "1.." << checks.size() << "\n";
  std::size_t failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    if (!c.ok) ++failed;
    os << (c.ok ? "ok " : "not ok ") << (i + 1) << " - " << c.name << " # " << c.detail << "\n";
  }
  if (failed > 0) {
    os << "# failed:";
    for (const auto& c : checks)
      if (!c.ok) os << " " << c.name;
    os << "\n";
  }
  return failed;
}

}  // namespace crmostow::cli
