#include "crmostow/cr.hpp"

#include <algorithm>
#include <sstream>

#include "crmostow/polynomial.hpp"
#include "crmostow/symspace.hpp"
#include "linalg.hpp"

namespace crmostow {

namespace {

void require_n_reductive(const Subalgebra& v) {
  const NReductiveVerdict verdict = is_n_reductive(v);
  if (!verdict.value) throw Error(ErrorCode::InvalidArgument, "v is not n-reductive: " + verdict.reason);
}

/// Interleaved real and imaginary parts, stored as real ExactScalars.
ExactVec realify(const ExactMatrix& x) {
  ExactVec out;
  out.reserve(2 * x.flat().size());
  for (const auto& e : x.flat()) {
    out.emplace_back(e.re());
    out.emplace_back(e.im());
  }
  return out;
}

std::vector<Rational> primes(std::size_t count) {
  std::vector<Rational> out;
  for (unsigned long p = 2; out.size() < count; ++p) {
    bool prime = true;
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.emplace_back(p);
  }
  return out;
}

/// Van der Corput radical inverse of index in the given base, exactly.
Rational radical_inverse(std::uint64_t index, unsigned long base) {
  Rational out = 0;
  Rational scale(1, base);
  while (index > 0) {
    out += scale * Rational(static_cast<unsigned long>(index % base));
    index /= base;
    scale /= base;
  }
  return out;
}

std::size_t witt(const LeviSignature& s) { return std::min(s.positives, s.negatives); }

bool all_zero(const RationalVec& xi) {
  return std::all_of(xi.begin(), xi.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace

CRType cr_type(const Subalgebra& v) {
  require_n_reductive(v);
  const std::size_t dim_k = v.ambient().dim();
  const std::size_t compact_in_v = antihermitian_part(v.levi()).dim();
  CRType out;
  out.cr_dim = v.nr().dim();
  out.dim_M0 = dim_k - compact_in_v;
  out.dim_M_minus = dim_k - v.dim();
  if (out.dim_M0 < 2 * out.cr_dim) throw Error(ErrorCode::CertificateFailed, "CR dimension exceeds half of dim M0");
  out.cr_codim = out.dim_M0 - 2 * out.cr_dim;
  if (out.cr_dim + out.cr_codim != out.dim_M_minus) {
    std::ostringstream os;
    os << "genericity identity failed: " << out.cr_dim << " + " << out.cr_codim << " != " << out.dim_M_minus;
    throw Error(ErrorCode::CertificateFailed, os.str());
  }
  return out;
}

ParabolicSubalgebra fiber_parabolic_of_w(const Subalgebra& w) { return q_max(w, q_min(w)); }

ParabolicSubalgebra fiber_parabolic(const Subalgebra& v) { return fiber_parabolic_of_w(compute_w(v)); }

FiberData fiber_data(const Subalgebra& v, const ParabolicSubalgebra& q) { return fiber_data(v, compute_w(v), q); }

FiberData fiber_data(const Subalgebra& v, const Subalgebra& w, const ParabolicSubalgebra& q) {
  const P0Check check = p0_membership(w, q);
  if (!check.member) throw Error(ErrorCode::MembershipFailed, "q not in P0(w): " + check.reason);
  const AmbientAlgebra& k = v.ambient();
  const Subspace s = subspace_sum(v.space(), q.nilradical());
  // For Hermitian X, beta-orthogonality to s is the same as to s + sigma(s).
  const Subspace perp = hermitian_complement_in(k.space(), subspace_sum(s, sigma_space(s)));
  const Subspace en = subspace_sum(v.nr(), q.nilradical());
  FiberData out{hermitian_part(perp), hermitian_complement_in(en, v.nr()), q};
  if (!subspace_intersect(out.l, v.nr()).is_zero() || out.l.dim() + v.nr().dim() != en.dim()) {
    throw Error(ErrorCode::CertificateFailed, "l is not a complement of nr(v) in nr(v) + n(q)");
  }
  return out;
}

FiberData fiber_data(const Subalgebra& v) {
  const Subalgebra w = compute_w(v);
  return fiber_data(v, w, fiber_parabolic_of_w(w));
}

ExactMatrix scalar_levi_form(const LeviReport& report, const RationalVec& xi) {
  if (xi.size() != report.scalar_forms.size()) throw Error(ErrorCode::ShapeMismatch, "covector has the wrong length");
  const std::size_t nu = report.nr_basis.size();
  ExactMatrix out(nu, nu);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    if (sgn(xi[j]) != 0) out += report.scalar_forms[j] * ExactScalar(xi[j]);
  }
  return out;
}

LeviSignature levi_signature(const LeviReport& report, const RationalVec& xi) {
  const ExactMatrix form = scalar_levi_form(report, xi);
  if (!form.is_hermitian()) throw Error(ErrorCode::CertificateFailed, "scalar Levi form is not Hermitian");
  LeviSignature out;
  out.xi = xi;
  if (form.rows() == 0) return out;
  const SignCounts counts = descartes_counts(real_coefficients(characteristic_polynomial(form)));
  out.positives = counts.positive;
  out.negatives = counts.negative;
  out.zeros = counts.zero;
  return out;
}

LeviReport levi_report(const Subalgebra& v, const LeviSampling& sampling) {
  require_n_reductive(v);
  const AmbientAlgebra& k = v.ambient();
  LeviReport out;
  out.sampling = sampling;
  out.nr_basis = v.nr().basis();
  out.complement = hermitian_complement_in(k.space(), subspace_sum(v.space(), sigma_space(v.space())));
  if (out.complement.is_zero()) throw Error(ErrorCode::EmptyCharacteristicSpace, "empty characteristic space");
  out.characteristic_basis = hermitian_part(out.complement).basis();
  const std::size_t nu = out.nr_basis.size();
  std::vector<std::vector<ExactMatrix>> brackets(nu, std::vector<ExactMatrix>(nu));
  out.vector_form.assign(nu, std::vector<ExactMatrix>(nu));
  for (std::size_t a = 0; a < nu; ++a) {
    for (std::size_t b = 0; b < nu; ++b) {
      brackets[a][b] = bracket(out.nr_basis[a], AmbientAlgebra::sigma(out.nr_basis[b]));
      out.vector_form[a][b] = orthogonal_projection(out.complement, brackets[a][b]);
    }
  }
  for (const auto& h : out.characteristic_basis) {
    ExactVec entries;
    entries.reserve(nu * nu);
    for (std::size_t a = 0; a < nu; ++a)
      for (std::size_t b = 0; b < nu; ++b) entries.push_back(trace_product(h, brackets[a][b]));
    ExactMatrix form(nu, nu, std::move(entries));
    if (!form.is_hermitian()) throw Error(ErrorCode::CertificateFailed, "assembled scalar Levi form is not Hermitian");
    out.scalar_forms.push_back(std::move(form));
  }

  const std::size_t m = out.characteristic_basis.size();
  auto record = [&](RationalVec xi) {
    if (all_zero(xi)) return;
    out.sampled_signatures.push_back(levi_signature(out, xi));
  };
  for (std::size_t j = 0; j < m; ++j) {
    for (int s : {1, -1}) {
      RationalVec xi(m, Rational(0));
      xi[j] = s;
      record(std::move(xi));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (int s : {1, -1}) {
        RationalVec xi(m, Rational(0));
        xi[i] = 1;
        xi[j] = s;
        record(std::move(xi));
      }
    }
  }
  const std::vector<Rational> bases = primes(m);
  for (std::size_t p = 0; p < sampling.grid_density; ++p) {
    RationalVec xi(m);
    const std::uint64_t index = sampling.seed + p + 1;
    for (std::size_t j = 0; j < m; ++j) xi[j] = 2 * radical_inverse(index, bases[j].get_num().get_ui()) - 1;
    record(std::move(xi));
  }
  // Sparsifying descent: zero out coordinates of the current best sample while that helps.
  if (!out.sampled_signatures.empty()) {
    auto best = std::min_element(out.sampled_signatures.begin(), out.sampled_signatures.end(),
                                 [](const LeviSignature& x, const LeviSignature& y) { return witt(x) < witt(y); });
    LeviSignature current = *best;
    for (std::size_t step = 0; step < sampling.refinement_steps; ++step) {
      bool improved = false;
      for (std::size_t j = 0; j < m && !improved; ++j) {
        if (sgn(current.xi[j]) == 0) continue;
        RationalVec xi = current.xi;
        xi[j] = 0;
        if (all_zero(xi)) continue;
        LeviSignature cand = levi_signature(out, xi);
        out.sampled_signatures.push_back(cand);
        if (witt(cand) < witt(current)) {
          current = std::move(cand);
          improved = true;
        }
      }
      if (!improved) break;
    }
  }
  out.witt_lower_bound = out.sampled_signatures.empty() ? 0 : witt(out.sampled_signatures.front());
  for (const auto& s : out.sampled_signatures) out.witt_lower_bound = std::min(out.witt_lower_bound, witt(s));
  return out;
}

OrbitData orbit_data(const Subalgebra& v, const FiberData& fiber, const ExactMatrix& x) {
  if (!fiber.f0.contains(x)) throw Error(ErrorCode::InvalidArgument, "X not in f0");
  const AmbientAlgebra& k = v.ambient();
  const RealSubspace compact = antihermitian_part(v.levi());
  const auto basis = compact.basis();
  std::vector<ExactVec> images;
  for (const auto& y : basis) images.push_back(realify(bracket(y, x)));
  std::vector<ExactMatrix> kernel;
  for (const auto& c : detail::kernel(images, 2 * x.rows() * x.cols())) {
    RationalVec coeffs;
    for (const auto& e : c) coeffs.push_back(e.re());
    kernel.push_back(compact.combine(coeffs));
  }
  OrbitData out;
  out.v_X = RealSubspace::span(x.rows(), x.cols(), kernel);
  out.dim_M_X = k.dim() - out.v_X.dim();
  // exp(X) is transcendental for rational Hermitian X != 0, so only X = 0 stays exact.
  if (x.is_zero()) {
    out.exact = true;
    out.conjugated = v;
  } else {
    const CMat e = hermitian_exp(to_numeric(x));
    const CMat einv = hermitian_exp(-to_numeric(x));
    for (const auto& y : v.basis()) out.conjugated_numeric.push_back(e * to_numeric(y) * einv);
  }
  return out;
}

CohomologyRanges cohomology_ranges(std::size_t r, std::size_t nu, std::size_t hd) {
  if (r > nu) throw Error(ErrorCode::InvalidArgument, "pseudoconcavity r exceeds the CR dimension");
  CohomologyRanges out{r, nu, hd, {}, {}};
  for (std::size_t j = 0; j + hd < r; ++j) out.finite_iso_low.push_back(j);
  for (std::size_t j = nu - r + 1; j <= nu; ++j) out.finite_iso_high.push_back(j);
  return out;
}

}  // namespace crmostow
