#pragma once

#include <cstdint>
#include <vector>

#include "crmostow/catalog.hpp"
#include "crmostow/mostow.hpp"
#include "crmostow/random.hpp"

namespace testing {

using namespace crmostow;

/// Matrix unit from 1-based indices.
inline ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j) { return ExactMatrix::unit(n, i - 1, j - 1); }

inline ExactMatrix diag(std::initializer_list<long> d) {
  ExactVec v;
  for (long x : d) v.emplace_back(x);
  return ExactMatrix::diagonal(v);
}

inline Subspace span(const std::vector<ExactMatrix>& xs) { return echelonize(xs.front().rows(), xs.front().cols(), xs); }

inline Subalgebra sub(std::size_t n, const std::vector<ExactMatrix>& xs) {
  return Subalgebra(AmbientAlgebra::sl(n), span(xs));
}

inline Subalgebra borel(std::size_t n) {
  std::vector<ExactMatrix> g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.push_back(ExactMatrix::unit(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) g.push_back(ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1));
  return sub(n, g);
}

inline Subalgebra strictly_upper(std::size_t n) {
  std::vector<ExactMatrix> g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.push_back(ExactMatrix::unit(n, i, j));
  return sub(n, g);
}

inline Subalgebra cartan(std::size_t n) {
  std::vector<ExactMatrix> g;
  for (std::size_t i = 0; i + 1 < n; ++i) g.push_back(ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1));
  return sub(n, g);
}

/// Small random Gaussian-rational matrix with entries in [-range, range] + i[-range, range].
inline ExactMatrix random_exact(std::size_t n, Rng& rng, long range = 2, bool complex = true) {
  std::uniform_int_distribution<long> d(-range, range);
  ExactVec e;
  for (std::size_t i = 0; i < n * n; ++i) e.emplace_back(Rational(d(rng)), Rational(complex ? d(rng) : 0));
  return ExactMatrix(n, n, std::move(e));
}

inline ExactMatrix random_exact_traceless(std::size_t n, Rng& rng, long range = 2) {
  ExactMatrix m = random_exact(n, rng, range);
  const ExactScalar t = m.trace() / ExactScalar(static_cast<long>(n));
  return m - t * ExactMatrix::identity(n);
}

/// Random upper triangular traceless matrix (so random solvable subalgebras can be generated).
inline ExactMatrix random_upper(std::size_t n, Rng& rng, bool strict) {
  std::uniform_int_distribution<long> d(-2, 2);
  ExactVec e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = strict ? i + 1 : i; j < n; ++j) e[i * n + j] = ExactScalar(d(rng));
  ExactMatrix m(n, n, std::move(e));
  const ExactScalar t = m.trace() / ExactScalar(static_cast<long>(n));
  return m - t * ExactMatrix::identity(n);
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testing

namespace testing {

/// Data on which the naive fiber gives several decompositions: v = span{Z} for the
/// nilpotent counterexample Z, and a zeta near the singular point exp(H/2).
struct NonUniqueCase {
  Subalgebra v;
  CMat zeta;
  MostowStructure structure;
  /// Restart seed at which the disagreement shows.
  std::uint64_t seed = 0;
};

inline NonUniqueCase non_unique_case() {
  const Counterexample ce = counterexample_search();
  Subalgebra v(AmbientAlgebra::sl(3), span({to_exact(ce.z)}));
  MostowStructure s = naive_mostow_structure(v);
  Rng rng(5);
  const double eps = 0.3;
  for (int trial = 0; trial < 40; ++trial) {
    const CMat w = random_fiber_element(s, rng, eps);
    CMat zeta = hermitian_exp(ce.h / 2 + w) * expm(std::complex<double>(0.1 * eps, 0) * ce.z);
    zeta /= std::pow(zeta.determinant(), 1.0 / 3);
    MostowOptions o;
    o.seed = static_cast<std::uint64_t>(trial);
    try {
      if (!mostow_decompose(zeta, s, o).restarts_agree) return {v, zeta, s, o.seed};
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::NoRootFound, "no zeta with disagreeing restarts found");
}

}  // namespace testing
