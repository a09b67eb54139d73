#include "crmostow/catalog.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace crmostow {

namespace {

/// Matrix unit from 1-based indices, matching how the examples are written down.
ExactMatrix e(std::size_t n, std::size_t i, std::size_t j) { return ExactMatrix::unit(n, i - 1, j - 1); }

ExactMatrix diag_combo(std::size_t n, const std::vector<std::pair<std::size_t, long>>& entries) {
  ExactVec d(n);
  for (const auto& [i, c] : entries) d[i - 1] = ExactScalar(c);
  return ExactMatrix::diagonal(d);
}

Subspace span_of(const std::vector<ExactMatrix>& xs) {
  const std::size_t n = xs.front().rows();
  return echelonize(n, n, xs);
}

void require_keys(const CatalogParams& params, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::InvalidArgument, "invalid parameters: unknown key '" + key + "'");
    }
  }
}

long param(const CatalogParams& params, const std::string& key, long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

CatalogEntry su22_f12(const CatalogParams& params) {
  require_keys(params, {});
  const AmbientAlgebra k = AmbientAlgebra::blocks({2, 2});
  const std::size_t n = 4;
  Subalgebra v(k, span_of({diag_combo(n, {{1, 1}, {2, -1}, {3, 1}, {4, -1}}), e(n, 1, 2) + e(n, 3, 4)}));
  ExpectedReport ex;
  ex.n_reductive = true;
  ex.cr_dim = 1;
  ex.strict_hnr = false;
  ex.hnr = true;
  ex.witt = 0;
  ex.w = span_of({diag_combo(n, {{1, 1}, {2, -1}, {3, 1}, {4, -1}}), e(n, 1, 2) + e(n, 3, 4), e(n, 2, 1) + e(n, 4, 3)});
  ex.notes = "SU(2,2) orbit of F_{1,2}(C^4): Levi-flat of CR dimension 1; w is the diagonal copy of sl_2";
  return {"su22_f12", params, k, std::move(v), std::move(ex)};
}

CatalogEntry su23_f13(const CatalogParams& params) {
  require_keys(params, {});
  const AmbientAlgebra k = AmbientAlgebra::blocks({2, 3});
  const std::size_t n = 5;
  Subalgebra v(k, span_of({diag_combo(n, {{1, 1}, {3, 1}, {4, -2}}), diag_combo(n, {{2, 1}, {5, 1}, {4, -2}}),
                           e(n, 1, 2) + e(n, 3, 5), e(n, 4, 5)}));
  ExpectedReport ex;
  ex.n_reductive = true;
  ex.strict_hnr = false;
  ex.normalizer_is_q_max = true;
  ex.notes =
      "SU(2,3) orbit of F_{1,3}(C^5); the strengthened structure is described through an orbit in "
      "F_{1,2,4}(C^5), recorded here only as a note";
  return {"su23_f13", params, k, std::move(v), std::move(ex)};
}

CatalogEntry su23_f12(const CatalogParams& params) {
  require_keys(params, {});
  const AmbientAlgebra k = AmbientAlgebra::blocks({2, 3});
  const std::size_t n = 5;
  Subalgebra v(k, span_of({diag_combo(n, {{1, 1}, {3, 1}, {5, -2}}), diag_combo(n, {{2, 1}, {4, 1}, {5, -2}}),
                           e(n, 1, 2) + e(n, 3, 4), e(n, 3, 5), e(n, 4, 5)}));
  ExpectedReport ex;
  ex.n_reductive = true;
  ex.cr_type = {{3, 4}};
  ex.cr_dim = 3;
  ex.hnr = true;
  ex.f0_dim = 4;
  ex.l_dim = 0;
  ex.w = span_of({diag_combo(n, {{1, 1}, {3, 1}, {5, -2}}), diag_combo(n, {{2, 1}, {4, 1}, {5, -2}}),
                  e(n, 1, 2) + e(n, 3, 4), e(n, 2, 1) + e(n, 4, 3), e(n, 3, 5), e(n, 4, 5)});
  ex.notes = "SU(2,3) orbit of F_{1,2}(C^5): CR manifold of type (3,4); f0 = {diag(X,-X,0) : X Hermitian 2x2}";
  return {"su23_f12", params, k, std::move(v), std::move(ex)};
}

CatalogEntry grassmann_pair(const CatalogParams& params) {
  require_keys(params, {"p", "q", "n", "k"});
  const long p = param(params, "p", 1), q = param(params, "q", 2), nn = param(params, "n", 3), kk = param(params, "k", 1);
  if (!(1 <= p && p < q && q <= nn && std::max(0L, p + q - nn - 1) <= kk && kk <= p)) {
    std::ostringstream os;
    os << "invalid parameters: need 1 <= p < q <= n and max(0, p+q-n-1) <= k <= p, got (p,q,n,k) = (" << p << ","
       << q << "," << nn << "," << kk << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const CatalogParams full{{"p", p}, {"q", q}, {"n", nn}, {"k", kk}};
  const GrassmannBlocks b = grassmann_blocks(full);
  const std::size_t n = static_cast<std::size_t>(nn) + 1;
  const std::size_t sizes[4] = {b.n1, b.n2, b.n3, b.n4};
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < 4; ++i) block.insert(block.end(), sizes[i], i + 1);
  // Allowed (row block, column block) pairs; everything else is zero.
  const std::vector<std::pair<std::size_t, std::size_t>> allowed{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
                                                                  {2, 4}, {3, 3}, {3, 4}, {4, 4}};
  std::vector<ExactMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::find(allowed.begin(), allowed.end(), std::make_pair(block[i], block[j])) != allowed.end()) {
        gens.push_back(ExactMatrix::unit(n, i, j));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1));
  const AmbientAlgebra k = AmbientAlgebra::sl(n);
  Subalgebra v(k, span_of(gens));
  ExpectedReport ex;
  ex.n_reductive = true;
  ex.strict_hnr = true;
  ex.hnr = true;
  const std::size_t nu = b.n1 * b.n2 + b.n1 * b.n3 + b.n1 * b.n4 + b.n2 * b.n4 + b.n3 * b.n4;
  const std::size_t d = 2 * b.n2 * b.n3;
  ex.cr_dim = nu;
  ex.cr_type = {{nu, d}};
  ex.dim_M_minus = nu + d;
  ex.quoted_dim_M_minus = nu + b.n2 * b.n3;
  ex.witt = static_cast<std::size_t>(p + q - 2 * kk);
  ex.f0_dim = d;
  ex.l_dim = 0;
  ex.notes = "pair of Grassmannians intersecting in dimension k; Witt index p+q-2k, CR codimension 2 n2 n3";
  return {"grassmann_pair", full, k, std::move(v), std::move(ex)};
}

CatalogEntry so_n_symmetric(const CatalogParams& params) {
  require_keys(params, {"n"});
  const long nl = param(params, "n", 3);
  if (nl < 3) throw Error(ErrorCode::InvalidArgument, "invalid parameters: need n >= 3");
  const std::size_t n = static_cast<std::size_t>(nl);
  // S = diag(1..n) + i * ones: complex symmetric, invertible, with S and conj(S) independent.
  ExactVec s(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i * n + j] = ExactScalar(i == j ? static_cast<long>(i + 1) : 0, 1);
  const ExactMatrix sinv = inverse(ExactMatrix(n, n, s));
  std::vector<ExactMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(sinv * (ExactMatrix::unit(n, i, j) - ExactMatrix::unit(n, j, i)));
  const AmbientAlgebra k = AmbientAlgebra::sl(n);
  Subalgebra v(k, span_of(gens));
  ExpectedReport ex;
  ex.n_reductive = false;
  ex.notes = "{X : X^T S + S X = 0} for a generic complex symmetric S; semisimple but not sigma-stable";
  return {"so_n_symmetric", {{"n", nl}}, k, std::move(v), std::move(ex)};
}

CatalogEntry upper_triangular_horocycle(const CatalogParams& params) {
  require_keys(params, {"n"});
  const long nl = param(params, "n", 3);
  if (nl < 2) throw Error(ErrorCode::InvalidArgument, "invalid parameters: need n >= 2");
  const std::size_t n = static_cast<std::size_t>(nl);
  std::vector<ExactMatrix> gens, borel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(ExactMatrix::unit(n, i, j));
  borel = gens;
  for (std::size_t i = 0; i + 1 < n; ++i) borel.push_back(ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1));
  const AmbientAlgebra k = AmbientAlgebra::sl(n);
  Subalgebra v(k, span_of(gens));
  ExpectedReport ex;
  ex.n_reductive = true;
  ex.strict_hnr = true;
  ex.hnr = true;
  const std::size_t nu = n * (n - 1) / 2;
  ex.cr_dim = nu;
  ex.cr_type = {{nu, n - 1}};
  ex.f0_dim = n - 1;
  ex.l_dim = 0;
  ex.regularization = span_of(borel);
  ex.notes = "strictly upper triangular matrices; regularizes to the Borel subalgebra";
  return {"upper_triangular_horocycle", {{"n", nl}}, k, std::move(v), std::move(ex)};
}

using Builder = std::function<CatalogEntry(const CatalogParams&)>;

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r{
      {"su22_f12", su22_f12},
      {"su23_f13", su23_f13},
      {"su23_f12", su23_f12},
      {"grassmann_pair", grassmann_pair},
      {"so_n_symmetric", so_n_symmetric},
      {"upper_triangular_horocycle", upper_triangular_horocycle},
  };
  return r;
}

}  // namespace

CatalogEntry build(const std::string& name, const CatalogParams& params) {
  for (const auto& [key, builder] : registry()) {
    if (key == name) return builder(params);
  }
  throw Error(ErrorCode::UnknownEntry, "unknown entry: " + name);
}

std::vector<std::string> list() {
  std::vector<std::string> out;
  for (const auto& [key, builder] : registry()) out.push_back(key);
  return out;
}

ExpectedReport expected_report(const CatalogEntry& entry) { return entry.expected; }

GrassmannBlocks grassmann_blocks(const CatalogParams& params) {
  const long p = params.at("p"), q = params.at("q"), n = params.at("n"), k = params.at("k");
  return {static_cast<std::size_t>(p - k), static_cast<std::size_t>(k), static_cast<std::size_t>(n + 1 + k - p - q),
          static_cast<std::size_t>(q - k)};
}

std::vector<CatalogParams> grassmann_parameters(std::size_t max_size) {
  std::vector<CatalogParams> out;
  for (long n = 2; n + 1 <= static_cast<long>(max_size); ++n)
    for (long p = 1; p <= n; ++p)
      for (long q = p + 1; q <= n; ++q)
        for (long k = std::max(0L, p + q - n - 1); k <= p; ++k) out.push_back({{"p", p}, {"q", q}, {"n", n}, {"k", k}});
  return out;
}

}  // namespace crmostow
