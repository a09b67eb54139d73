#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crmostow/lie.hpp"

namespace crmostow {

using CatalogParams = std::map<std::string, long>;

struct ExpectedReport {
  bool n_reductive = true;
  std::optional<bool> strict_hnr;
  std::optional<bool> hnr;
  /// (cr_dim, cr_codim).
  std::optional<std::pair<std::size_t, std::size_t>> cr_type;
  std::optional<std::size_t> cr_dim;
  std::optional<std::size_t> dim_M_minus;
  /// The closed-form count n1n2+n1n3+n1n4+n2n3+n2n4+n3n4 quoted for the Grassmannian
  /// family; kept separately because it disagrees with dim k - dim v.
  std::optional<std::size_t> quoted_dim_M_minus;
  std::optional<std::size_t> witt;
  std::optional<std::size_t> f0_dim;
  std::optional<std::size_t> l_dim;
  std::optional<Subspace> w;
  /// normalizer(nr(v)) is parabolic and equals q_max.
  std::optional<bool> normalizer_is_q_max;
  /// Regularization fixed point, when it is known in closed form.
  std::optional<Subspace> regularization;
  std::string notes;
};

struct CatalogEntry {
  std::string name;
  CatalogParams params;
  AmbientAlgebra ambient;
  Subalgebra v;
  ExpectedReport expected;
};

/// Throws UnknownEntry ("unknown entry") or InvalidArgument ("invalid parameters").
CatalogEntry build(const std::string& name, const CatalogParams& params = {});
std::vector<std::string> list();
ExpectedReport expected_report(const CatalogEntry& entry);

/// Admissible (p, q, n, k) for grassmann_pair with n + 1 <= max_size.
std::vector<CatalogParams> grassmann_parameters(std::size_t max_size);

/// Block sizes (n1, n2, n3, n4) of grassmann_pair.
struct GrassmannBlocks {
  std::size_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
};
GrassmannBlocks grassmann_blocks(const CatalogParams& params);

}  // namespace crmostow
