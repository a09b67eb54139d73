#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "crmostow/random.hpp"
#include "report.hpp"

namespace crmostow::cli {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Catalog expectations on the default entries plus the cheap Grassmannian sweep.
/// overrides maps entry name -> {field: value} and replaces expected values.
std::vector<Check> structural_suite(const Json& overrides = Json::object());
/// Jacobi identities, minor inequality, counterexample and distance invariance.
std::vector<Check> numeric_suite(std::uint64_t seed);

/// Largest |g(theta_Z0 + t theta_T, theta_Zn)| relative to the norms along exp(tH), for a
/// random block parabolic with H, T in its Levi part, Z0 in the Levi part and Zn in the nilradical.
double jacobi_orthogonality_defect(Rng& rng, std::size_t n);
/// Relative error of the central difference of exp(H + sX) at s = 0 against
/// [exp H, Y] + 2 T exp H for the split X = [H, Y] + 2T.
double exp_differential_defect(Rng& rng, std::size_t n);

/// TAP-like listing; returns the number of failed checks.
std::size_t print_tap(std::ostream& os, const std::vector<Check>& checks);

}  // namespace crmostow::cli
