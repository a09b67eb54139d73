#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "crmostow/catalog.hpp"
#include "crmostow/cr.hpp"
#include "crmostow/mostow.hpp"

namespace crmostow::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "crmostow/1";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kNotClosed = 2,
  kIrrationalWeights = 3,
  kNonConvergent = 4,
  kNonUnique = 5,
};
int exit_code_for(ErrorCode code);

Json exact_matrix_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const Json& j, std::size_t n);
Json numeric_matrix_json(const CMat& m);
/// Accepts numbers or rational strings for the real and imaginary parts.
CMat numeric_matrix_from_json(const Json& j);

struct ParsedSpec {
  Subalgebra v;
  std::optional<std::string> name;
  /// Present when the spec came from `catalog export`.
  std::optional<std::string> catalog_entry;
  CatalogParams catalog_params;
};

/// SubalgebraSpec -> Subalgebra; throws NotClosed naming the offending bracket.
ParsedSpec parse_subalgebra_spec(const Json& spec);
Json export_subalgebra_spec(const CatalogEntry& entry);
Json export_subalgebra_spec(const Subalgebra& v, const std::string& name);

struct AnalyzeOptions {
  std::size_t hd = 0;
  LeviSampling sampling;
};

/// Full pipeline report. Quantities the catalog also states carry a source tag.
Json analyze_report(const Json& input, const ParsedSpec& parsed, const AnalyzeOptions& options);

Json decomposition_json(const MostowDecomposition& d, const MostowStructure& s);

}  // namespace crmostow::cli
