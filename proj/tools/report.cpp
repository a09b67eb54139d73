#include "report.hpp"

#include <sstream>

namespace crmostow::cli {

namespace {

Json tagged(Json value, const char* source = "computed") { return Json{{"value", std::move(value)}, {"source", source}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "matrix entries must be integers or rational strings, got " + j.dump());
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
  throw Error(ErrorCode::InvalidArgument, "matrix entries must be numbers or rational strings, got " + j.dump());
}

void require_entry_pair(const Json& e) {
  if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidArgument, "matrix entries must be [re, im] pairs");
}

Json basis_json(const std::vector<ExactMatrix>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back(exact_matrix_json(b));
  return out;
}

Json ambient_json(const AmbientAlgebra& k) {
  if (k.kind() == AmbientKind::SpecialLinear) return "sl";
  return Json{{"blocks", k.block_sizes()}};
}

Json expected_json(const CatalogEntry& entry) {
  const ExpectedReport& ex = entry.expected;
  Json out;
  out["n_reductive"] = tagged(ex.n_reductive, "paper-expected");
  if (ex.strict_hnr) out["strict_hnr"] = tagged(*ex.strict_hnr, "paper-expected");
  if (ex.hnr) out["hnr"] = tagged(*ex.hnr, "paper-expected");
  if (ex.cr_type) out["cr_type"] = tagged(Json::array({ex.cr_type->first, ex.cr_type->second}), "paper-expected");
  if (ex.cr_dim) out["cr_dim"] = tagged(*ex.cr_dim, "paper-expected");
  if (ex.dim_M_minus) out["dim_M_minus"] = tagged(*ex.dim_M_minus, "derived");
  if (ex.quoted_dim_M_minus) out["dim_M_minus_quoted"] = tagged(*ex.quoted_dim_M_minus, "paper-expected");
  if (ex.witt) out["witt"] = tagged(*ex.witt, "paper-expected");
  if (ex.f0_dim) out["f0_dim"] = tagged(*ex.f0_dim, "paper-expected");
  if (ex.l_dim) out["l_dim"] = tagged(*ex.l_dim, "paper-expected");
  if (ex.w) out["w_dim"] = tagged(ex.w->dim(), "paper-expected");
  if (ex.normalizer_is_q_max) out["normalizer_is_q_max"] = tagged(*ex.normalizer_is_q_max, "paper-expected");
  if (ex.regularization) out["regularization_dim"] = tagged(ex.regularization->dim(), "paper-expected");
  out["notes"] = ex.notes;
  return out;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed:
      return kNotClosed;
    case ErrorCode::IrrationalWeights:
      return kIrrationalWeights;
    case ErrorCode::NonConvergent:
      return kNonConvergent;
    case ErrorCode::RestartDisagreement:
      return kNonUnique;
    default:
      return kFailure;
  }
}

Json exact_matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Json::array({to_string(m(i, j).re()), to_string(m(i, j).im())}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix exact_matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorCode::ShapeMismatch, "basis matrix must have n rows");
  ExactVec e;
  e.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::ShapeMismatch, "basis matrix must have n columns");
    for (const auto& x : row) {
      require_entry_pair(x);
      e.emplace_back(rational_from_json(x[0]), rational_from_json(x[1]));
    }
  }
  return ExactMatrix(n, n, std::move(e));
}

Json numeric_matrix_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat numeric_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidArgument, "matrix must be a non-empty list of rows");
  const std::size_t n = j.size();
  CMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw Error(ErrorCode::ShapeMismatch, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      require_entry_pair(j[i][k]);
      out(i, k) = {real_from_json(j[i][k][0]), real_from_json(j[i][k][1])};
    }
  }
  return out;
}

ParsedSpec parse_subalgebra_spec(const Json& spec) {
  if (!spec.is_object()) throw Error(ErrorCode::InvalidArgument, "SubalgebraSpec must be a JSON object");
  if (!spec.contains("n") || !spec["n"].is_number_integer() || spec["n"].get<long>() < 1) {
    throw Error(ErrorCode::InvalidArgument, "SubalgebraSpec needs a positive integer \"n\"");
  }
  const std::size_t n = spec["n"].get<std::size_t>();
  const Json ambient = spec.value("ambient", Json("sl"));
  std::optional<AmbientAlgebra> k;
  if (ambient == "sl") {
    k = AmbientAlgebra::sl(n);
  } else if (ambient.is_object() && ambient.contains("blocks")) {
    const auto sizes = ambient["blocks"].get<std::vector<std::size_t>>();
    std::size_t total = 0;
    for (auto b : sizes) total += b;
    if (total != n) throw Error(ErrorCode::ShapeMismatch, "block sizes must add up to n");
    k = AmbientAlgebra::blocks(sizes);
  } else {
    throw Error(ErrorCode::InvalidArgument, "ambient must be \"sl\" or {\"blocks\": [...]}");
  }
  if (!spec.contains("basis") || !spec["basis"].is_array()) throw Error(ErrorCode::InvalidArgument, "missing \"basis\"");
  std::vector<ExactMatrix> basis;
  for (const auto& m : spec["basis"]) basis.push_back(exact_matrix_from_json(m, n));
  Subspace space = basis.empty() ? Subspace::zero(n, n) : echelonize(n, n, basis);
  ParsedSpec out{Subalgebra(*k, std::move(space)), std::nullopt, std::nullopt, {}};
  if (spec.contains("name")) out.name = spec["name"].get<std::string>();
  if (spec.contains("catalog")) {
    out.catalog_entry = spec["catalog"].at("entry").get<std::string>();
    out.catalog_params = spec["catalog"].value("params", Json::object()).get<CatalogParams>();
  }
  return out;
}

Json export_subalgebra_spec(const Subalgebra& v, const std::string& name) {
  Json out;
  out["schema"] = kSchema;
  out["name"] = name;
  out["n"] = v.ambient().n();
  out["ambient"] = ambient_json(v.ambient());
  out["basis"] = basis_json(v.basis());
  return out;
}

Json export_subalgebra_spec(const CatalogEntry& entry) {
  std::ostringstream name;
  name << entry.name;
  if (!entry.params.empty()) {
    name << "(";
    bool first = true;
    for (const auto& [key, value] : entry.params) {
      name << (first ? "" : ",") << key << "=" << value;
      first = false;
    }
    name << ")";
  }
  Json out = export_subalgebra_spec(entry.v, name.str());
  out["catalog"] = Json{{"entry", entry.name}, {"params", entry.params}};
  return out;
}

Json analyze_report(const Json& input, const ParsedSpec& parsed, const AnalyzeOptions& options) {
  const Subalgebra& v = parsed.v;
  Json r;
  r["schema"] = kSchema;
  r["input"] = input;
  Json warnings = Json::array();
  const NReductiveVerdict nred = is_n_reductive(v);
  r["n_reductive"] = tagged(nred.value);
  r["dims"] = Json{{"v", v.dim()}, {"nr", nred.nr.dim()}, {"levi", nred.levi.dim()}, {"k", v.ambient().dim()}};
  if (!nred.value) {
    r["n_reductive_reason"] = nred.reason;
    warnings.push_back("v is not n-reductive; the remaining invariants are not defined");
  } else {
    const RegularizationTrace reg = parabolic_regularization(v);
    Json chain = Json::array();
    for (const auto& s : reg.chain) chain.push_back(s.dim());
    r["regularization"] = Json{{"chain_dims", chain}, {"steps", reg.steps}, {"fixed_point_dim", reg.fixed_point.dim()}};

    const ParabolicSubalgebra qmin = q_min(v);
    const ParabolicSubalgebra qmax = q_max(v, qmin);
    r["q_min"] = Json{{"dim", qmin.dim()}, {"parabolic", true}, {"sigma_split", qmin.sigma_split()}};
    r["q_max"] = Json{{"dim", qmax.dim()}, {"parabolic", true}, {"sigma_split", qmax.sigma_split()}};
    const Subalgebra normal = normalizer(v.ambient(), v.nr());
    const bool normal_parabolic = is_parabolic(normal).parabolic;
    r["normalizer_nr"] = Json{{"dim", normal.dim()},
                              {"parabolic", normal_parabolic},
                              {"equals_q_max", normal_parabolic && normal == qmax.q()}};

    const HnrVerdict h = hnr_verdict(v);
    r["w"] = Json{{"dim", h.w.dim()}, {"w_n_dim", h.w_n.dim()}, {"basis", basis_json(h.w.basis())}};
    r["hnr"] = tagged(h.hnr);
    r["strict_hnr"] = tagged(h.strict_hnr);

    const CRType cr = cr_type(v);
    r["cr_type"] = tagged(Json::array({cr.cr_dim, cr.cr_codim}));
    r["cr_dim"] = tagged(cr.cr_dim);
    r["dim_M_minus"] = tagged(cr.dim_M_minus);
    r["dim_M0"] = cr.dim_M0;

    try {
      const ParabolicSubalgebra q = fiber_parabolic_of_w(h.w);
      const FiberData fiber = fiber_data(v, h.w, q);
      r["f0_dim"] = tagged(fiber.f0.dim());
      r["l_dim"] = tagged(fiber.l.dim());
      r["fiber_parabolic_dim"] = q.dim();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MembershipFailed) throw;
      warnings.push_back(std::string("fiber data unavailable: ") + e.what());
    }

    Json sampling{{"grid_density", options.sampling.grid_density},
                  {"refinement_steps", options.sampling.refinement_steps},
                  {"seed", options.sampling.seed}};
    try {
      const LeviReport levi = levi_report(v, options.sampling);
      r["witt_lower_bound"] = tagged(levi.witt_lower_bound);
      r["levi"] = Json{{"characteristic_dim", levi.characteristic_basis.size()},
                       {"samples", levi.sampled_signatures.size()},
                       {"sampling", sampling}};
      const CohomologyRanges c = cohomology_ranges(levi.witt_lower_bound, cr.cr_dim, options.hd);
      r["cohomology_ranges"] = Json{{"r", c.r},
                                    {"nu", c.nu},
                                    {"hd", c.hd},
                                    {"finite_iso_low", c.finite_iso_low},
                                    {"finite_iso_high", c.finite_iso_high}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyCharacteristicSpace) throw;
      r["levi"] = Json{{"empty", true}, {"sampling", sampling}};
      warnings.push_back("v + sigma(v) = k: no characteristic covectors, so no Levi form or cohomology ranges");
    }
  }
  if (parsed.catalog_entry) r["expected"] = expected_json(build(*parsed.catalog_entry, parsed.catalog_params));
  r["warnings"] = warnings;
  return r;
}

Json decomposition_json(const MostowDecomposition& d, const MostowStructure& s) {
  Json out;
  out["schema"] = kSchema;
  out["fiber"] = s.fiber;
  out["unique"] = s.unique;
  out["u"] = numeric_matrix_json(d.u);
  out["X"] = numeric_matrix_json(d.x);
  out["Z"] = numeric_matrix_json(d.z);
  out["v"] = numeric_matrix_json(d.v);
  out["X_norm"] = d.x.norm();
  out["X_coords"] = std::vector<double>(d.x_coords.data(), d.x_coords.data() + d.x_coords.size());
  Json z = Json::array();
  for (Eigen::Index j = 0; j < d.z_coords.size(); ++j) z.push_back(Json::array({d.z_coords(j).real(), d.z_coords(j).imag()}));
  out["Z_coords"] = z;
  out["v_params"] = std::vector<double>(d.v_params.data(), d.v_params.data() + d.v_params.size());
  out["residual"] = d.residual;
  out["restarts_agree"] = d.restarts_agree;
  out["restarts_run"] = d.restarts_run;
  out["restarts_converged"] = d.restarts_converged;
  out["restart_x_norms"] = d.x_norms;
  return out;
}

}  // namespace crmostow::cli
