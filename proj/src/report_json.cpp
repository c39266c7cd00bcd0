#include "gfdiag/report_json.hpp"

#include "gfdiag/poly_text.hpp"

namespace gfdiag {

nlohmann::json to_json(const ClaimReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["first_mismatch"] = r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["expected_status"] = to_string(r.expected);
  j["matches_expectation"] = r.matches_expectation();
  j["note"] = r.note;
  j["runtime_us"] = r.runtime_us;
  return j;
}

nlohmann::json to_json(const PoleClass& p) {
  return {{"factor", to_string(p.factor)},
          {"multiplicity", p.multiplicity},
          {"degree", p.degree()},
          {"classification", p.kept ? "kept" : p.split ? "split" : "discarded"},
          {"leading_coefficient_at_z0", to_string(p.reason)}};
}

nlohmann::json to_json(const DiagnosticReport& r) {
  nlohmann::json poles = nlohmann::json::array();
  for (const auto& p : r.poles) poles.push_back(to_json(p));
  nlohmann::json j{{"poles", poles}, {"status", to_string(r.status)}, {"checked_terms", r.checked_terms}};
  if (r.first_mismatch) {
    j["first_mismatch"] = *r.first_mismatch;
    j["lhs"] = to_string(r.residue_value);
    j["rhs"] = to_string(r.series_value);
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

nlohmann::json envelope(const std::string& command, int exit_code, nlohmann::json result) {
  return {{"command", command},
          {"status", exit_code == 0 ? "ok" : "error"},
          {"exit_code", exit_code},
          {"result", std::move(result)}};
}

}  // namespace gfdiag
