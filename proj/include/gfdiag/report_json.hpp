#pragma once

#include <json.hpp>

#include "gfdiag/claims.hpp"
#include "gfdiag/residue.hpp"

namespace gfdiag {

// Every number is serialized as a decimal string (exact integers and
// rationals) or a JSON integer for counts; no floating point anywhere.

nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const PoleClass& p);
nlohmann::json to_json(const DiagnosticReport& r);

/// {command, status, exit_code, result}
nlohmann::json envelope(const std::string& command, int exit_code, nlohmann::json result);

}  // namespace gfdiag
