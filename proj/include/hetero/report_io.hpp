#pragma once

// Machine-readable (JSON, schema 1) and human-readable renderings of reports.
// Every exact quantity is written as its canonical string.

#include <string>
#include <vector>

#include <json.hpp>

#include "hetero/identities.hpp"
#include "hetero/verifier.hpp"

namespace hetero {

inline constexpr int kReportSchema = 1;

nlohmann::json report_to_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

nlohmann::json identities_to_json(const std::string& name, const std::vector<IdentityResult>& results);
std::string render_identities_text(const std::string& name, const std::vector<IdentityResult>& results);

/// Verdict (check, pass) pairs parsed back from either rendering; used to
/// compare the two.
std::vector<std::pair<std::string, bool>> verdicts_from_json(const nlohmann::json& document);
std::vector<std::pair<std::string, bool>> verdicts_from_text(const std::string& text);

}  // namespace hetero
