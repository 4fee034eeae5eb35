#pragma once

#include <string>

#include <json.hpp>

#include "twistgen/catalog.hpp"
#include "twistgen/verify.hpp"

namespace twistgen {

inline constexpr const char* tool_version = "1.0.0";

using Json = nlohmann::ordered_json;

Json report_shell(const Catalog& c, const std::string& command);
Json claim_result_json(const ClaimResult& r);
Json suite_report_json(const SuiteReport& rep);
Json validation_report_json(const ValidationReport& rep);

}  // namespace twistgen
