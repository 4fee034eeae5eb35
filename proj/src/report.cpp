#include "twistgen/report.hpp"

#include <sstream>

namespace twistgen {

Json report_shell(const Catalog& c, const std::string& command) {
    Json j;
    j["tool"] = {{"name", "twistgen"}, {"version", tool_version}};
    std::ostringstream digest;
    digest << std::hex << catalog_digest(c);
    j["catalog"] = {{"genus", c.params.genus},
                    {"schema_version", c.schema_version},
                    {"digest", digest.str()}};
    j["command"] = command;
    return j;
}

Json claim_result_json(const ClaimResult& r) {
    Json j;
    j["id"] = r.id;
    j["status"] = status_name(r.status);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json suite_report_json(const SuiteReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["genus"] = rep.genus;
    Json rs = Json::array();
    for (const auto& r : rep.results) rs.push_back(claim_result_json(r));
    j["claims"] = rs;
    j["summary"] = {{"pass", rep.passed},
                    {"fail", rep.failed},
                    {"pass_up_to_sign", rep.up_to_sign},
                    {"skipped", rep.skipped}};
    return j;
}

Json validation_report_json(const ValidationReport& rep) {
    Json j;
    Json es = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["check"] = e.check;
        je["ok"] = e.ok;
        if (!e.detail.empty()) je["detail"] = e.detail;
        es.push_back(je);
    }
    j["checks"] = es;
    j["summary"] = {{"total", rep.entries.size()}, {"failures", rep.failures}};
    return j;
}

}  // namespace twistgen
