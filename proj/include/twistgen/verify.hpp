#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twistgen/groupalg.hpp"
#include "twistgen/rep.hpp"
#include "twistgen/words.hpp"

namespace twistgen {

enum class ClaimKind { involution, identity, curve_image, d_value, generation, catalog_action };

std::string kind_name(ClaimKind k);
ClaimKind kind_from_name(const std::string& s);

struct Claim {
    std::string id;
    ClaimKind kind = ClaimKind::identity;
    std::string word;          // involution, curve_image, d_value
    std::string lhs, rhs;      // identity
    std::string curve, target; // curve_image
    std::string sym, from, to; // catalog_action (unsigned bullet)
    std::string set_a, set_b;  // generation
    int expect = 1;            // d_value
    std::string anchor;        // source locator for the statement
    std::string note;
    std::string skip_reason;   // statement not applicable at this genus
};

enum class ClaimStatus { pass, fail, pass_up_to_sign, skipped };

std::string status_name(ClaimStatus s);

struct ClaimResult {
    std::string id;
    ClaimStatus status = ClaimStatus::fail;
    std::string detail;
    std::string witness;  // concrete data on failure
    double millis = 0;
};

struct NamedSet {
    std::string name;
    std::vector<std::string> words;
};

struct DerivedCurve {
    std::string name;
    std::string word;    // applied to...
    std::string source;  // ...this catalog curve
};

struct ReplaySuite {
    std::string id;
    int genus = 0;
    MacroTable macros;
    std::vector<NamedSet> sets;
    std::vector<DerivedCurve> defines;
    std::vector<Claim> claims;
};

struct VerifyOptions {
    bool strict_signs = false;
    bool enable_f3 = false;   // run generation claims over F3 as well
    int f3_max_dim = 9;
    GroupOptions group;
};

struct SuiteReport {
    std::string suite;
    int genus = 0;
    std::vector<ClaimResult> results;
    int passed = 0, failed = 0, up_to_sign = 0, skipped = 0;
    double total_ms = 0;
};

// All suite identifiers in the fixed replay inventory.
std::vector<std::string> all_suite_ids();

// Suites applicable at this genus, in a fixed order.
std::vector<std::string> suite_ids_for(int genus);

ReplaySuite builtin_suite(const std::string& id, int genus);
std::vector<ReplaySuite> builtin_suites(int genus);

// Working catalog with the suite's derived curves bound.
Catalog bind_derived_curves(const Catalog& c, const ReplaySuite& s);

ClaimResult run_claim(const Catalog& c, const ReplaySuite& s, const Claim& claim,
                      const VerifyOptions& opt = {});
SuiteReport run_suite(const Catalog& c, const ReplaySuite& s, const VerifyOptions& opt = {});

// Resolve a named generator set (from the suite) to its word list.
const NamedSet* find_set(const ReplaySuite& s, const std::string& name);

// Claim-file round trip; format documented in docs/claim-format.md.
std::string serialize_suite(const ReplaySuite& s);
ReplaySuite load_suite(std::istream& in);
ReplaySuite load_suite_string(const std::string& text);

}  // namespace twistgen
