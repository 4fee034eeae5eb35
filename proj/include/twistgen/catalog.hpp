#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistgen/matrix.hpp"
#include "twistgen/surface.hpp"

namespace twistgen {

struct CurveSpec {
    std::string name;
    bool two_sided = false;
    Lift lift;                       // class over x_1..x_g
    std::vector<std::int64_t> pairing;  // signed row <x_i, curve>; sums to 0 for two-sided
};

// A curve-image statement attached to a symmetry: the symmetry maps `from`
// to `to`, conjugating the corresponding twists with sign `s`.
struct CurveClaim {
    std::string from, to;
    int sign = 1;
};

struct SymmetrySpec {
    std::string name;
    std::vector<std::int64_t> action;  // g*g row-major, columns = images of x_j
    int declared_d = 1;
    std::vector<CurveClaim> curve_claims;
    bool provisional = false;
    std::string note;

    IntMat matrix(int g) const {
        IntMat m(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) m(i, j) = action[static_cast<std::size_t>(i) * g + j];
        return m;
    }
};

struct Catalog {
    int schema_version = 1;
    SurfaceParams params;
    std::vector<CurveSpec> curves;          // insertion-ordered
    std::vector<SymmetrySpec> symmetries;   // insertion-ordered
    std::vector<std::pair<std::string, std::string>> disjoint_pairs;

    const CurveSpec* find_curve(const std::string& name) const;
    const SymmetrySpec* find_symmetry(const std::string& name) const;
    const CurveSpec& curve(const std::string& name) const;      // throws unknown_name_error
    const SymmetrySpec& symmetry(const std::string& name) const;
    bool operator==(const Catalog& o) const;
};

// Shipped default catalog for a supported genus (5 <= g <= 26).
Catalog builtin_catalog(int genus);

// Text round-trip; format documented in docs/catalog-format.md.
std::string serialize_catalog(const Catalog& c);
Catalog load_catalog(std::istream& in);
Catalog load_catalog_string(const std::string& text);

struct ValidationEntry {
    std::string check;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    int failures = 0;
    void add(const std::string& check, bool ok, const std::string& detail = "");
};

ValidationReport validate_catalog(const Catalog& c);

// FNV-1a digest of the serialized form, for reports.
std::uint64_t catalog_digest(const Catalog& c);

}  // namespace twistgen
