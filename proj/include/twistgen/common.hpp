#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistgen {

// Error taxonomy. The CLI maps these onto its exit-code contract:
// usage/data problems -> 2, resource caps -> 3.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : error {
    std::size_t line = 0, column = 0;
    parse_error(const std::string& msg, std::size_t ln, std::size_t col)
        : error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};

struct unknown_name_error : error {
    explicit unknown_name_error(const std::string& name)
        : error("unknown name: " + name) {}
};

struct genus_error : error {
    explicit genus_error(const std::string& msg) : error(msg) {}
};

struct invariant_error : error {
    explicit invariant_error(const std::string& msg) : error(msg) {}
};

struct resource_error : error {
    explicit resource_error(const std::string& msg) : error(msg) {}
};

struct applicability_error : error {
    explicit applicability_error(const std::string& msg) : error(msg) {}
};

}  // namespace twistgen
