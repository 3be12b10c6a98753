#pragma once

#include <cstdint>
#include <string>

#include "graphineq/report.hpp"

namespace graphineq {

/// Validated run configuration. Every field has a default; parse_config fails
/// fast on unknown keys and out-of-domain values, naming the offending line.
struct RunConfig {
    std::string suite = "identities"; // identities|hardy|eikonal|rellich|green|solve|all
    std::string example = "line";     // line|lattice:<d>|quadrant:<d>|log-line
    double alpha = 0.5;               // (0,1)
    double c = 1.0;                   // > 0, log-family floor
    double epsilon = 0.7071067811865476; // (0,1)
    double degree = 2.0;              // >= 2
    int dim = 3;                      // 1..5
    int radius = 48;                  // >= 1
    int steps = 2048;                 // >= 1
    std::int64_t samples = 1000;      // >= 0
    std::uint64_t seed = 0;
    int support_radius = 200;         // >= 1
    int stages = 8;                   // >= 1
    double stop_tol = 1e-10;          // > 0
    std::string out;                  // report path; empty means stdout only

    bool operator==(const RunConfig&) const = default;

    /// Canonical `key = value` text with every key present.
    std::string echo() const;
    Json to_json() const;
};

/// Parses the flat key-value grammar: one `key = value` per line, `#` starts
/// a comment, blank lines ignored. Throws ConfigError with the line number on
/// unknown keys, malformed lines, and out-of-domain values.
RunConfig parse_config(const std::string& text);

} // namespace graphineq
