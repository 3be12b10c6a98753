#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphineq/vertex_function.hpp"

namespace graphineq {

using Json = nlohmann::json;

/// Result of a verification sweep over sampled test functions. pass reflects
/// relative margins: min margin >= -tolerance_rel * (that sample's scale).
struct InequalityReport {
    std::string check;
    std::size_t samples = 0;
    double tolerance_rel = 1e-9;
    double gamma = std::numeric_limits<double>::quiet_NaN();

    double min_margin = std::numeric_limits<double>::infinity();
    double min_scale = 0.0;
    double min_rel = std::numeric_limits<double>::infinity();
    std::size_t argmin_index = static_cast<std::size_t>(-1);
    Json argmin_phi; // replay artifact for the minimizing sample

    std::array<double, 5> rel_quantiles{}; // 0, 25, 50, 75, 100 percent
    bool pass = true;

    // eikonal => Rellich implication, tracked inside Rellich sweeps
    bool chain_checked = false;
    bool chain_consistent = true;

    Json to_json() const;
};

/// One named check inside a suite. wall_ms is reported on stdout only; the
/// JSON stays byte-deterministic for a fixed (config, seed, version).
struct CheckResult {
    std::string name;
    bool pass = true;
    double worst_margin = 0.0;
    double scale = 0.0;
    Json details;
    double wall_ms = 0.0;

    Json to_json() const;
};

std::array<double, 5> quantiles5(std::vector<double> xs);

/// Serializes a finitely supported function; when coords is given each entry
/// also carries the decoded coordinate tuple.
Json phi_to_json(const VertexFunction& phi,
                 const std::function<std::vector<std::int64_t>(VertexId)>& coords = nullptr);

/// Rebuilds a finitely supported function from its serialized form, so
/// persisted failure artifacts are replayable.
VertexFunction phi_from_json(const Json& entries);

VertexId vertex_from_string(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// CSV with a header row; each row is preformatted cells.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Shortest round-trip decimal for doubles, used everywhere a report prints a
/// number so that output is reproducible byte for byte.
std::string format_double(double x);

} // namespace graphineq
