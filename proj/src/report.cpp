#include "graphineq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "graphineq/errors.hpp"

namespace graphineq {

Json InequalityReport::to_json() const {
    Json j;
    j["check"] = check;
    j["samples"] = samples;
    j["tolerance_rel"] = tolerance_rel;
    if (std::isfinite(gamma)) j["gamma"] = gamma;
    j["min_margin"] = samples ? min_margin : 0.0;
    j["min_scale"] = min_scale;
    j["min_rel"] = samples ? min_rel : 0.0;
    if (argmin_index != static_cast<std::size_t>(-1)) {
        j["argmin_index"] = argmin_index;
        j["argmin_phi"] = argmin_phi;
    }
    j["rel_quantiles"] = rel_quantiles;
    j["pass"] = pass;
    if (chain_checked) j["chain_consistent"] = chain_consistent;
    return j;
}

Json CheckResult::to_json() const {
    Json j;
    j["name"] = name;
    j["pass"] = pass;
    j["worst_margin"] = worst_margin;
    j["scale"] = scale;
    if (!details.is_null()) j["details"] = details;
    return j;
}

std::array<double, 5> quantiles5(std::vector<double> xs) {
    std::array<double, 5> q{};
    if (xs.empty()) return q;
    std::sort(xs.begin(), xs.end());
    auto at = [&](double p) {
        const double idx = p * static_cast<double>(xs.size() - 1);
        const auto lo = static_cast<std::size_t>(idx);
        const auto hi = std::min(lo + 1, xs.size() - 1);
        const double frac = idx - static_cast<double>(lo);
        return xs[lo] * (1.0 - frac) + xs[hi] * frac;
    };
    q = {at(0.0), at(0.25), at(0.5), at(0.75), at(1.0)};
    return q;
}

Json phi_to_json(const VertexFunction& phi,
                 const std::function<std::vector<std::int64_t>(VertexId)>& coords) {
    Json entries = Json::array();
    const auto& supp = phi.support();
    const auto& vals = phi.support_values();
    for (std::size_t i = 0; i < supp.size(); ++i) {
        Json e;
        e["vertex"] = vertex_to_string(supp[i]);
        if (coords) e["coords"] = coords(supp[i]);
        e["value"] = vals[i];
        entries.push_back(std::move(e));
    }
    return entries;
}

VertexId vertex_from_string(const std::string& text) {
    if (text == "inf") return kInfinityVertex;
    if (text.empty()) throw ConfigError("vertex_from_string: empty label");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ConfigError("vertex_from_string: bad label '" + text + "'");
    unsigned __int128 value = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '9')
            throw ConfigError("vertex_from_string: bad label '" + text + "'");
        value = value * 10 + static_cast<unsigned>(ch - '0');
    }
    return negative ? -static_cast<VertexId>(value) : static_cast<VertexId>(value);
}

VertexFunction phi_from_json(const Json& entries) {
    if (!entries.is_array()) throw ConfigError("phi_from_json: expected an array");
    std::map<VertexId, double> values;
    for (const Json& e : entries)
        values[vertex_from_string(e.at("vertex").get<std::string>())] = e.at("value").get<double>();
    return VertexFunction::from_support(values);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    write_text_file(path, out.str());
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) throw InternalError("format_double failed");
    return std::string(buf, ptr);
}

} // namespace graphineq
