#include "graphineq/config.hpp"

#include <charconv>
#include <sstream>

#include "graphineq/errors.hpp"

namespace graphineq {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_real(int line, const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) fail(line, key + ": trailing characters in '" + value + "'");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, key + ": cannot parse number '" + value + "'");
    }
}

std::int64_t parse_int(int line, const std::string& key, const std::string& value) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        fail(line, key + ": cannot parse integer '" + value + "'");
    return v;
}

bool valid_example(const std::string& e) {
    if (e == "line" || e == "log-line") return true;
    for (const char* prefix : {"lattice:", "quadrant:"}) {
        const std::string p(prefix);
        if (e.rfind(p, 0) == 0) {
            const std::string rest = e.substr(p.size());
            if (rest.empty()) return false;
            for (char ch : rest)
                if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
            const int d = std::stoi(rest);
            return d >= 1 && d <= 5;
        }
    }
    return false;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "malformed line (expected `key = value`)");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        if (value.empty()) fail(lineno, "empty value for key '" + key + "'");

        if (key == "suite") {
            static const char* suites[] = {"identities", "hardy", "eikonal", "rellich",
                                           "green",      "solve", "all"};
            bool ok = false;
            for (const char* s : suites) ok = ok || value == s;
            if (!ok) fail(lineno, "unknown suite '" + value + "'");
            cfg.suite = value;
        } else if (key == "example") {
            if (!valid_example(value))
                fail(lineno, "unknown example '" + value +
                                 "' (expected line, lattice:<d>, quadrant:<d>, log-line)");
            cfg.example = value;
        } else if (key == "alpha") {
            const double v = parse_real(lineno, key, value);
            if (!(v > 0.0 && v < 1.0))
                fail(lineno, "alpha must lie in (0,1), got " + value);
            cfg.alpha = v;
        } else if (key == "c") {
            const double v = parse_real(lineno, key, value);
            if (!(v > 0.0)) fail(lineno, "c must be positive, got " + value);
            cfg.c = v;
        } else if (key == "epsilon") {
            const double v = parse_real(lineno, key, value);
            if (!(v > 0.0 && v < 1.0)) fail(lineno, "epsilon must lie in (0,1), got " + value);
            cfg.epsilon = v;
        } else if (key == "degree") {
            const double v = parse_real(lineno, key, value);
            if (!(v >= 2.0)) fail(lineno, "degree must be >= 2, got " + value);
            cfg.degree = v;
        } else if (key == "dim") {
            const auto v = parse_int(lineno, key, value);
            if (v < 1 || v > 5) fail(lineno, "dim must lie in 1..5, got " + value);
            cfg.dim = static_cast<int>(v);
        } else if (key == "radius") {
            const auto v = parse_int(lineno, key, value);
            if (v < 1) fail(lineno, "radius must be >= 1, got " + value);
            cfg.radius = static_cast<int>(v);
        } else if (key == "steps") {
            const auto v = parse_int(lineno, key, value);
            if (v < 1) fail(lineno, "steps must be >= 1, got " + value);
            cfg.steps = static_cast<int>(v);
        } else if (key == "samples") {
            const auto v = parse_int(lineno, key, value);
            if (v < 0) fail(lineno, "samples must be >= 0, got " + value);
            cfg.samples = v;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(lineno, key, value));
        } else if (key == "support_radius") {
            const auto v = parse_int(lineno, key, value);
            if (v < 1) fail(lineno, "support_radius must be >= 1, got " + value);
            cfg.support_radius = static_cast<int>(v);
        } else if (key == "stages") {
            const auto v = parse_int(lineno, key, value);
            if (v < 1) fail(lineno, "stages must be >= 1, got " + value);
            cfg.stages = static_cast<int>(v);
        } else if (key == "stop_tol") {
            const double v = parse_real(lineno, key, value);
            if (!(v > 0.0)) fail(lineno, "stop_tol must be positive, got " + value);
            cfg.stop_tol = v;
        } else if (key == "out") {
            cfg.out = value;
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }
    return cfg;
}

std::string RunConfig::echo() const {
    std::ostringstream out_text;
    out_text << "alpha = " << format_double(alpha) << '\n';
    out_text << "c = " << format_double(c) << '\n';
    out_text << "degree = " << format_double(degree) << '\n';
    out_text << "dim = " << dim << '\n';
    out_text << "epsilon = " << format_double(epsilon) << '\n';
    out_text << "example = " << example << '\n';
    if (!out.empty()) out_text << "out = " << out << '\n';
    out_text << "radius = " << radius << '\n';
    out_text << "samples = " << samples << '\n';
    out_text << "seed = " << seed << '\n';
    out_text << "stages = " << stages << '\n';
    out_text << "steps = " << steps << '\n';
    out_text << "stop_tol = " << format_double(stop_tol) << '\n';
    out_text << "suite = " << suite << '\n';
    out_text << "support_radius = " << support_radius << '\n';
    return out_text.str();
}

Json RunConfig::to_json() const {
    Json j;
    j["suite"] = suite;
    j["example"] = example;
    j["alpha"] = alpha;
    j["c"] = c;
    j["epsilon"] = epsilon;
    j["degree"] = degree;
    j["dim"] = dim;
    j["radius"] = radius;
    j["steps"] = steps;
    j["samples"] = samples;
    j["seed"] = seed;
    j["support_radius"] = support_radius;
    j["stages"] = stages;
    j["stop_tol"] = stop_tol;
    // the output path is excluded: report bytes must not depend on where the
    // report is written
    return j;
}

} // namespace graphineq
