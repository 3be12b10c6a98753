#include <doctest.h>

#include <cmath>

#include "graphineq/config.hpp"
#include "graphineq/errors.hpp"
#include "graphineq/suite.hpp"

using namespace graphineq;

TEST_CASE("parse_config: defaults, domains, unknown keys, line numbers") {
    const RunConfig defaults = parse_config("");
    CHECK(defaults.suite == "identities");
    CHECK(defaults.seed == 0);
    CHECK(defaults.alpha == 0.5);

    CHECK_THROWS_WITH_AS(parse_config("alpha = 1.5\n"),
                         "config line 1: alpha must lie in (0,1), got 1.5", ConfigError);
    CHECK_THROWS_AS(parse_config("wibble = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("alpha 0.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("epsilon = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite = spectra\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("example = torus:2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("dim = 7\n"), ConfigError);

    try {
        parse_config("seed = 1\n\n# fine\nsteps = bad\n");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("config echo round-trips") {
    const RunConfig cfg = parse_config("suite = rellich\nexample = quadrant:2\nalpha = 0.5\n");
    CHECK(cfg.suite == "rellich");
    CHECK(cfg.example == "quadrant:2");
    const RunConfig again = parse_config(cfg.echo());
    CHECK(again == cfg);

    RunConfig custom;
    custom.suite = "solve";
    custom.samples = 123;
    custom.stop_tol = 2.5e-9;
    custom.out = "/tmp/report.json";
    CHECK(parse_config(custom.echo()) == custom);
}

TEST_CASE("comments and blank lines are ignored") {
    const RunConfig cfg = parse_config("# full line comment\n\n  seed = 9 # trailing\n");
    CHECK(cfg.seed == 9);
}

TEST_CASE("suite reports are byte-deterministic for a fixed config") {
    RunConfig cfg;
    cfg.suite = "rellich";
    cfg.samples = 40;
    cfg.support_radius = 50;
    cfg.seed = 7;
    const SuiteReport a = run_suite(cfg);
    const SuiteReport b = run_suite(cfg);
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    CHECK(a.overall_pass);
    CHECK(!a.checks.empty());
    // ordered by name
    for (std::size_t i = 1; i < a.checks.size(); ++i)
        CHECK(a.checks[i - 1].name < a.checks[i].name);
    // schema pinned for downstream CI
    CHECK(a.to_json()["schema"] == 1);

    // the line alpha = 0.5 sweep reports the closed-form constant
    bool found = false;
    for (const CheckResult& c : a.checks) {
        if (c.name != "rellich/line_alpha_0.5") continue;
        found = true;
        CHECK(c.pass);
        CHECK(std::fabs(c.details["gamma"].get<double>() - 0.295081) < 5e-6);
    }
    CHECK(found);
}

TEST_CASE("eikonal suite passes at full scale") {
    RunConfig cfg;
    cfg.suite = "eikonal";
    const SuiteReport report = run_suite(cfg);
    CHECK(report.overall_pass);
    CHECK(report.checks.size() == 6);
}
