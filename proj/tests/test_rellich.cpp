#include <doctest.h>

#include <cmath>
#include <map>

#include "graphineq/domain.hpp"
#include "graphineq/errors.hpp"
#include "graphineq/rellich.hpp"
#include "graphineq/suite.hpp"

using namespace graphineq;

TEST_CASE("rellich margin: zero phi and the delta_1 hand case") {
    const RellichInstance inst = checks::line_power_instance(0.5);
    const RellichMargin zero = rellich_margin(inst, VertexFunction::zero());
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.margin == 0.0);

    // phi = delta_1: Delta(phi)(1) = 2, so lhs = 2/sqrt(2-sqrt 2) and
    // rhs = (1-gamma) sqrt(2-sqrt 2)
    const RellichMargin dm = rellich_margin(inst, VertexFunction::delta(1));
    const double w1 = 2.0 - std::sqrt(2.0);
    CHECK(dm.lhs == doctest::Approx(2.0 / std::sqrt(w1)).epsilon(1e-14));
    CHECK(dm.rhs == doctest::Approx((1.0 - inst.gamma) * std::sqrt(w1)).epsilon(1e-14));
    CHECK(dm.margin > 0.0);

    CHECK_THROWS_AS((void)rellich_margin(inst, VertexFunction::delta(0)), DomainViolation);
}

TEST_CASE("the g = w case reduces to unweighted norms") {
    RellichInstance inst;
    inst.op = SchrodingerOperator::laplacian(make_graph("line"));
    inst.w = line_hardy_weight();
    inst.g = [](VertexId x) { return line_weight(static_cast<std::int64_t>(x)); };
    inst.gamma = 0.5;
    inst.domain = [](VertexId x) { return x >= 1; };

    std::map<VertexId, double> phiv{{2, 1.0}, {3, -0.5}, {4, 2.0}};
    const VertexFunction phi = VertexFunction::from_support(phiv);
    const RellichMargin rm = rellich_margin(inst, phi);

    double lhs_sq = 0.0, rhs_sq = 0.0;
    for (VertexId x : phi.support()) {
        const double hphi = schrodinger_apply(inst.op, phi, x);
        lhs_sq += hphi * hphi; // g/w = 1
        const double w = line_weight(static_cast<std::int64_t>(x));
        rhs_sq += w * w * phi(x) * phi(x); // g w = w^2
    }
    CHECK(rm.lhs == doctest::Approx(std::sqrt(lhs_sq)).epsilon(1e-14));
    CHECK(rm.rhs == doctest::Approx(0.5 * std::sqrt(rhs_sq)).epsilon(1e-14));
}

TEST_CASE("scaling covariance: margin(c phi) = |c| margin(phi)") {
    const RellichInstance inst = checks::line_power_instance(0.5);
    std::map<VertexId, double> phiv{{1, 0.3}, {2, -1.2}, {5, 0.7}, {9, 0.1}};
    const VertexFunction phi = VertexFunction::from_support(phiv);
    const RellichMargin base = rellich_margin(inst, phi);
    for (double c : {-3.0, 0.5, 10.0}) {
        const RellichMargin scaled = rellich_margin(inst, phi.scaled(c));
        CHECK(scaled.margin ==
              doctest::Approx(std::fabs(c) * base.margin).epsilon(1e-14));
    }
}

TEST_CASE("subset consistency: parent operator vs GraphDomain restriction") {
    const RellichInstance parent_inst = checks::line_power_instance(0.5);
    const GraphDomain domain(parent_inst.op, [](VertexId x) { return x >= 1; });

    RellichInstance restricted = parent_inst;
    restricted.op = domain.restricted_operator();

    const PhiSampler sampler(checks::line_space(80, 0.5), 31);
    for (std::size_t i = 0; i < 40; ++i) {
        const VertexFunction phi = sampler(i);
        const RellichMargin a = rellich_margin(parent_inst, phi);
        const RellichMargin b = rellich_margin(restricted, phi);
        CHECK(a.margin == doctest::Approx(b.margin).epsilon(1e-14).scale(a.scale + 1e-30));
    }
}

TEST_CASE("rellich sweep: vacuous, passing, and chain-checked") {
    const RellichInstance inst = checks::line_power_instance(0.5);
    const PhiSampler sampler(checks::line_space(100, 0.5), 2024);

    const InequalityReport empty = rellich_sweep(inst, sampler, 0);
    CHECK(empty.pass);
    CHECK(empty.samples == 0);

    const InequalityReport report = rellich_sweep(inst, sampler, 150);
    CHECK(report.pass);
    CHECK(report.chain_checked);
    CHECK(report.chain_consistent);
    CHECK(report.min_rel >= -1e-9);
    CHECK(report.argmin_index != static_cast<std::size_t>(-1));
}

TEST_CASE("a sweep detects a broken instance") {
    // Inflating the Hardy weight forges an inequality that is false: with
    // w' = 50 w the claimed bound ||1_phi H phi||_{g/w'} >= (1-gamma)||phi||_{g w'}
    // fails already for small indicators. The brute-force indicator search is
    // the oracle; the sweep must find a violation too.
    RellichInstance broken = checks::line_power_instance(0.5);
    broken.w = HardyWeight::user_supplied(
        [](VertexId x) { return 50.0 * line_weight(static_cast<std::int64_t>(x)); },
        [](VertexId x) { return x >= 1; });

    std::int64_t violating_n = 0;
    for (std::int64_t n = 1; n <= 100 && violating_n == 0; ++n) {
        std::map<VertexId, double> box;
        for (std::int64_t k = 1; k <= n; ++k) box[k] = 1.0;
        if (rellich_margin(broken, VertexFunction::from_support(box)).margin < 0.0)
            violating_n = n;
    }
    REQUIRE(violating_n > 0); // oracle: some indicator violates the forged claim

    const PhiSampler sampler(checks::line_space(100, 0.5), 314);
    const InequalityReport report = rellich_sweep(broken, sampler, 50);
    CHECK_FALSE(report.pass);
    CHECK(report.min_margin < 0.0);

    // the persisted minimizer replays to the same margin
    REQUIRE(!report.argmin_phi.empty());
    const VertexFunction replayed = phi_from_json(report.argmin_phi);
    const RellichMargin again = rellich_margin(broken, replayed);
    CHECK(again.margin == report.min_margin);

    // the same phi satisfies the honest instance
    const RellichInstance honest = checks::line_power_instance(0.5);
    std::map<VertexId, double> box;
    for (std::int64_t k = 1; k <= violating_n; ++k) box[k] = 1.0;
    CHECK(rellich_margin(honest, VertexFunction::from_support(box)).margin >= 0.0);
}

TEST_CASE("q = 0 measure reduction matches the unweighted route") {
    const CheckResult r = checks::schrodinger_reduction(7, 60);
    CHECK(r.pass);
}

TEST_CASE("log-line and measure instances pass small sweeps") {
    {
        const RellichInstance inst = checks::line_log_instance();
        CHECK(inst.gamma == doctest::Approx(0.6083).epsilon(1e-3));
        const PhiSampler sampler(checks::line_space(80, 0.5), 5);
        const InequalityReport rep = rellich_sweep(inst, sampler, 100);
        CHECK(rep.pass);
        CHECK(rep.chain_consistent);
    }
    {
        const RellichInstance inst = checks::line_measure_instance(0.5);
        const PhiSampler sampler(checks::line_space(80, 0.5), 6);
        const InequalityReport rep = rellich_sweep(inst, sampler, 100);
        CHECK(rep.pass);
        CHECK(rep.chain_consistent);
    }
}

TEST_CASE("quadrant instance passes a small sweep") {
    const RellichInstance inst = checks::quadrant_instance(2, 0.5);
    const SampleSpace space = checks::quadrant_space(2, 40, 0.5);
    const PhiSampler sampler(space, 12);
    const InequalityReport rep = rellich_sweep(inst, sampler, 100, 1e-9, space.coords);
    CHECK(rep.pass);
    CHECK(rep.chain_consistent);
}
