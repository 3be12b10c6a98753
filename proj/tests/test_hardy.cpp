#include <doctest.h>

#include <cmath>
#include <random>

#include "graphineq/errors.hpp"
#include "graphineq/hardy.hpp"
#include "graphineq/rellich.hpp"
#include "graphineq/sampler.hpp"
#include "graphineq/suite.hpp"

using namespace graphineq;

namespace {

VertexFunction n_on_naturals() {
    return VertexFunction::lazy([](VertexId x) { return static_cast<double>(x); },
                                [](VertexId x) { return x >= 0; }, "N_0");
}

} // namespace

TEST_CASE("line weight closed form: endpoint value and hand cases") {
    CHECK(std::fabs(line_weight(1) - (2.0 - std::sqrt(2.0))) <= 1e-15);
    const double w2 = 2.0 - std::sqrt(1.5) - std::sqrt(0.5);
    CHECK(line_weight(2) == doctest::Approx(w2).epsilon(1e-13));
    CHECK(line_weight(2) == doctest::Approx(0.0681483).epsilon(1e-5));
    CHECK_THROWS_AS((void)line_weight(0), DomainViolation);
}

TEST_CASE("line weight series agrees with the closed form") {
    CHECK_THROWS_AS((void)line_weight_series(1, 10), DomainViolation);
    CHECK(std::fabs(line_weight(10) - line_weight_series(10, 15)) <= 1e-12);
    double worst = 0.0;
    for (std::int64_t k = 2; k <= 100; ++k)
        worst = std::max(worst, std::fabs(line_weight(k) - line_weight_series(k, 20)));
    CHECK(worst <= 1e-12);
    // 30 terms crosses from exact 128-bit binomials into the log-gamma branch
    CHECK(std::fabs(line_weight(2) - line_weight_series(2, 30)) <= 1e-12);
}

TEST_CASE("line weight beats 1/(4k^2)") {
    CHECK(line_weight(1) > 0.25);
    for (std::int64_t k = 2; k <= 2000; ++k) {
        const double bound = 0.25 / (static_cast<double>(k) * static_cast<double>(k));
        CHECK(line_weight(k) > bound);
    }
}

TEST_CASE("quadrant weight: additivity and lower bound") {
    const std::int64_t ones2[] = {1, 1};
    CHECK(quadrant_weight(ones2).value == doctest::Approx(2.0 * (2.0 - std::sqrt(2.0))));
    for (int d = 2; d <= 5; ++d) {
        std::vector<std::int64_t> ones(static_cast<std::size_t>(d), 1);
        CHECK(quadrant_weight(ones).value ==
              doctest::Approx(d * (2.0 - std::sqrt(2.0))).epsilon(1e-14));
    }
    const std::int64_t k[] = {2, 5, 9};
    const auto qw = quadrant_weight(k);
    CHECK(qw.value > qw.lower_bound);
    CHECK(qw.lower_bound == doctest::Approx(0.25 * (1.0 / 4 + 1.0 / 25 + 1.0 / 81)));
    const std::int64_t bad[] = {0, 2};
    CHECK_THROWS_AS((void)quadrant_weight(bad), DomainViolation);
}

TEST_CASE("supersolution weight on the line reproduces the closed form") {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const HardyWeight w = supersolution_weight(op, n_on_naturals(), 0.5, true,
                                               [](VertexId x) { return x >= 1; });
    CHECK(w.provenance() == HardyWeight::Provenance::Supersolution);
    for (VertexId k = 1; k <= 200; ++k) {
        const double direct = w(k);
        const double closed = line_weight(static_cast<std::int64_t>(k));
        CHECK(std::fabs(direct - closed) <=
              1e-11 * (direct + 1.0)); // both routes, shallow cancellation at large k
    }
    // w(x) u^a(x) = Delta(u^a)(x) within 1e-12 relative (round-trip invariant)
    const VertexFunction sqrt_n = VertexFunction::lazy(
        [](VertexId x) { return std::sqrt(static_cast<double>(x)); },
        [](VertexId x) { return x >= 0; }, "N_0");
    for (VertexId k : {VertexId(1), VertexId(5), VertexId(40)}) {
        const double lhs = w(k) * std::sqrt(static_cast<double>(k));
        const double rhs = laplacian_apply(*op.graph, sqrt_n, k);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("supersolution corner cases: constants and non-superharmonic input") {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const VertexFunction one = VertexFunction::lazy([](VertexId) { return 1.0; },
                                                    [](VertexId x) { return x >= 0; }, "N_0");
    const HardyWeight zero_w = supersolution_weight(op, one, 0.5);
    CHECK_THROWS_AS((void)zero_w(3), DomainViolation); // w = 0 is not strictly positive

    const SchrodingerOperator with_q = {make_graph("line"), Measure(), Potential::constant(0.75)};
    const HardyWeight qw = supersolution_weight(with_q, one, 0.5);
    CHECK(qw(4) == doctest::Approx(0.75)); // Delta 1 = 0 leaves exactly the potential

    // u(k) = k^2 is subharmonic: validation must refuse it
    const VertexFunction ksq = VertexFunction::lazy(
        [](VertexId x) { return static_cast<double>(x) * static_cast<double>(x); },
        [](VertexId x) { return x >= 0; }, "N_0");
    const HardyWeight invalid = supersolution_weight(op, ksq, 0.5, true);
    CHECK_THROWS_AS((void)invalid(3), DomainViolation);

    CHECK_THROWS_AS((void)supersolution_weight(op, one, 1.5), DomainViolation);
}

TEST_CASE("quadrant weight equals the supersolution construction") {
    for (int dim : {2, 3}) {
        const auto graph = std::make_shared<QuadrantGraph>(dim);
        const auto op = SchrodingerOperator::laplacian(graph);
        const VertexFunction u = VertexFunction::lazy(
            [dim](VertexId x) {
                double prod = 1.0;
                for (auto c : lattice_coords(x, dim)) prod *= static_cast<double>(c);
                return prod;
            },
            [dim](VertexId x) {
                for (auto c : lattice_coords(x, dim))
                    if (c < 0) return false;
                return true;
            },
            "quadrant");
        const HardyWeight w = supersolution_weight(op, u, 0.5);
        std::mt19937_64 rng(5 + static_cast<unsigned>(dim));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> k(static_cast<std::size_t>(dim));
            for (auto& ki : k) ki = 1 + static_cast<std::int64_t>(uniform_index(rng, 25));
            const double direct = w(lattice_vertex(k));
            const double closed = quadrant_weight(k).value;
            CHECK(std::fabs(direct - closed) <= 1e-12 * (2.0 * dim + 1.0));
        }
    }
}

TEST_CASE("hardy margins: zero, delta, and domain guards") {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const HardyWeight w = line_hardy_weight();
    CHECK(hardy_margin(op, w, VertexFunction::zero()).margin == 0.0);

    const HardyMargin hm = hardy_margin(op, w, VertexFunction::delta(1));
    CHECK(hm.energy == doctest::Approx(2.0));
    CHECK(hm.weighted_sq == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(hm.margin == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS((void)hardy_margin(op, w, VertexFunction::delta(0)), DomainViolation);
}

TEST_CASE("hardy sweep passes on the line at test scale") {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const PhiSampler sampler(checks::line_space(120, 0.5), 424242);
    const InequalityReport report = hardy_sweep(op, line_hardy_weight(), sampler, 200, 1e-9);
    CHECK(report.pass);
    CHECK(report.min_rel >= -1e-9);
    CHECK(report.samples == 200);
}

TEST_CASE("supersolution with harmonic u and alpha = 1 detects harmonicity") {
    // alpha = 1: w = Delta(u)/u vanishes wherever u is harmonic
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const HardyWeight w = supersolution_weight(op, n_on_naturals(), 1.0);
    for (VertexId k : {VertexId(1), VertexId(2), VertexId(9)})
        CHECK_THROWS_AS((void)w(k), DomainViolation); // identically zero -> not strictly positive
}

TEST_CASE("hardy sweep passes on the quadrant, d = 2 and 3") {
    for (int dim : {2, 3}) {
        const auto op =
            SchrodingerOperator::laplacian(make_graph("quadrant:" + std::to_string(dim)));
        const SampleSpace space = checks::quadrant_space(dim, 25, 0.5);
        const PhiSampler sampler(space, 777);
        const InequalityReport report =
            hardy_sweep(op, quadrant_hardy_weight(dim), sampler, 150, 1e-9, space.coords);
        CHECK(report.pass);
    }
}
