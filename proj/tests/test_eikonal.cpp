#include <doctest.h>

#include <cmath>

#include "graphineq/eikonal.hpp"
#include "graphineq/errors.hpp"
#include "graphineq/suite.hpp"

using namespace graphineq;

TEST_CASE("gamma_power: frozen value, domain guards, paper bracket") {
    const double eps = std::pow(2.0, -0.5);
    CHECK(gamma_power(0.5, eps) == doctest::Approx(0.29508103354532217).epsilon(1e-15));
    CHECK(gamma_power(0.5, eps) == doctest::Approx(0.295084).epsilon(2e-5));
    CHECK_THROWS_AS((void)gamma_power(1.5, 0.5), DomainViolation);
    CHECK_THROWS_AS((void)gamma_power(0.5, 0.0), DomainViolation);
    CHECK_THROWS_AS((void)gamma_power(0.5, 1.0), DomainViolation);
    // alpha^2 < gamma < alpha^2 2^(1-alpha) at eps = 2^(-1/2)
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const double gamma = gamma_power(alpha, eps);
        CHECK(gamma > alpha * alpha);
        CHECK(gamma < alpha * alpha * std::pow(2.0, 1.0 - alpha));
        CHECK(gamma < 1.0);
    }
}

TEST_CASE("gamma_power limits") {
    CHECK(std::fabs(gamma_power(0.9, 1e-8) - 1.0) <= 1e-6);
    for (double alpha : {0.1, 0.5, 0.9})
        CHECK(std::fabs(gamma_power(alpha, 1.0 - 1e-6) - alpha * alpha) <= 1e-4);
}

TEST_CASE("gamma_log: paper value and monotonicity") {
    const double eps = std::pow(2.0, -0.5);
    CHECK(std::fabs(gamma_log(1.0, eps) - 0.6083) <= 5e-4);
    CHECK(gamma_log(1.0, eps) == doctest::Approx(0.6083466657331971).epsilon(1e-15));
    CHECK(gamma_log(1.0, eps) < 1.0);
    // decreasing in eps (Claim 2, strict) and in the floor (Claim 1)
    double prev = gamma_log(1.0, 0.05);
    for (double e : {0.1, 0.2, 0.4, 0.6, 0.8, 0.95}) {
        const double cur = gamma_log(1.0, e);
        CHECK(cur < prev);
        prev = cur;
    }
    prev = gamma_log(0.1, eps);
    for (double c : {0.2, 0.5, 1.0, 2.0, 8.0}) {
        const double cur = gamma_log(c, eps);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS((void)gamma_log(0.0, eps), DomainViolation);
}

TEST_CASE("corollary constants match the base formulas bit for bit") {
    CHECK(corollary_constants(ThetaKind::Power, 2.0, 0.5) == gamma_power(0.5, std::pow(2.0, -0.5)));
    CHECK(corollary_constants(ThetaKind::Log, 2.0, 1.0) == gamma_log(1.0, std::pow(2.0, -0.5)));
    for (int d : {2, 3, 5}) {
        const double eps = std::pow(2.0 * d, -0.5);
        CHECK(corollary_constants(ThetaKind::Power, 2.0 * d, 0.25) == gamma_power(0.25, eps));
    }
    CHECK_THROWS_AS((void)corollary_constants(ThetaKind::Power, 1.0, 0.5), DomainViolation);
}

TEST_CASE("theta ratios: removable singularities and Taylor branches") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        CHECK(theta_power_ratio(1.0, alpha) == alpha * alpha);
        for (double t : {1.0 - 1e-8, 1.0 + 1e-8})
            CHECK(std::fabs(theta_power_ratio(t, alpha) - alpha * alpha) <= 1e-8);
        // no jump across the Taylor-branch switch at |1 - t| = 1e-6
        const double below = theta_power_ratio(1.0 + 0.99e-6, alpha);
        const double above = theta_power_ratio(1.0 + 1.01e-6, alpha);
        CHECK(std::fabs(below - above) <= 1e-7 * alpha * alpha);
    }
    for (double t : {0.5, 1.0, 4.0}) {
        const double L = std::log1p(t);
        const double limit = t * t / ((t + 1.0) * (t + 1.0) * L * L);
        CHECK(theta_log_ratio(1.0, t) == doctest::Approx(limit).epsilon(1e-15));
        for (double a : {1.0 - 1e-8, 1.0 + 1e-8})
            CHECK(std::fabs(theta_log_ratio(a, t) - limit) <= 1e-8 * limit);
        const double below = theta_log_ratio(1.0 + 0.99e-6, t);
        const double above = theta_log_ratio(1.0 + 1.01e-6, t);
        CHECK(std::fabs(below - above) <= 1e-7 * limit);
    }
}

TEST_CASE("theta ratios are monotone on sampled grids") {
    for (double alpha : {0.1, 0.5, 0.9}) {
        double prev = theta_power_ratio(1e-4, alpha);
        for (int i = 1; i <= 2000; ++i) {
            const double t = 1e-4 * std::pow(1e8, i / 2000.0);
            const double cur = theta_power_ratio(t, alpha);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    for (double t : {0.5, 4.0}) {
        double prev = theta_log_ratio(1e-3, t);
        for (int i = 1; i <= 2000; ++i) {
            const double a = 1e-3 * std::pow(1e6, i / 2000.0);
            const double cur = theta_log_ratio(a, t);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("admissibility: a = 1 row vanishes, grids pass, reduced gamma fails at the corner") {
    const double eps = std::pow(2.0, -0.5);
    const AdmissibleFamily power = AdmissibleFamily::power(0.5);
    const double gamma = gamma_power(0.5, eps);
    for (double t : {0.01, 1.0, 50.0})
        CHECK(admissibility_violation_at(power, gamma, t, 1.0) == 0.0);

    const auto grid = admissibility_grid(power, eps, 1e-3, 1e3, 41, 1e2, 41);
    const AdmissibilityResult ok = admissibility_check(power, gamma, grid);
    CHECK(ok.evaluated == grid.size());
    bool no_violation = true;
    for (const auto& [t, a] : grid)
        if (admissibility_violation_at(power, gamma, t, a) > 1e-12 * power.theta(t))
            no_violation = false;
    CHECK(no_violation);

    // 10% smaller constant: violated at the a = eps row, any t
    const AdmissibilityResult bad = admissibility_check(power, 0.9 * gamma, grid);
    CHECK(bad.worst_violation > 0.0);
    CHECK(bad.worst_a == doctest::Approx(eps));

    // log family: the constant is attained at (t, a) -> (c, eps)
    for (double c : {0.5, 1.0, 4.0}) {
        const AdmissibleFamily logf = AdmissibleFamily::log_family(c);
        const double gl = gamma_log(c, eps);
        const auto lgrid = admissibility_grid(logf, eps, c, 1e3 * c, 41, 1e2, 41);
        for (const auto& [t, a] : lgrid)
            CHECK(admissibility_violation_at(logf, gl, t, a) <= 1e-12 * logf.theta(t));
        CHECK(admissibility_violation_at(logf, 0.9 * gl, c, eps) > 0.0);
    }
}

TEST_CASE("pointwise eikonal margins: constants and the line-graph chain") {
    const RellichInstance inst = checks::line_power_instance(0.5);

    // g constant: the gradient vanishes, margins are gamma g w m >= 0
    std::vector<VertexId> window;
    for (VertexId k = 1; k <= 50; ++k) window.push_back(k);
    const EikonalReport const_rep = eikonal_margin_pointwise(
        inst.op, [](VertexId) { return 3.0; }, inst.w, inst.gamma, window, inst.domain);
    CHECK(const_rep.pass);
    CHECK(const_rep.worst_margin > 0.0);

    // g = n^(1/2) with the corollary constant: margins >= -1e-12 over 1..10^4
    std::vector<VertexId> big;
    for (VertexId k = 1; k <= 10000; ++k) big.push_back(k);
    const EikonalReport rep =
        eikonal_margin_pointwise(inst.op, inst.g, inst.w, inst.gamma, big, inst.domain);
    CHECK(rep.pass);
    CHECK(rep.worst_margin >= -1e-12);
}

TEST_CASE("pointwise pass implies weak pass for sampled phi") {
    const RellichInstance inst = checks::line_power_instance(0.5);
    const PhiSampler sampler(checks::line_space(60, 0.5), 99);
    std::vector<VertexFunction> phis;
    for (std::size_t i = 0; i < 50; ++i) phis.push_back(sampler(i));
    const EikonalReport weak =
        eikonal_margin_weak(inst.op, inst.g, inst.w, inst.gamma, phis);
    CHECK(weak.pass);
    CHECK(weak.samples.size() == 50);
}

TEST_CASE("x_epsilon on the line graph") {
    const auto line = make_graph("line");
    const VertexFunction u = VertexFunction::lazy(
        [](VertexId x) { return static_cast<double>(x); }, [](VertexId x) { return x >= 0; }, "N_0");
    std::vector<VertexId> window;
    for (VertexId k = 1; k <= 12; ++k) window.push_back(k);

    // u constant: every vertex qualifies for any eps <= 1
    const VertexFunction c = VertexFunction::lazy([](VertexId) { return 2.0; },
                                                  [](VertexId x) { return x >= 0; }, "N_0");
    CHECK(x_epsilon(*line, c, 1.0, window).size() == window.size());

    // u(k) = k with eps^2 = 0.49: exactly k >= 2 (the ratio at k is (k-1)/k,
    // equal to 1/2 at k = 2 and 0 at k = 1)
    const auto xe = x_epsilon(*line, u, 0.7, window);
    std::vector<VertexId> expect;
    for (VertexId k = 2; k <= 12; ++k) expect.push_back(k);
    CHECK(xe == expect);
}

TEST_CASE("admissibility transfers to the pointwise eikonal on X_eps") {
    // For theta admissible at eps and vertices whose neighbor ratios stay
    // above eps^2, g = (theta o u^(1/2))^2 satisfies the pointwise eikonal
    // inequality against w = Delta(u^(1/2))/u^(1/2) with gamma(eps).
    const auto line = make_graph("line");
    const auto op = SchrodingerOperator::laplacian(line);
    const VertexFunction u = VertexFunction::lazy(
        [](VertexId x) { return static_cast<double>(x); }, [](VertexId x) { return x >= 0; }, "N_0");
    const double eps = 0.7;
    std::vector<VertexId> window;
    for (VertexId k = 1; k <= 400; ++k) window.push_back(k);
    const auto x_eps = x_epsilon(*line, u, eps, window); // {k >= 2}
    REQUIRE(x_eps.front() == VertexId(2));

    const HardyWeight w = supersolution_weight(op, u, 0.5, false,
                                               [](VertexId x) { return x >= 1; });

    for (double alpha : {0.3, 0.6}) {
        const double gamma = gamma_power(alpha, eps);
        const auto g = [alpha](VertexId x) { return std::pow(static_cast<double>(x), alpha); };
        const EikonalReport rep =
            eikonal_margin_pointwise(op, g, w, gamma, x_eps, nullptr, 1e-10);
        CHECK(rep.pass);
    }
    {
        // log family on [inf u^(1/2), inf) over X_eps, i.e. floor sqrt(2)
        const double gamma = gamma_log(std::sqrt(2.0), eps);
        const auto g = [](VertexId x) {
            const double t = std::log1p(std::sqrt(static_cast<double>(x)));
            return t * t;
        };
        const EikonalReport rep =
            eikonal_margin_pointwise(op, g, w, gamma, x_eps, nullptr, 1e-10);
        CHECK(rep.pass);
    }
}

TEST_CASE("x_epsilon covers the window for eps^2 below the Harnack floor") {
    // positive superharmonic u on a standard-weight graph with degree bound D
    // keeps neighbor ratios above 1/D, so eps^2 <= 1/D admits every vertex
    const auto line = make_graph("line");
    const VertexFunction u = VertexFunction::lazy(
        [](VertexId x) { return static_cast<double>(x); }, [](VertexId x) { return x >= 0; }, "N_0");
    std::vector<VertexId> window;
    for (VertexId k = 2; k <= 30; ++k) window.push_back(k);
    const auto inside = x_epsilon(*line, u, 0.7, window); // eps^2 = 0.49 < 1/D
    CHECK(inside == window);

    const EikonalReport rep = eikonal_margin_pointwise(
        SchrodingerOperator::laplacian(line),
        [](VertexId x) { return std::sqrt(static_cast<double>(x)); }, line_hardy_weight(),
        gamma_power(0.5, 0.7), inside, nullptr);
    CHECK(rep.to_json()["pass"] == rep.pass);
    CHECK(rep.to_json()["mode"] == "pointwise");
}
