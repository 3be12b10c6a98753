#include "graphineq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {
namespace checks {

namespace {

struct RandomInstance {
    std::shared_ptr<FiniteGraph> graph;
    std::vector<VertexId> vertices;
    SchrodingerOperator op;
};

RandomInstance random_instance(std::mt19937_64& rng, bool with_measure, bool with_potential) {
    RandomInstance inst;
    inst.graph = random_finite_graph(rng, 30, 10.0);
    inst.vertices = inst.graph->vertices();
    auto m = std::make_shared<std::map<VertexId, double>>();
    auto q = std::make_shared<std::map<VertexId, double>>();
    for (VertexId x : inst.vertices) {
        (*m)[x] = uniform_in(rng, 0.1, 10.0);
        (*q)[x] = uniform_in(rng, -5.0, 5.0);
    }
    Measure measure = with_measure ? Measure([m](VertexId x) { return m->at(x); }) : Measure();
    Potential potential =
        with_potential ? Potential([q](VertexId x) { return q->at(x); }) : Potential();
    inst.op = {inst.graph, measure, potential};
    return inst;
}

VertexFunction random_positive_function(std::mt19937_64& rng, std::span<const VertexId> vertices,
                                        double lo, double hi) {
    std::map<VertexId, double> values;
    for (VertexId x : vertices) values[x] = uniform_in(rng, lo, hi);
    return VertexFunction::from_support(values);
}

CheckResult worst_ratio_result(const std::string& name, double worst_ratio, double tol,
                               Json details = {}) {
    CheckResult r;
    r.name = name;
    r.worst_margin = tol - worst_ratio; // positive iff within tolerance
    r.scale = 1.0;
    r.pass = worst_ratio <= tol;
    r.details = std::move(details);
    if (r.details.is_null()) r.details = Json::object();
    r.details["worst_ratio"] = worst_ratio;
    r.details["tolerance"] = tol;
    return r;
}

} // namespace

CheckResult greens_formula_random(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance inst = random_instance(rng, true, true);
        const VertexFunction phi = random_vertex_function(rng, inst.vertices, -5.0, 5.0);
        const VertexFunction f = random_vertex_function(rng, inst.vertices, -5.0, 5.0);
        const ResidualReport rep = greens_formula_residual(inst.op, phi, f);
        worst = std::max(worst, rep.residual / (rep.scale + 1e-300));
    }
    return worst_ratio_result("identities/greens_formula_random", worst, 1e-10);
}

CheckResult main_identity_random(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance inst = random_instance(rng, false, false);
        const VertexFunction phi = random_vertex_function(rng, inst.vertices, -5.0, 5.0);
        const VertexFunction f = random_positive_function(rng, inst.vertices, 0.1, 10.0);
        const ResidualReport rep = main_identity_residual(*inst.graph, phi, f);
        worst = std::max(worst, rep.residual / (rep.scale + 1e-300));
    }
    return worst_ratio_result("identities/main_identity_random", worst, 1e-10);
}

CheckResult energy_form_vs_greens(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance inst = random_instance(rng, true, true);
        const VertexFunction phi = random_vertex_function(rng, inst.vertices, -5.0, 5.0);
        const double energy = energy_form(inst.op, phi);
        SumAccumulator acc;
        for (VertexId x : phi.support())
            acc.add(inst.op.measure(x) * phi(x) * schrodinger_apply(inst.op, phi, x));
        const double scale = std::fabs(energy) + acc.abs_scale();
        worst = std::max(worst, std::fabs(energy - acc.value()) / (scale + 1e-300));
    }
    return worst_ratio_result("identities/energy_form_vs_greens", worst, 1e-10);
}

CheckResult ground_state_energy_identity(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance inst = random_instance(rng, true, true);
        const VertexFunction u = random_positive_function(rng, inst.vertices, 0.1, 10.0);
        const SchrodingerOperator transformed = ground_state_transform(inst.op, u);
        for (int trial = 0; trial < 4; ++trial) {
            const VertexFunction phi = random_vertex_function(rng, inst.vertices, -5.0, 5.0);
            std::map<VertexId, double> product;
            for (VertexId x : phi.support()) product[x] = u(x) * phi(x);
            const VertexFunction u_phi = VertexFunction::from_support(product);
            const double lhs = energy_form(transformed, phi);
            const double rhs = energy_form(inst.op, u_phi);
            const double scale = std::fabs(lhs) + std::fabs(rhs);
            worst = std::max(worst, std::fabs(lhs - rhs) / (scale + 1e-300));
        }
    }
    return worst_ratio_result("identities/ground_state_energy", worst, 1e-10);
}

CheckResult extend_infinity_energy(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance base = random_instance(rng, true, false);
        const VertexFunction u = random_positive_function(rng, base.vertices, 0.2, 5.0);

        // choose the superharmonic defect first, then the potential realizing it
        auto defect = std::make_shared<std::map<VertexId, double>>();
        for (VertexId x : base.vertices)
            (*defect)[x] = (i == 0 || uniform_unit(rng) < 0.3) ? 0.0 : uniform_in(rng, 0.0, 2.0);
        auto q = std::make_shared<std::map<VertexId, double>>();
        for (VertexId x : base.vertices) {
            const double lap = laplacian_apply(*base.graph, u, x);
            (*q)[x] = (defect->at(x) - lap / base.op.measure(x)) / u(x);
        }
        const SchrodingerOperator op{base.graph, base.op.measure,
                                     Potential([q](VertexId x) { return q->at(x); })};
        const SchrodingerOperator transformed = ground_state_transform(op, u);
        const VertexFunction hu = VertexFunction::lazy(
            [op, u](VertexId x) { return schrodinger_apply(op, u, x); }, nullptr, "graph");

        const auto supergraph =
            extend_with_infinity(*transformed.graph, base.vertices, op.measure, u, hu, 1e-9);
        const auto super_op = SchrodingerOperator::laplacian(supergraph);

        for (int trial = 0; trial < 3; ++trial) {
            const VertexFunction phi = random_vertex_function(rng, base.vertices, -5.0, 5.0);
            const double dirichlet = energy_form(super_op, phi);
            const double transformed_energy = energy_form(transformed, phi);
            const double scale = std::fabs(dirichlet) + std::fabs(transformed_energy);
            worst = std::max(worst, std::fabs(dirichlet - transformed_energy) / (scale + 1e-300));
        }
    }
    return worst_ratio_result("identities/extend_infinity_energy", worst, 1e-10);
}

CheckResult restrict_domain_agreement(std::uint64_t seed, int instances) {
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        RandomInstance inst = random_instance(rng, true, true);
        auto members = std::make_shared<std::set<VertexId>>();
        for (VertexId x : inst.vertices)
            if (uniform_unit(rng) < 0.6) members->insert(x);
        if (members->empty()) members->insert(inst.vertices.front());
        const GraphDomain domain(inst.op,
                                 [members](VertexId x) { return members->count(x) > 0; });

        std::vector<VertexId> inside(members->begin(), members->end());
        const VertexFunction f = random_vertex_function(rng, inside, -5.0, 5.0);
        for (VertexId x : inside) {
            const double parent = schrodinger_apply(inst.op, f, x);
            const double restricted = schrodinger_apply(domain.restricted_operator(), f, x);
            SumAccumulator mags;
            for (const Neighbor& n : inst.op.graph->neighbors(x))
                mags.add(n.weight * (std::fabs(f(x)) + std::fabs(f(n.vertex))));
            const double scale = mags.value() / inst.op.measure(x) +
                                 std::fabs(inst.op.potential(x) * f(x)) + std::fabs(parent);
            worst = std::max(worst, std::fabs(parent - restricted) / (scale + 1e-300));
        }
    }
    return worst_ratio_result("identities/restrict_domain_agreement", worst, 1e-13);
}

// ---------------------------------------------------------------------------

namespace {

CheckResult from_inequality(const std::string& name, const InequalityReport& report) {
    CheckResult r;
    r.name = name;
    r.pass = report.pass;
    r.worst_margin = report.samples ? report.min_margin : 0.0;
    r.scale = report.min_scale;
    r.details = report.to_json();
    return r;
}

std::function<std::vector<std::int64_t>(VertexId)> lattice_coords_fn(int dim) {
    return [dim](VertexId x) { return lattice_coords(x, dim); };
}

} // namespace

SampleSpace line_space(int support_radius, double alpha) {
    SampleSpace space;
    for (int k = 1; k <= support_radius; ++k) space.candidates.push_back(k);
    space.u = [](VertexId x) { return static_cast<double>(x); };
    space.g = [alpha](VertexId x) { return std::pow(static_cast<double>(x), alpha); };
    return space;
}

SampleSpace quadrant_space(int dim, int support_radius, double alpha) {
    SampleSpace space;
    int per_axis = support_radius;
    while (std::pow(static_cast<double>(per_axis), dim) > 250000.0) --per_axis;
    std::vector<std::int64_t> coords(static_cast<std::size_t>(dim), 1);
    while (true) {
        space.candidates.push_back(lattice_vertex(coords));
        int axis = dim - 1;
        while (axis >= 0) {
            if (++coords[static_cast<std::size_t>(axis)] <= per_axis) break;
            coords[static_cast<std::size_t>(axis)] = 1;
            --axis;
        }
        if (axis < 0) break;
    }
    std::sort(space.candidates.begin(), space.candidates.end());
    space.coords = lattice_coords_fn(dim);
    space.u = [dim](VertexId x) {
        double prod = 1.0;
        for (auto c : lattice_coords(x, dim)) prod *= static_cast<double>(c);
        return prod;
    };
    auto u = space.u;
    space.g = [u, alpha](VertexId x) { return std::pow(u(x), alpha); };
    return space;
}

SampleSpace green_space(std::shared_ptr<const GreenTable> table, const GreenHardy& hardy,
                        double alpha) {
    SampleSpace space;
    space.candidates = hardy.trust_region;
    const int dim = table->metadata().dim;
    space.coords = lattice_coords_fn(dim);
    const VertexFunction g_fn = table->as_function();
    space.u = [g_fn](VertexId x) { return g_fn(x); };
    space.g = [g_fn, alpha](VertexId x) { return std::pow(g_fn(x), alpha); };
    return space;
}

RellichInstance line_power_instance(double alpha) {
    RellichInstance inst;
    inst.op = SchrodingerOperator::laplacian(make_graph("line"));
    inst.w = line_hardy_weight();
    inst.g = [alpha](VertexId x) { return std::pow(static_cast<double>(x), alpha); };
    inst.gamma = corollary_constants(ThetaKind::Power, 2.0, alpha);
    inst.domain = [](VertexId x) { return x >= 1; };
    return inst;
}

RellichInstance line_log_instance() {
    RellichInstance inst;
    inst.op = SchrodingerOperator::laplacian(make_graph("line"));
    inst.w = line_hardy_weight();
    inst.g = [](VertexId x) {
        const double t = std::log1p(std::sqrt(static_cast<double>(x)));
        return t * t;
    };
    // u = n is bounded below by c = 1 on N, so theta = log(t+1) on [1, inf)
    inst.gamma = corollary_constants(ThetaKind::Log, 2.0, 1.0);
    inst.domain = [](VertexId x) { return x >= 1; };
    return inst;
}

RellichInstance line_measure_instance(double alpha) {
    RellichInstance inst;
    Measure m([](VertexId x) {
        return x >= 1 ? 1.0 + 1.0 / static_cast<double>(x) : 1.0;
    });
    inst.op = {make_graph("line"), m, Potential()};
    // w' = w m is a Hardy weight for Delta, so w = w_line / m works for H
    inst.w = HardyWeight::closed_form(
        "line/measure",
        [m](VertexId x) { return line_weight(static_cast<std::int64_t>(x)) / m(x); },
        [](VertexId x) { return x >= 1; });
    inst.g = [alpha](VertexId x) { return std::pow(static_cast<double>(x), alpha); };
    inst.gamma = corollary_constants(ThetaKind::Power, 2.0, alpha);
    inst.domain = [](VertexId x) { return x >= 1; };
    return inst;
}

RellichInstance quadrant_instance(int dim, double alpha) {
    RellichInstance inst;
    inst.op = SchrodingerOperator::laplacian(make_graph("quadrant:" + std::to_string(dim)));
    inst.w = quadrant_hardy_weight(dim);
    inst.g = [dim, alpha](VertexId x) {
        double prod = 1.0;
        for (auto c : lattice_coords(x, dim)) prod *= static_cast<double>(c);
        return std::pow(prod, alpha);
    };
    inst.gamma = corollary_constants(ThetaKind::Power, 2.0 * dim, alpha);
    inst.domain = [dim](VertexId x) {
        for (auto c : lattice_coords(x, dim))
            if (c < 1) return false;
        return true;
    };
    return inst;
}

RellichInstance lattice_green_instance(std::shared_ptr<const GreenTable> table, double alpha,
                                       const GreenHardy& hardy) {
    RellichInstance inst;
    const int dim = table->metadata().dim;
    inst.op = SchrodingerOperator::laplacian(std::make_shared<LatticeGraph>(dim));
    inst.w = hardy.weight;
    const VertexFunction g_fn = table->as_function();
    inst.g = [g_fn, alpha](VertexId x) { return std::pow(g_fn(x), alpha); };
    inst.gamma = corollary_constants(ThetaKind::Power, 2.0 * dim, alpha);
    auto region = std::make_shared<const std::set<VertexId>>(hardy.trust_region.begin(),
                                                             hardy.trust_region.end());
    inst.domain = [region](VertexId x) { return region->count(x) > 0; };
    return inst;
}

CheckResult rellich_check(const std::string& name, const RellichInstance& instance,
                          const SampleSpace& space, std::uint64_t seed, std::size_t samples) {
    const PhiSampler sampler(space, seed);
    return from_inequality(name, rellich_sweep(instance, sampler, samples, 1e-9, space.coords));
}

CheckResult schrodinger_reduction(std::uint64_t seed, std::size_t samples) {
    const RellichInstance weighted = line_measure_instance(0.5);

    // unweighted route: Delta with Hardy weight w' = w m
    RellichInstance reduced;
    reduced.op = SchrodingerOperator::laplacian(make_graph("line"));
    const Measure m = weighted.op.measure;
    const HardyWeight w = weighted.w;
    reduced.w = HardyWeight::closed_form(
        "line*m", [w, m](VertexId x) { return w(x) * m(x); },
        [](VertexId x) { return x >= 1; });
    reduced.g = weighted.g;
    reduced.gamma = weighted.gamma;
    reduced.domain = weighted.domain;

    const PhiSampler sampler(line_space(100, 0.5), seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const VertexFunction phi = sampler(i);
        const RellichMargin a = rellich_margin(weighted, phi);
        const RellichMargin b = rellich_margin(reduced, phi);
        const double scale = a.scale + b.scale;
        worst = std::max(worst, std::fabs(a.margin - b.margin) / (scale + 1e-300));
    }
    return worst_ratio_result("rellich/schrodinger_reduction", worst, 1e-14);
}

CheckResult hardy_line(std::uint64_t seed, std::size_t samples, int support_radius) {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const PhiSampler sampler(line_space(support_radius, 0.5), seed);
    return from_inequality("hardy/line",
                           hardy_sweep(op, line_hardy_weight(), sampler, samples, 1e-9));
}

CheckResult hardy_quadrant(std::uint64_t seed, std::size_t samples, int support_radius, int dim) {
    const auto op = SchrodingerOperator::laplacian(make_graph("quadrant:" + std::to_string(dim)));
    const SampleSpace space = quadrant_space(dim, support_radius, 0.5);
    const PhiSampler sampler(space, seed);
    return from_inequality("hardy/quadrant" + std::to_string(dim),
                           hardy_sweep(op, quadrant_hardy_weight(dim), sampler, samples, 1e-9,
                                       space.coords));
}

CheckResult hardy_green3(std::uint64_t seed, std::size_t samples,
                         std::shared_ptr<const GreenTable> table) {
    const GreenHardy hardy = green_hardy_weight(table);
    CheckResult r;
    if (hardy.trust_region.empty()) {
        r.name = "hardy/green3";
        r.pass = false;
        r.details["error"] = "empty trust region";
        return r;
    }
    const auto op =
        SchrodingerOperator::laplacian(std::make_shared<LatticeGraph>(table->metadata().dim));
    const SampleSpace space = green_space(table, hardy, 0.5);
    const PhiSampler sampler(space, seed);
    r = from_inequality("hardy/green3",
                        hardy_sweep(op, hardy.weight, sampler, samples, 1e-9, space.coords));
    r.details["trust_sites"] = hardy.trust_region.size();
    r.details["flagged_sites"] = hardy.flagged_sites;
    return r;
}

CheckResult line_weight_lower_bound(std::int64_t k_max) {
    double worst_gap = std::numeric_limits<double>::infinity();
    std::int64_t worst_k = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const double w = line_weight(k);
        const double bound = k == 1 ? 0.25 : 0.25 / (static_cast<double>(k) * static_cast<double>(k));
        const double gap = (w - bound) / bound;
        if (gap < worst_gap) {
            worst_gap = gap;
            worst_k = k;
        }
    }
    CheckResult r;
    r.name = "hardy/line_weight_lower_bound";
    r.pass = worst_gap > 0.0;
    r.worst_margin = worst_gap;
    r.scale = 1.0;
    r.details["worst_k"] = worst_k;
    r.details["worst_relative_gap"] = worst_gap;
    return r;
}

CheckResult line_weight_series_agreement(std::int64_t k_max, int terms) {
    double worst = 0.0;
    for (std::int64_t k = 2; k <= k_max; ++k)
        worst = std::max(worst, std::fabs(line_weight(k) - line_weight_series(k, terms)));
    return worst_ratio_result("hardy/series_agreement", worst, 1e-12);
}

CheckResult quadrant_matches_supersolution(std::uint64_t seed) {
    double worst = 0.0;
    for (int dim : {2, 3}) {
        const auto graph = std::make_shared<QuadrantGraph>(dim);
        const auto op = SchrodingerOperator::laplacian(graph);
        const VertexFunction u = VertexFunction::lazy(
            [dim](VertexId x) {
                double prod = 1.0;
                for (auto coord : lattice_coords(x, dim)) prod *= static_cast<double>(coord);
                return prod;
            },
            [dim](VertexId x) {
                for (auto coord : lattice_coords(x, dim))
                    if (coord < 0) return false;
                return true;
            },
            "quadrant");
        const HardyWeight w = supersolution_weight(op, u, 0.5);
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(dim)));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::int64_t> k(static_cast<std::size_t>(dim));
            for (auto& ki : k) ki = 1 + static_cast<std::int64_t>(uniform_index(rng, 30));
            const VertexId x = lattice_vertex(k);
            const double direct = w(x);
            const double closed = quadrant_weight(k).value;
            // summand scale of Delta(u^1/2)/u^1/2 at x
            SumAccumulator mags;
            const double sx = std::sqrt(u(x));
            for (const Neighbor& n : graph->neighbors(x))
                mags.add(n.weight * (sx + std::sqrt(u(n.vertex))));
            const double scale = mags.value() / sx;
            worst = std::max(worst, std::fabs(direct - closed) / scale);
        }
    }
    return worst_ratio_result("hardy/quadrant_vs_supersolution", worst, 1e-12);
}

// ---------------------------------------------------------------------------

CheckResult admissibility_power_grid() {
    double worst = -std::numeric_limits<double>::infinity();
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const AdmissibleFamily fam = AdmissibleFamily::power(alpha);
        for (double eps : {0.3, 0.7071067811865476}) {
            const double gamma = gamma_power(alpha, eps);
            const auto grid = admissibility_grid(fam, eps, 1e-3, 1e3, 61, 1e2, 61);
            for (const auto& [t, a] : grid) {
                const double v = admissibility_violation_at(fam, gamma, t, a) / fam.theta(t);
                worst = std::max(worst, v);
            }
        }
    }
    return worst_ratio_result("eikonal/admissibility_power", worst, 1e-12);
}

CheckResult admissibility_log_grid() {
    double worst = -std::numeric_limits<double>::infinity();
    const double eps = 0.7071067811865476;
    for (double c : {0.5, 1.0, 4.0}) {
        const AdmissibleFamily fam = AdmissibleFamily::log_family(c);
        const double gamma = gamma_log(c, eps);
        const auto grid = admissibility_grid(fam, eps, c, 1e3 * c, 61, 1e2, 61);
        for (const auto& [t, a] : grid) {
            const double v = admissibility_violation_at(fam, gamma, t, a) / fam.theta(t);
            worst = std::max(worst, v);
        }
    }
    return worst_ratio_result("eikonal/admissibility_log", worst, 1e-12);
}

CheckResult admissibility_sharpness() {
    // the admissible constants are attained at (t, a) -> (c, eps); reducing
    // gamma by 10% must produce a violation there
    double min_violation = std::numeric_limits<double>::infinity();
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const AdmissibleFamily fam = AdmissibleFamily::power(alpha);
        for (double eps : {0.3, 0.7071067811865476}) {
            const double gamma = gamma_power(alpha, eps);
            min_violation = std::min(
                min_violation, admissibility_violation_at(fam, 0.9 * gamma, 1.0, eps));
        }
    }
    const double eps = 0.7071067811865476;
    for (double c : {0.5, 1.0, 4.0}) {
        const AdmissibleFamily fam = AdmissibleFamily::log_family(c);
        const double gamma = gamma_log(c, eps);
        min_violation = std::min(min_violation,
                                 admissibility_violation_at(fam, 0.9 * gamma, c, eps) / fam.theta(c));
    }
    CheckResult r;
    r.name = "eikonal/admissibility_sharpness";
    r.pass = min_violation > 0.0;
    r.worst_margin = min_violation;
    r.scale = 1.0;
    r.details["min_probe_violation"] = min_violation;
    return r;
}

CheckResult theta_monotonicity_power() {
    int violations = 0;
    double tightest = std::numeric_limits<double>::infinity();
    const int points = 10000;
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        double prev = theta_power_ratio(1e-4, alpha);
        for (int i = 1; i < points; ++i) {
            const double t = 1e-4 * std::pow(1e8, static_cast<double>(i) / (points - 1));
            const double cur = theta_power_ratio(t, alpha);
            if (!(cur < prev)) ++violations;
            tightest = std::min(tightest, prev - cur);
            prev = cur;
        }
    }
    CheckResult r;
    r.name = "eikonal/theta_monotonicity_power";
    r.pass = violations == 0;
    r.worst_margin = tightest;
    r.scale = 1.0;
    r.details["violations"] = violations;
    r.details["points_per_alpha"] = points;
    return r;
}

CheckResult theta_monotonicity_log() {
    int violations = 0;
    double tightest = std::numeric_limits<double>::infinity();
    const int points = 10000;
    // strict decrease in a for fixed t
    for (double t : {1e-2, 0.5, 1.0, 4.0, 1e3}) {
        double prev = theta_log_ratio(1e-3, t);
        for (int i = 1; i < points; ++i) {
            const double a = 1e-3 * std::pow(1e6, static_cast<double>(i) / (points - 1));
            const double cur = theta_log_ratio(a, t);
            if (!(cur < prev)) ++violations;
            tightest = std::min(tightest, prev - cur);
            prev = cur;
        }
    }
    // decrease in t for fixed a
    for (double a : {1e-3, 0.3, 0.7071067811865476, 2.0, 1e3}) {
        double prev = theta_log_ratio(a, 1e-2);
        for (int i = 1; i < points; ++i) {
            const double t = 1e-2 * std::pow(1e5, static_cast<double>(i) / (points - 1));
            const double cur = theta_log_ratio(a, t);
            if (cur > prev) ++violations;
            prev = cur;
        }
    }
    CheckResult r;
    r.name = "eikonal/theta_monotonicity_log";
    r.pass = violations == 0;
    r.worst_margin = tightest;
    r.scale = 1.0;
    r.details["violations"] = violations;
    return r;
}

CheckResult gamma_limit_checks() {
    double worst = 0.0;
    // eps -> 0: gamma -> 1 (rate eps^alpha, so probed at alpha = 0.9)
    worst = std::max(worst, std::fabs(gamma_power(0.9, 1e-8) - 1.0) / 1e-6);
    // eps -> 1: gamma -> alpha^2
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9})
        worst = std::max(worst, std::fabs(gamma_power(alpha, 1.0 - 1e-6) - alpha * alpha) / 1e-4);
    // removable singularities: values next to 1 agree with the limit, and
    // the Taylor-branch switch at |1 - t| = 1e-6 introduces no jump
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (double t : {1.0 - 1e-8, 1.0 + 1e-8})
            worst = std::max(worst,
                             std::fabs(theta_power_ratio(t, alpha) - alpha * alpha) / 1e-8);
        worst = std::max(worst, std::fabs(theta_power_ratio(1.0 + 0.99e-6, alpha) -
                                          theta_power_ratio(1.0 + 1.01e-6, alpha)) /
                                    (1e-7 * alpha * alpha));
    }
    for (double t : {0.5, 1.0, 4.0}) {
        const double L = std::log1p(t);
        const double limit = t * t / ((t + 1.0) * (t + 1.0) * L * L);
        for (double a : {1.0 - 1e-8, 1.0 + 1e-8})
            worst = std::max(worst, std::fabs(theta_log_ratio(a, t) - limit) / (1e-8 * limit));
        worst = std::max(worst, std::fabs(theta_log_ratio(1.0 + 0.99e-6, t) -
                                          theta_log_ratio(1.0 + 1.01e-6, t)) /
                                    (1e-7 * limit));
    }
    // monotonicity of the log constant in eps and in the floor
    if (!(gamma_log(1.0, 0.3) > gamma_log(1.0, 0.6))) worst = std::max(worst, 2.0);
    if (!(gamma_log(0.5, 0.5) > gamma_log(2.0, 0.5))) worst = std::max(worst, 2.0);
    return worst_ratio_result("eikonal/gamma_limits", worst, 1.0);
}

// ---------------------------------------------------------------------------

CheckResult green_invariants(const GreenTable& table) {
    const auto& meta = table.metadata();
    CheckResult r;
    r.name = "green/invariants";
    r.pass = true;

    const int inner = meta.radius - meta.radius / 3;
    double worst_decay = std::numeric_limits<double>::infinity();
    std::vector<std::int64_t> coords(static_cast<std::size_t>(meta.dim), 0);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= inner; ++k) {
        coords[0] = k;
        const double g = table.value(coords);
        if (!(g > 0.0)) r.pass = false;
        worst_decay = std::min(worst_decay, prev - g);
        if (g >= prev) r.pass = false;
        prev = g;
    }
    r.worst_margin = worst_decay;
    r.scale = 1.0;
    r.details["mass_leaked"] = meta.mass_leaked;
    r.details["leakage_warning"] = meta.leakage_warning;
    r.details["sim_radius"] = meta.sim_radius;
    r.details["tail_exponent_at_origin"] = meta.tail_exponent_at_origin;
    r.details["tail_model"] = meta.tail_model;
    if (meta.leakage_warning) r.pass = false;
    // the origin fit should see the n^(-d/2) decay
    if (std::fabs(meta.tail_exponent_at_origin + 0.5 * meta.dim) > 0.2) r.pass = false;
    return r;
}

CheckResult green_decay_slope(const GreenTable& table) {
    const auto& meta = table.metadata();
    const int lo = std::max(2, meta.radius / 4);
    const int hi = meta.radius / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    std::vector<std::int64_t> coords(static_cast<std::size_t>(meta.dim), 0);
    for (int k = lo; k <= hi; ++k) {
        coords[0] = k;
        const double g = table.value(coords);
        if (!(g > 0.0)) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(g);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CheckResult r;
    r.name = "green/decay_slope";
    const double target = -(meta.dim - 2.0);
    r.pass = slope >= target - 0.15 && slope <= target + 0.15;
    r.worst_margin = 0.15 - std::fabs(slope - target);
    r.scale = 1.0;
    r.details["slope"] = slope;
    r.details["band"] = {target - 0.15, target + 0.15};
    r.details["k_range"] = {lo, hi};
    return r;
}

CheckResult green_w_asymptotics(std::shared_ptr<const GreenTable> table) {
    const GreenHardy hardy = green_hardy_weight(table);
    const int dim = table->metadata().dim;
    const double target = (dim - 2.0) * (dim - 2.0) / 4.0;

    double lo_ratio = std::numeric_limits<double>::infinity();
    double hi_ratio = -std::numeric_limits<double>::infinity();
    int counted = 0;
    for (VertexId v : hardy.trust_region) {
        const auto coords = lattice_coords(v, dim);
        double ksq = 0.0;
        for (auto c : coords) ksq += static_cast<double>(c) * static_cast<double>(c);
        const double norm = std::sqrt(ksq);
        if (norm < 10.0 || norm > 16.0) continue;
        const double ratio = hardy.weight(v) * ksq;
        lo_ratio = std::min(lo_ratio, ratio);
        hi_ratio = std::max(hi_ratio, ratio);
        ++counted;
    }
    CheckResult r;
    r.name = "green/w_asymptotics";
    r.scale = target;
    if (counted == 0) {
        r.pass = false;
        r.details["error"] = "no trusted sites with |k| in [10,16]";
        return r;
    }
    const double band = 0.15 * target;
    r.pass = lo_ratio >= target - band && hi_ratio <= target + band;
    r.worst_margin = std::min(lo_ratio - (target - band), (target + band) - hi_ratio);
    r.details["sites"] = counted;
    r.details["min_ratio"] = lo_ratio;
    r.details["max_ratio"] = hi_ratio;
    r.details["band"] = {target - band, target + band};
    r.details["flagged_sites"] = hardy.flagged_sites;
    return r;
}

// ---------------------------------------------------------------------------

CheckResult solve_line_exhaustion(int stages, double stop_tol, double alpha) {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const GraphDomain domain(op, [](VertexId x) { return x >= 1; });
    const Exhaustion exhaustion(domain, 1, stages);

    BoundSpec bound;
    bound.g = [alpha](VertexId x) { return std::pow(static_cast<double>(x), alpha); };
    bound.w = [](VertexId x) { return line_weight(static_cast<std::int64_t>(x)); };
    bound.gamma = corollary_constants(ThetaKind::Power, 2.0, alpha);

    const SolveReport report = exhaustion_solve(exhaustion, VertexFunction::delta(5), stop_tol, bound);

    CheckResult r;
    r.name = "solve/line_exhaustion";
    r.pass = report.monotone && report.stabilized_stage >= 1;
    double worst_residual = report.stabilized_residual;
    double worst_bound_margin = std::numeric_limits<double>::infinity();
    double prev_ratio = 0.0;
    for (const StageReport& s : report.stages) {
        worst_residual = std::max(worst_residual, s.residual_sup);
        if (s.bound_ratio > 0.0) {
            worst_bound_margin = std::min(worst_bound_margin, 1.0 - s.bound_ratio);
            if (s.bound_ratio + 1e-12 < prev_ratio) r.pass = false; // nondecreasing in the stage
            prev_ratio = s.bound_ratio;
        }
        if (s.residual_sup > 1e-9) r.pass = false;
    }
    if (report.stabilized_residual > 1e-9) r.pass = false;
    if (!(worst_bound_margin > 0.0)) r.pass = false;
    r.worst_margin = worst_bound_margin;
    r.scale = 1.0;
    r.details = report.to_json();
    r.details["worst_residual"] = worst_residual;
    return r;
}

CheckResult solve_linearity(std::uint64_t seed) {
    const auto op = SchrodingerOperator::laplacian(make_graph("line"));
    const GraphDomain domain(op, [](VertexId x) { return x >= 1; });
    const Exhaustion exhaustion(domain, 1, 7);

    std::mt19937_64 rng(derive_seed(seed, 77));
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const double a = uniform_in(rng, 0.0, 3.0);
        const double b = uniform_in(rng, 0.0, 3.0);
        std::map<VertexId, double> fv{{3, uniform_in(rng, 0.1, 2.0)}, {5, uniform_in(rng, 0.1, 2.0)}};
        std::map<VertexId, double> hv{{2, uniform_in(rng, 0.1, 2.0)}, {7, uniform_in(rng, 0.1, 2.0)}};
        const VertexFunction f = VertexFunction::from_support(fv);
        const VertexFunction h = VertexFunction::from_support(hv);
        std::map<VertexId, double> cv;
        for (const auto& [x, v] : fv) cv[x] += a * v;
        for (const auto& [x, v] : hv) cv[x] += b * v;
        const VertexFunction combo = VertexFunction::from_support(cv);

        const SolveReport rf = exhaustion_solve(exhaustion, f, 1e-11);
        const SolveReport rh = exhaustion_solve(exhaustion, h, 1e-11);
        const SolveReport rc = exhaustion_solve(exhaustion, combo, 1e-11);
        if (rc.stabilized_stage < 1) {
            worst = 1.0;
            break;
        }
        for (VertexId x : exhaustion.stage(std::max(1, rc.stabilized_stage))) {
            const double expect = a * rf.solution(x) + b * rh.solution(x);
            const double got = rc.solution(x);
            const double scale = std::fabs(expect) + std::fabs(got) + 1.0;
            worst = std::max(worst, std::fabs(expect - got) / scale);
        }
    }
    return worst_ratio_result("solve/linearity", worst, 1e-9);
}

} // namespace checks

// ---------------------------------------------------------------------------

Json SuiteReport::to_json() const {
    Json j;
    j["schema"] = 1;
    j["version"] = version;
    j["config"] = config.to_json();
    Json arr = Json::array();
    for (const CheckResult& c : checks) arr.push_back(c.to_json());
    j["checks"] = std::move(arr);
    j["overall_pass"] = overall_pass;
    return j;
}

std::string SuiteReport::human_summary() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  worst_margin=" << c.worst_margin
            << "  (" << static_cast<long>(c.wall_ms) << " ms)\n";
    }
    out << (overall_pass ? "overall: PASS" : "overall: FAIL") << "\n";
    return out.str();
}

SuiteReport run_suite(const RunConfig& cfg) {
    SuiteReport report;
    report.config = cfg;

    std::vector<CheckResult> results;
    auto add = [&results](CheckResult r, std::chrono::steady_clock::time_point start) {
        r.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        results.push_back(std::move(r));
    };
    auto run = [&add](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        add(fn(), start);
    };

    const bool all = cfg.suite == "all";
    const auto samples = static_cast<std::size_t>(cfg.samples);

    if (all || cfg.suite == "identities") {
        run([&] { return checks::greens_formula_random(cfg.seed, 500); });
        run([&] { return checks::main_identity_random(cfg.seed, 500); });
        run([&] { return checks::energy_form_vs_greens(cfg.seed, 200); });
        run([&] { return checks::ground_state_energy_identity(cfg.seed, 100); });
        run([&] { return checks::extend_infinity_energy(cfg.seed, 100); });
        run([&] { return checks::restrict_domain_agreement(cfg.seed, 200); });
    }

    std::shared_ptr<const GreenTable> big_table;
    if (all || cfg.suite == "green") {
        const auto start = std::chrono::steady_clock::now();
        big_table = green_window(3, cfg.radius, cfg.steps);
        CheckResult r = checks::green_invariants(*big_table);
        add(std::move(r), start);
        run([&] { return checks::green_decay_slope(*big_table); });
        run([&] { return checks::green_w_asymptotics(big_table); });
    }

    if (all || cfg.suite == "hardy") {
        run([&] { return checks::hardy_line(cfg.seed, samples, cfg.support_radius); });
        run([&] { return checks::hardy_quadrant(cfg.seed, samples, cfg.support_radius, 2); });
        run([&] { return checks::hardy_quadrant(cfg.seed, samples, cfg.support_radius, 3); });
        run([&] {
            auto table = big_table ? big_table : green_window(3, 24, 576);
            return checks::hardy_green3(cfg.seed, samples, table);
        });
        run([&] { return checks::line_weight_lower_bound(10000); });
        run([&] { return checks::line_weight_series_agreement(100, 20); });
        run([&] { return checks::quadrant_matches_supersolution(cfg.seed); });
    }

    if (all || cfg.suite == "eikonal") {
        run([&] { return checks::admissibility_power_grid(); });
        run([&] { return checks::admissibility_log_grid(); });
        run([&] { return checks::admissibility_sharpness(); });
        run([&] { return checks::theta_monotonicity_power(); });
        run([&] { return checks::theta_monotonicity_log(); });
        run([&] { return checks::gamma_limit_checks(); });
    }

    if (all || cfg.suite == "rellich") {
        for (double alpha : {0.25, 0.5, 0.75}) {
            run([&] {
                std::ostringstream name;
                name << "rellich/line_alpha_" << alpha;
                return checks::rellich_check(name.str(), checks::line_power_instance(alpha),
                                             checks::line_space(cfg.support_radius, alpha),
                                             cfg.seed, samples);
            });
        }
        run([&] {
            return checks::rellich_check("rellich/quadrant2", checks::quadrant_instance(2, cfg.alpha),
                                         checks::quadrant_space(2, cfg.support_radius, cfg.alpha),
                                         cfg.seed, samples);
        });
        run([&] {
            return checks::rellich_check("rellich/log_line", checks::line_log_instance(),
                                         checks::line_space(cfg.support_radius, 0.5), cfg.seed,
                                         samples);
        });
        run([&] {
            return checks::rellich_check("rellich/measure_m", checks::line_measure_instance(cfg.alpha),
                                         checks::line_space(cfg.support_radius, cfg.alpha), cfg.seed,
                                         samples);
        });
        run([&] { return checks::schrodinger_reduction(cfg.seed, std::min<std::size_t>(samples, 100)); });
    }

    if (all || cfg.suite == "solve") {
        run([&] { return checks::solve_line_exhaustion(cfg.stages, cfg.stop_tol, cfg.alpha); });
        run([&] { return checks::solve_linearity(cfg.seed); });
    }

    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    report.checks = std::move(results);
    report.overall_pass = true;
    for (const CheckResult& c : report.checks) report.overall_pass = report.overall_pass && c.pass;

    if (!cfg.out.empty()) write_text_file(cfg.out, report.to_json().dump(2) + "\n");
    return report;
}

} // namespace graphineq
