#include "graphineq/eikonal.hpp"

#include <algorithm>
#include <cmath>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

double theta_power_ratio(double t, double alpha) {
    if (!(t >= 0.0)) throw DomainViolation("theta_power_ratio: t must be nonnegative");
    const double h = t - 1.0;
    if (std::fabs(h) < 1e-6) {
        // ((1+h)^alpha - 1)/h = alpha + alpha(alpha-1)/2 h + alpha(alpha-1)(alpha-2)/6 h^2 + O(h^3)
        const double r = alpha + alpha * (alpha - 1.0) / 2.0 * h +
                         alpha * (alpha - 1.0) * (alpha - 2.0) / 6.0 * h * h;
        return r * r;
    }
    const double r = (1.0 - std::pow(t, alpha)) / (1.0 - t);
    return r * r;
}

double theta_log_ratio(double a, double t) {
    if (!(a > 0.0) || !(t > 0.0)) throw DomainViolation("theta_log_ratio: arguments must be positive");
    const double L = std::log1p(t);
    const double h = a - 1.0;
    if (std::fabs(h) < 1e-6) {
        // log(at+1) = L + log(1 + u) with u = h t/(t+1); the ratio
        // (1 - log(at+1)/L)/(1-a) expands to (t/((t+1)L)) (1 - u/2 + u^2/3).
        const double u = h * t / (t + 1.0);
        const double r = t / ((t + 1.0) * L) * (1.0 - u / 2.0 + u * u / 3.0);
        return r * r;
    }
    const double r = (1.0 - std::log1p(a * t) / L) / (1.0 - a);
    return r * r;
}

double gamma_power(double alpha, double eps) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainViolation("gamma_power: alpha must lie in (0,1), got " + std::to_string(alpha));
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainViolation("gamma_power: eps must lie in (0,1), got " + std::to_string(eps));
    return theta_power_ratio(eps, alpha);
}

double gamma_log(double c, double eps) {
    if (!(c > 0.0)) throw DomainViolation("gamma_log: c must be positive, got " + std::to_string(c));
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainViolation("gamma_log: eps must lie in (0,1), got " + std::to_string(eps));
    return theta_log_ratio(eps, c);
}

double corollary_constants(ThetaKind kind, double degree_bound, double extra) {
    if (!(degree_bound >= 2.0))
        throw DomainViolation("corollary_constants: degree bound must be >= 2");
    const double eps = std::pow(degree_bound, -0.5);
    switch (kind) {
    case ThetaKind::Power:
        return gamma_power(extra, eps);
    case ThetaKind::Log:
        if (!(extra > 0.0)) throw DomainViolation("corollary_constants: floor c must be positive");
        return gamma_log(std::sqrt(extra), eps);
    }
    throw DomainViolation("corollary_constants: unknown kind");
}

double AdmissibleFamily::theta(double t) const {
    switch (kind) {
    case ThetaKind::Power:
        if (!(t >= 0.0)) throw DomainViolation("theta: t must be nonnegative");
        return std::pow(t, alpha);
    case ThetaKind::Log:
        if (!(t >= 0.0)) throw DomainViolation("theta: t must be nonnegative");
        return std::log1p(t);
    }
    throw DomainViolation("theta: unknown kind");
}

double AdmissibleFamily::gamma(double eps) const {
    switch (kind) {
    case ThetaKind::Power:
        return gamma_power(alpha, eps);
    case ThetaKind::Log:
        return gamma_log(floor_c, eps);
    }
    throw DomainViolation("gamma: unknown kind");
}

AdmissibleFamily AdmissibleFamily::power(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainViolation("AdmissibleFamily::power: alpha must lie in (0,1)");
    return {ThetaKind::Power, alpha, 0.0};
}

AdmissibleFamily AdmissibleFamily::log_family(double c) {
    if (!(c > 0.0)) throw DomainViolation("AdmissibleFamily::log_family: c must be positive");
    return {ThetaKind::Log, 0.0, c};
}

double admissibility_violation_at(const AdmissibleFamily& fam, double gamma, double t, double a) {
    const double th_t = fam.theta(t);
    const double th_at = fam.theta(a * t);
    return std::fabs(th_t - th_at) - std::sqrt(gamma) * std::fabs(1.0 - a) * th_t;
}

AdmissibilityResult admissibility_check(const AdmissibleFamily& fam, double gamma,
                                        std::span<const std::pair<double, double>> grid) {
    AdmissibilityResult result;
    for (const auto& [t, a] : grid) {
        const double v = admissibility_violation_at(fam, gamma, t, a);
        ++result.evaluated;
        if (v > result.worst_violation) {
            result.worst_violation = v;
            result.worst_t = t;
            result.worst_a = a;
        }
    }
    return result;
}

std::vector<std::pair<double, double>> admissibility_grid(const AdmissibleFamily& fam, double eps,
                                                          double t_min, double t_max, int nt,
                                                          double a_max, int na) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainViolation("admissibility_grid: eps must lie in (0,1)");
    if (nt < 2 || na < 2) throw DomainViolation("admissibility_grid: need at least 2 points per axis");
    const double c = fam.floor_c;
    t_min = std::max(t_min, c > 0.0 ? c : t_min);

    std::vector<double> ts, as;
    for (int i = 0; i < nt; ++i)
        ts.push_back(t_min * std::pow(t_max / t_min, static_cast<double>(i) / (nt - 1)));
    for (int j = 0; j < na; ++j)
        as.push_back(eps * std::pow(a_max / eps, static_cast<double>(j) / (na - 1)));
    as.push_back(eps); // exact corner rows
    as.push_back(1.0);

    std::vector<std::pair<double, double>> grid;
    grid.reserve(ts.size() * as.size());
    for (double t : ts)
        for (double a : as)
            if (a * t >= c) grid.emplace_back(t, a);
    return grid;
}

namespace {

// |grad g^(1/2)|^2(x), optionally restricted to neighbors inside `domain`.
double sqrt_gradient_sq(const WeightedGraph& graph, const std::function<double(VertexId)>& g,
                        VertexId x, const std::function<bool(VertexId)>& domain) {
    const double gx = g(x);
    if (!(gx > 0.0))
        throw DomainViolation("eikonal: g(" + vertex_to_string(x) + ") = " + std::to_string(gx) +
                              " is not positive");
    const double sx = std::sqrt(gx);
    SumAccumulator acc;
    for (const Neighbor& n : graph.neighbors(x)) {
        if (domain && !domain(n.vertex)) continue;
        const double gy = g(n.vertex);
        if (gy < 0.0)
            throw DomainViolation("eikonal: g(" + vertex_to_string(n.vertex) + ") is negative");
        const double d = sx - std::sqrt(gy);
        acc.add(n.weight * d * d);
    }
    return 0.5 * acc.value();
}

} // namespace

EikonalReport eikonal_margin_pointwise(const SchrodingerOperator& op,
                                       const std::function<double(VertexId)>& g,
                                       const HardyWeight& w, double gamma,
                                       std::span<const VertexId> window,
                                       const std::function<bool(VertexId)>& domain,
                                       double tolerance_rel) {
    EikonalReport report;
    report.mode = EikonalMode::Pointwise;
    report.gamma = gamma;
    report.tolerance_rel = tolerance_rel;
    double worst_rel = std::numeric_limits<double>::infinity();
    for (VertexId x : window) {
        const double rhs = gamma * g(x) * w(x) * op.measure(x);
        const double lhs = sqrt_gradient_sq(*op.graph, g, x, domain);
        EikonalSample s;
        s.label = vertex_to_string(x);
        s.margin = rhs - lhs;
        s.scale = std::fabs(rhs) + std::fabs(lhs);
        const double rel = s.margin / (s.scale + 1e-300);
        if (rel < worst_rel) {
            worst_rel = rel;
            report.worst_margin = s.margin;
            report.worst_scale = s.scale;
            report.worst_label = s.label;
        }
        report.samples.push_back(std::move(s));
    }
    report.pass = report.samples.empty() ||
                  report.worst_margin >= -tolerance_rel * report.worst_scale;
    return report;
}

EikonalReport eikonal_margin_weak(const SchrodingerOperator& op,
                                  const std::function<double(VertexId)>& g, const HardyWeight& w,
                                  double gamma, std::span<const VertexFunction> phis,
                                  double tolerance_rel) {
    EikonalReport report;
    report.mode = EikonalMode::Weak;
    report.gamma = gamma;
    report.tolerance_rel = tolerance_rel;
    const Measure& m = op.measure;
    double worst_rel = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const VertexFunction& phi = phis[i];
        const double rhs =
            gamma * weighted_norm_sq(phi, [&](VertexId x) { return g(x) * w(x) * m(x); });
        const auto& supp = phi.support();
        const auto& vals = phi.support_values();
        SumAccumulator cross;
        for (std::size_t k = 0; k < supp.size(); ++k) {
            const double sx = std::sqrt(g(supp[k]));
            for (const Neighbor& n : op.graph->neighbors(supp[k])) {
                const double py = phi(n.vertex);
                if (py == 0.0) continue;
                const double d = sx - std::sqrt(g(n.vertex));
                cross.add(n.weight * vals[k] * py * d * d);
            }
        }
        const double lhs = 0.5 * cross.value();
        EikonalSample s;
        s.label = "phi[" + std::to_string(i) + "]";
        s.margin = rhs - lhs;
        s.scale = std::fabs(rhs) + std::fabs(lhs);
        const double rel = s.margin / (s.scale + 1e-300);
        if (rel < worst_rel) {
            worst_rel = rel;
            report.worst_margin = s.margin;
            report.worst_scale = s.scale;
            report.worst_label = s.label;
        }
        report.samples.push_back(std::move(s));
    }
    report.pass = report.samples.empty() ||
                  report.worst_margin >= -tolerance_rel * report.worst_scale;
    return report;
}

nlohmann::json EikonalReport::to_json() const {
    nlohmann::json j;
    j["mode"] = mode == EikonalMode::Pointwise ? "pointwise" : "weak";
    j["gamma"] = gamma;
    j["tolerance_rel"] = tolerance_rel;
    j["checked"] = samples.size();
    j["worst_margin"] = worst_margin;
    j["worst_scale"] = worst_scale;
    j["worst_at"] = worst_label;
    j["pass"] = pass;
    return j;
}

std::vector<VertexId> x_epsilon(const WeightedGraph& graph, const VertexFunction& u, double eps,
                                std::span<const VertexId> window) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainViolation("x_epsilon: eps must lie in (0,1]");
    const double eps_sq = eps * eps;
    std::vector<VertexId> out;
    for (VertexId x : window) {
        const double ux = u(x);
        if (!(ux > 0.0))
            throw DomainViolation("x_epsilon: u(" + vertex_to_string(x) + ") is not positive");
        bool inside = true;
        for (const Neighbor& n : graph.neighbors(x)) {
            if (u(n.vertex) / ux < eps_sq) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace graphineq
