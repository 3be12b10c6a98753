#include "graphineq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

double laplacian_apply(const WeightedGraph& graph, const VertexFunction& f, VertexId x) {
    const double fx = f(x);
    SumAccumulator acc;
    for (const Neighbor& n : graph.neighbors(x)) acc.add(n.weight * (fx - f(n.vertex)));
    return acc.value();
}

double schrodinger_apply(const SchrodingerOperator& op, const VertexFunction& f, VertexId x) {
    double value = laplacian_apply(*op.graph, f, x);
    if (!op.measure.is_unit()) value /= op.measure(x);
    if (!op.potential.is_zero()) value += op.potential(x) * f(x);
    return value;
}

double grad_norm_sq(const WeightedGraph& graph, const VertexFunction& f, VertexId x) {
    const double fx = f(x);
    SumAccumulator acc;
    for (const Neighbor& n : graph.neighbors(x)) {
        const double d = fx - f(n.vertex);
        acc.add(n.weight * d * d);
    }
    return 0.5 * acc.value();
}

double weighted_norm_sq(const VertexFunction& f, const std::function<double(VertexId)>& weight) {
    const auto& supp = f.support();
    const auto& vals = f.support_values();
    SumAccumulator acc;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        const double w = weight(supp[i]);
        if (!(w > 0.0))
            throw DomainViolation("weighted_norm_sq: weight at vertex " + vertex_to_string(supp[i]) +
                                  " is " + std::to_string(w) + ", not positive");
        acc.add(w * vals[i] * vals[i]);
    }
    return acc.value();
}

std::vector<VertexId> support_with_neighbors(const WeightedGraph& graph, const VertexFunction& phi) {
    std::set<VertexId> out;
    for (VertexId x : phi.support()) {
        out.insert(x);
        for (const Neighbor& n : graph.neighbors(x)) out.insert(n.vertex);
    }
    return {out.begin(), out.end()};
}

double energy_form(const SchrodingerOperator& op, const VertexFunction& phi) {
    SumAccumulator acc;
    for (VertexId x : support_with_neighbors(*op.graph, phi)) acc.add(grad_norm_sq(*op.graph, phi, x));
    if (!op.potential.is_zero()) {
        const auto& supp = phi.support();
        const auto& vals = phi.support_values();
        for (std::size_t i = 0; i < supp.size(); ++i)
            acc.add(op.measure(supp[i]) * op.potential(supp[i]) * vals[i] * vals[i]);
    }
    return acc.value();
}

ResidualReport greens_formula_residual(const SchrodingerOperator& op, const VertexFunction& phi,
                                       const VertexFunction& f) {
    if (!phi.finite_support() || !f.finite_support())
        throw DomainViolation("greens_formula_residual: phi and f must be finitely supported");
    const WeightedGraph& graph = *op.graph;

    // member 1: (1/2) sum_{x,y} b grad(phi) grad(f) + sum m q phi f
    SumAccumulator a;
    for (VertexId x : support_with_neighbors(graph, phi)) {
        const double px = phi(x);
        for (const Neighbor& n : graph.neighbors(x)) {
            const double dphi = px - phi(n.vertex);
            if (dphi == 0.0) continue;
            a.add(0.5 * n.weight * dphi * (f(x) - f(n.vertex)));
        }
    }
    if (!op.potential.is_zero()) {
        const auto& supp = phi.support();
        const auto& vals = phi.support_values();
        for (std::size_t i = 0; i < supp.size(); ++i)
            a.add(op.measure(supp[i]) * op.potential(supp[i]) * vals[i] * f(supp[i]));
    }

    // member 2: sum m phi Hf over supp(phi)
    SumAccumulator b;
    {
        const auto& supp = phi.support();
        const auto& vals = phi.support_values();
        for (std::size_t i = 0; i < supp.size(); ++i)
            b.add(op.measure(supp[i]) * vals[i] * schrodinger_apply(op, f, supp[i]));
    }

    // member 3: sum m f H(phi) over supp(f)
    SumAccumulator c;
    {
        const auto& supp = f.support();
        const auto& vals = f.support_values();
        for (std::size_t i = 0; i < supp.size(); ++i)
            c.add(op.measure(supp[i]) * vals[i] * schrodinger_apply(op, phi, supp[i]));
    }

    const double va = a.value(), vb = b.value(), vc = c.value();
    ResidualReport report;
    report.residual = std::max({std::fabs(va - vb), std::fabs(vb - vc), std::fabs(va - vc)});
    report.scale = a.abs_scale() + b.abs_scale() + c.abs_scale();
    return report;
}

ResidualReport main_identity_residual(const WeightedGraph& graph, const VertexFunction& phi,
                                      const VertexFunction& f) {
    if (!phi.finite_support())
        throw DomainViolation("main_identity_residual: phi must be finitely supported");
    const auto& supp = phi.support();
    const auto& vals = phi.support_values();

    // left: sum (f^2 phi) Delta(phi)
    SumAccumulator left;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        const double fx = f(supp[i]);
        left.add(fx * fx * vals[i] * laplacian_apply(graph, phi, supp[i]));
    }

    // right, first part: sum |grad(f phi)|^2 with f phi as an explicit
    // finitely supported product
    std::map<VertexId, double> product;
    for (std::size_t i = 0; i < supp.size(); ++i) product[supp[i]] = f(supp[i]) * vals[i];
    const VertexFunction fphi = VertexFunction::from_support(product);
    SumAccumulator right;
    for (VertexId x : support_with_neighbors(graph, phi)) right.add(grad_norm_sq(graph, fphi, x));

    // right, second part: -(1/2) sum b (phi x phi) (grad f)^2, pairs with
    // both phi values nonzero
    for (std::size_t i = 0; i < supp.size(); ++i) {
        for (const Neighbor& n : graph.neighbors(supp[i])) {
            const double py = phi(n.vertex);
            if (py == 0.0) continue;
            const double df = f(supp[i]) - f(n.vertex);
            right.add(-0.5 * n.weight * vals[i] * py * df * df);
        }
    }

    ResidualReport report;
    report.residual = std::fabs(left.value() - right.value());
    report.scale = left.abs_scale() + right.abs_scale();
    return report;
}

SchrodingerOperator ground_state_transform(const SchrodingerOperator& op, const VertexFunction& u) {
    struct TransformedGraph final : WeightedGraph {
        GraphPtr base;
        VertexFunction u;

        std::vector<Neighbor> neighbors(VertexId x) const override {
            const double ux = u(x);
            if (!(ux > 0.0))
                throw DomainViolation("ground_state_transform: u(" + vertex_to_string(x) + ") = " +
                                      std::to_string(ux) + " is not positive");
            std::vector<Neighbor> out;
            for (const Neighbor& n : base->neighbors(x)) {
                const double uy = u(n.vertex);
                if (uy < 0.0)
                    throw DomainViolation("ground_state_transform: u(" + vertex_to_string(n.vertex) +
                                          ") is negative");
                const double w = n.weight * ux * uy;
                if (w > 0.0) out.push_back({n.vertex, w});
            }
            return out;
        }
    };

    auto graph = std::make_shared<TransformedGraph>();
    graph->base = op.graph;
    graph->u = u;

    Potential q_u([op, u](VertexId x) {
        const double ux = u(x);
        if (!(ux > 0.0))
            throw DomainViolation("ground_state_transform: u(" + vertex_to_string(x) + ") = " +
                                  std::to_string(ux) + " is not positive");
        return schrodinger_apply(op, u, x) / ux;
    });

    Measure measure = op.measure;
    Measure m_u([measure, u](VertexId x) {
        const double ux = u(x);
        return ux * ux * measure(x);
    });

    return {graph, m_u, q_u};
}

std::shared_ptr<FiniteGraph> extend_with_infinity(const WeightedGraph& transformed,
                                                  std::span<const VertexId> window,
                                                  const Measure& measure, const VertexFunction& u,
                                                  const VertexFunction& hu, double tolerance) {
    std::set<VertexId> in_window(window.begin(), window.end());
    auto graph = std::make_shared<FiniteGraph>();
    for (VertexId x : window) {
        for (const Neighbor& n : transformed.neighbors(x)) {
            if (!in_window.count(n.vertex)) continue;
            if (x < n.vertex) graph->add_edge(x, n.vertex, n.weight);
        }
        double defect = hu(x);
        if (defect < -tolerance)
            throw DomainViolation("extend_with_infinity: Hu(" + vertex_to_string(x) + ") = " +
                                  std::to_string(defect) + " is negative; u is not superharmonic");
        if (defect < 0.0) defect = 0.0;
        const double w = measure(x) * u(x) * defect;
        if (w > 0.0) graph->add_edge(x, kInfinityVertex, w);
    }
    return graph;
}

EllipticityReport ellipticity_and_harnack(const WeightedGraph& graph,
                                          std::span<const VertexId> window,
                                          const std::optional<VertexFunction>& u) {
    EllipticityReport report;
    report.harnack_ratio = std::numeric_limits<double>::quiet_NaN();
    double lambda = 0.0;
    double ratio = std::numeric_limits<double>::infinity();
    bool any_edge = false;
    for (VertexId x : window) {
        const double deg = graph.weighted_degree(x);
        const double ux = u ? (*u)(x) : 0.0;
        if (u && !(ux > 0.0))
            throw DomainViolation("ellipticity_and_harnack: u(" + vertex_to_string(x) +
                                  ") is not positive");
        for (const Neighbor& n : graph.neighbors(x)) {
            any_edge = true;
            lambda = std::max(lambda, deg / n.weight);
            if (u) ratio = std::min(ratio, (*u)(n.vertex) / ux);
        }
    }
    report.lambda = lambda;
    if (u && any_edge) report.harnack_ratio = ratio;
    if (graph.standard_weights() && graph.degree_bound())
        report.harnack_floor = 1.0 / *graph.degree_bound();
    else if (lambda > 0.0)
        report.harnack_floor = 1.0 / lambda;
    return report;
}

} // namespace graphineq
