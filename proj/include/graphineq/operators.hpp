#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graphineq/graph.hpp"
#include "graphineq/vertex_function.hpp"

namespace graphineq {

/// H = (1/m) Delta + q over a weighted graph. The Laplacian itself is the
/// special case m = 1, q = 0. Immutable after construction.
struct SchrodingerOperator {
    GraphPtr graph;
    Measure measure;
    Potential potential;

    static SchrodingerOperator laplacian(GraphPtr g) { return {std::move(g), Measure(), Potential()}; }
};

/// Delta f(x) = sum_y b(x,y) (f(x) - f(y)).
double laplacian_apply(const WeightedGraph& graph, const VertexFunction& f, VertexId x);

/// H f(x) = (1/m(x)) Delta f(x) + q(x) f(x).
double schrodinger_apply(const SchrodingerOperator& op, const VertexFunction& f, VertexId x);

/// |grad f|^2(x) = (1/2) sum_y b(x,y) (f(x) - f(y))^2.
double grad_norm_sq(const WeightedGraph& graph, const VertexFunction& f, VertexId x);

/// sum_{x in supp f} weight(x) f(x)^2. The weight must be strictly positive
/// on the support; a nonpositive value raises DomainViolation naming the
/// vertex.
double weighted_norm_sq(const VertexFunction& f, const std::function<double(VertexId)>& weight);

/// Sorted union of supp(phi) with all its graph neighbors — exactly the set
/// where |grad phi|^2 can be nonzero.
std::vector<VertexId> support_with_neighbors(const WeightedGraph& graph, const VertexFunction& phi);

/// Quadratic form sum_X (|grad phi|^2 + m q phi^2) for finitely supported phi.
double energy_form(const SchrodingerOperator& op, const VertexFunction& phi);

struct ResidualReport {
    double residual = 0.0; // max pairwise discrepancy between the members
    double scale = 0.0;    // sum of |summands| across all members
};

/// Green's formula: (1/2) sum b grad(phi) grad(f) + sum m q phi f
///                = sum m phi Hf = sum m f H(phi).
/// Each member is accumulated independently; the report carries the largest
/// pairwise discrepancy. phi and f must be finitely supported.
ResidualReport greens_formula_residual(const SchrodingerOperator& op, const VertexFunction& phi,
                                       const VertexFunction& f);

/// sum (f^2 phi) Delta(phi) = sum |grad(f phi)|^2
///                          - (1/2) sum_{x,y} b (phi x phi) (grad f)^2,
/// with the double sum restricted to pairs where both phi values are nonzero.
/// Both sides are computed independently.
ResidualReport main_identity_residual(const WeightedGraph& graph, const VertexFunction& phi,
                                      const VertexFunction& f);

/// Conjugation of H by a strictly positive u: edge weights b(x,y) u(x) u(y),
/// potential (1/u) Hu, measure u^2 m. The transformed energy form at phi
/// equals the original energy form at u*phi.
///
/// u must be strictly positive wherever the transformed operator is applied;
/// u may vanish at neighbors (the corresponding transformed edge disappears)
/// but a negative neighbor value raises DomainViolation.
SchrodingerOperator ground_state_transform(const SchrodingerOperator& op, const VertexFunction& u);

/// Supergraph construction over window + {inf}: keeps the edges of the
/// (already ground-state-transformed) graph inside the window and attaches
/// each x to the auxiliary vertex kInfinityVertex with weight
/// m(x) u(x) Hu(x). Requires Hu >= -tolerance on the window (u superharmonic
/// for H); values within the tolerance are clamped to 0.
///
/// For phi vanishing at inf, the supergraph Dirichlet sum equals the
/// transformed energy form including the potential term.
std::shared_ptr<FiniteGraph> extend_with_infinity(const WeightedGraph& transformed,
                                                  std::span<const VertexId> window,
                                                  const Measure& measure, const VertexFunction& u,
                                                  const VertexFunction& hu, double tolerance = 0.0);

struct EllipticityReport {
    double lambda = 0.0;        // max over window edges of deg(x) / b(x,z)
    double harnack_ratio = 0.0; // min over window edges of u(y)/u(x), if u given
    double harnack_floor = 0.0; // 1/D under standard weights, else 1/lambda
};

/// Uniform ellipticity constant of the window plus, for a supplied positive
/// superharmonic u, the observed local Harnack ratio against its theoretical
/// floor.
EllipticityReport ellipticity_and_harnack(const WeightedGraph& graph,
                                          std::span<const VertexId> window,
                                          const std::optional<VertexFunction>& u = std::nullopt);

} // namespace graphineq
