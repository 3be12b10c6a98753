#pragma once

#include <functional>
#include <optional>

#include "graphineq/eikonal.hpp"
#include "graphineq/hardy.hpp"
#include "graphineq/report.hpp"
#include "graphineq/sampler.hpp"

namespace graphineq {

/// Everything a Rellich margin needs: the operator, the Hardy weight w, the
/// eikonal function g, the constant gamma in (0,1), and an optional domain
/// restriction Y.
struct RellichInstance {
    SchrodingerOperator op;
    HardyWeight w;
    std::function<double(VertexId)> g;
    double gamma = 0.0;
    std::function<bool(VertexId)> domain; // null means all of X
};

struct RellichMargin {
    double lhs = 0.0;    // || 1_phi H phi ||_{(g/w) m}
    double rhs = 0.0;    // (1 - gamma) || phi ||_{g w m}
    double margin = 0.0; // lhs - rhs; >= 0 iff the inequality holds
    double scale = 0.0;  // lhs + rhs
};

/// The Rellich margin for one finitely supported phi. The 1_phi truncation is
/// honored exactly: H phi is evaluated only on supp(phi), so g/w is never
/// needed elsewhere.
RellichMargin rellich_margin(const RellichInstance& inst, const VertexFunction& phi);

using SampleFn = std::function<VertexFunction(std::size_t)>;

/// Sweeps n sampled phi. Each sample also runs the pointwise eikonal check on
/// supp(phi) and the weak eikonal check for phi, and verifies the implication
/// chain: pointwise pass => weak pass => Rellich margin above -tol*scale.
/// Edge symmetry is audited on every visited support.
InequalityReport rellich_sweep(const RellichInstance& inst, const SampleFn& sampler,
                               std::size_t n_samples, double tolerance_rel = 1e-9,
                               const std::function<std::vector<std::int64_t>(VertexId)>& coords = nullptr);

/// Hardy sweep with the same report shape: margin = energy - ||phi||^2_{w m}.
InequalityReport hardy_sweep(const SchrodingerOperator& op, const HardyWeight& w,
                             const SampleFn& sampler, std::size_t n_samples,
                             double tolerance_rel = 1e-9,
                             const std::function<std::vector<std::int64_t>(VertexId)>& coords = nullptr);

} // namespace graphineq
