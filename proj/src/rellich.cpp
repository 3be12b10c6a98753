#include "graphineq/rellich.hpp"

#include <cmath>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

RellichMargin rellich_margin(const RellichInstance& inst, const VertexFunction& phi) {
    if (!(inst.gamma > 0.0 && inst.gamma < 1.0))
        throw DomainViolation("rellich_margin: gamma must lie in (0,1)");
    const auto& supp = phi.support();
    const auto& vals = phi.support_values();
    for (VertexId x : supp) {
        if (inst.domain && !inst.domain(x))
            throw DomainViolation("rellich_margin: phi is supported at " + vertex_to_string(x) +
                                  " outside the instance domain");
        if (!inst.w.in_domain(x))
            throw DomainViolation("rellich_margin: phi escapes the Hardy weight's domain at " +
                                  vertex_to_string(x));
    }

    SumAccumulator lhs_sq, rhs_sq;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        const VertexId x = supp[i];
        const double g = inst.g(x);
        const double w = inst.w(x);
        const double m = inst.op.measure(x);
        const double hphi = schrodinger_apply(inst.op, phi, x);
        lhs_sq.add(g / w * m * hphi * hphi);
        rhs_sq.add(g * w * m * vals[i] * vals[i]);
    }

    RellichMargin result;
    result.lhs = std::sqrt(lhs_sq.value());
    result.rhs = (1.0 - inst.gamma) * std::sqrt(rhs_sq.value());
    result.margin = result.lhs - result.rhs;
    result.scale = result.lhs + result.rhs;
    return result;
}

namespace {

struct SweepState {
    InequalityReport report;
    std::vector<double> rels;

    void record(double margin, double scale, std::size_t index, const VertexFunction& phi,
                const std::function<std::vector<std::int64_t>(VertexId)>& coords) {
        const double rel = margin / (scale + 1e-300);
        rels.push_back(rel);
        if (rel < report.min_rel) {
            report.min_rel = rel;
            report.min_margin = margin;
            report.min_scale = scale;
            report.argmin_index = index;
            report.argmin_phi = phi_to_json(phi, coords);
        }
    }

    void finish(double tolerance_rel) {
        report.rel_quantiles = quantiles5(rels);
        report.pass = rels.empty() || report.min_rel >= -tolerance_rel;
        if (report.chain_checked) report.pass = report.pass && report.chain_consistent;
    }
};

} // namespace

InequalityReport rellich_sweep(const RellichInstance& inst, const SampleFn& sampler,
                               std::size_t n_samples, double tolerance_rel,
                               const std::function<std::vector<std::int64_t>(VertexId)>& coords) {
    SweepState state;
    state.report.check = "rellich";
    state.report.samples = n_samples;
    state.report.tolerance_rel = tolerance_rel;
    state.report.gamma = inst.gamma;
    state.report.chain_checked = true;

    for (std::size_t i = 0; i < n_samples; ++i) {
        const VertexFunction phi = sampler(i);
        audit_symmetry(*inst.op.graph, phi.support());

        const RellichMargin rm = rellich_margin(inst, phi);
        state.record(rm.margin, rm.scale, i, phi, coords);

        // implication chain, per sample: pointwise eikonal on supp(phi)
        // => weak eikonal for phi => Rellich margin
        const EikonalReport pointwise = eikonal_margin_pointwise(
            inst.op, inst.g, inst.w, inst.gamma, phi.support(), inst.domain, 1e-10);
        if (pointwise.pass) {
            const VertexFunction phis[] = {phi};
            const EikonalReport weak =
                eikonal_margin_weak(inst.op, inst.g, inst.w, inst.gamma, phis, 1e-10);
            const bool rellich_ok = rm.margin >= -tolerance_rel * rm.scale;
            if (!weak.pass || !rellich_ok) state.report.chain_consistent = false;
        }
    }

    state.finish(tolerance_rel);
    return state.report;
}

InequalityReport hardy_sweep(const SchrodingerOperator& op, const HardyWeight& w,
                             const SampleFn& sampler, std::size_t n_samples,
                             double tolerance_rel,
                             const std::function<std::vector<std::int64_t>(VertexId)>& coords) {
    SweepState state;
    state.report.check = "hardy";
    state.report.samples = n_samples;
    state.report.tolerance_rel = tolerance_rel;

    for (std::size_t i = 0; i < n_samples; ++i) {
        const VertexFunction phi = sampler(i);
        audit_symmetry(*op.graph, phi.support());
        const HardyMargin hm = hardy_margin(op, w, phi);
        state.record(hm.margin, hm.scale, i, phi, coords);
    }

    state.finish(tolerance_rel);
    return state.report;
}

} // namespace graphineq
