#include "graphineq/hardy.hpp"

#include <cmath>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

namespace {

double positive_power(double v, double alpha, VertexId where) {
    if (v < 0.0)
        throw DomainViolation("supersolution: u(" + vertex_to_string(where) + ") is negative");
    if (alpha == 1.0) return v;
    if (alpha == 0.5) return std::sqrt(v);
    return std::pow(v, alpha);
}

} // namespace

HardyWeight HardyWeight::supersolution(SchrodingerOperator op, VertexFunction u, double alpha,
                                       bool validate_superharmonic,
                                       std::function<bool(VertexId)> domain) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainViolation("supersolution: alpha must lie in (0,1], got " + std::to_string(alpha));

    VertexFunction u_alpha = VertexFunction::lazy(
        [u, alpha](VertexId x) { return positive_power(u(x), alpha, x); },
        [u](VertexId x) { return u.in_window(x); }, "window of u");
    VertexFunction sqrt_u = VertexFunction::lazy(
        [u](VertexId x) { return positive_power(u(x), 0.5, x); },
        [u](VertexId x) { return u.in_window(x); }, "window of u");

    auto split = [op, u, sqrt_u](VertexId x) {
        const double ux = u(x);
        if (!(ux > 0.0))
            throw DomainViolation("supersolution: u(" + vertex_to_string(x) + ") is not positive");
        const double lap_u = laplacian_apply(*op.graph, u, x);
        const double grad = grad_norm_sq(*op.graph, sqrt_u, x);
        double value = (lap_u / (2.0 * ux) + grad / ux);
        if (!op.measure.is_unit()) value /= op.measure(x);
        if (!op.potential.is_zero()) value += op.potential(x);
        return value;
    };

    auto eval = [op, u, u_alpha, alpha, validate_superharmonic, split](VertexId x) {
        const double ux = u(x);
        if (!(ux > 0.0))
            throw DomainViolation("supersolution: u(" + vertex_to_string(x) + ") = " +
                                  std::to_string(ux) + " is not positive");
        if (validate_superharmonic) {
            const double hu = schrodinger_apply(op, u, x);
            if (hu < 0.0)
                throw DomainViolation("supersolution: Hu(" + vertex_to_string(x) + ") = " +
                                      std::to_string(hu) + " < 0; u is not superharmonic");
        }
        const double ua = positive_power(ux, alpha, x);
        const double w = schrodinger_apply(op, u_alpha, x) / ua;

        if (alpha == 0.5) {
            // summand-scale tolerance: the direct numerator cancels severely
            // at shallow weights, so compare against sum |b (u^a(x)+u^a(y))|
            SumAccumulator mags;
            for (const Neighbor& n : op.graph->neighbors(x))
                mags.add(n.weight * (ua + positive_power(u(n.vertex), 0.5, n.vertex)));
            double scale = mags.value() / ua;
            if (!op.measure.is_unit()) scale /= op.measure(x);
            if (!op.potential.is_zero()) scale += std::fabs(op.potential(x));
            const double other = split(x);
            if (std::fabs(w - other) > 1e-12 * scale)
                throw InternalError("supersolution: direct and split forms disagree at " +
                                    vertex_to_string(x) + ": " + std::to_string(w) + " vs " +
                                    std::to_string(other) + " (scale " + std::to_string(scale) + ")");
        }
        if (!(w > 0.0))
            throw DomainViolation("supersolution: weight at " + vertex_to_string(x) + " is " +
                                  std::to_string(w) + ", not strictly positive");
        return w;
    };

    HardyWeight hw;
    hw.provenance_ = Provenance::Supersolution;
    hw.name_ = "supersolution(alpha=" + std::to_string(alpha) + ")";
    hw.alpha_ = alpha;
    hw.eval_ = eval;
    hw.split_ = (alpha == 0.5) ? std::function<double(VertexId)>(split) : nullptr;
    hw.domain_ = std::move(domain);
    return hw;
}

HardyWeight HardyWeight::closed_form(std::string name, std::function<double(VertexId)> fn,
                                     std::function<bool(VertexId)> domain) {
    HardyWeight hw;
    hw.provenance_ = Provenance::ClosedForm;
    hw.name_ = std::move(name);
    hw.eval_ = std::move(fn);
    hw.domain_ = std::move(domain);
    return hw;
}

HardyWeight HardyWeight::user_supplied(std::function<double(VertexId)> fn,
                                       std::function<bool(VertexId)> domain) {
    HardyWeight hw;
    hw.provenance_ = Provenance::UserSupplied;
    hw.name_ = "user";
    hw.eval_ = std::move(fn);
    hw.domain_ = std::move(domain);
    return hw;
}

double HardyWeight::operator()(VertexId x) const {
    if (!eval_) throw DomainViolation("HardyWeight: empty weight");
    if (domain_ && !domain_(x))
        throw DomainViolation("HardyWeight: vertex " + vertex_to_string(x) +
                              " outside the weight's domain of validity");
    const double w = eval_(x);
    if (!(w > 0.0))
        throw DomainViolation("HardyWeight: w(" + vertex_to_string(x) + ") = " + std::to_string(w) +
                              " is not strictly positive");
    return w;
}

double HardyWeight::split_form(VertexId x) const {
    if (!split_)
        throw DomainViolation("HardyWeight: split form requires supersolution provenance with alpha = 1/2");
    return split_(x);
}

HardyWeight supersolution_weight(const SchrodingerOperator& op, const VertexFunction& u,
                                 double alpha, bool validate_superharmonic,
                                 std::function<bool(VertexId)> domain) {
    return HardyWeight::supersolution(op, u, alpha, validate_superharmonic, std::move(domain));
}

HardyMargin hardy_margin(const SchrodingerOperator& op, const HardyWeight& w,
                         const VertexFunction& phi) {
    for (VertexId x : phi.support())
        if (!w.in_domain(x))
            throw DomainViolation("hardy_margin: phi is supported at " + vertex_to_string(x) +
                                  " outside the weight's domain");
    HardyMargin result;
    result.energy = energy_form(op, phi);
    const Measure& m = op.measure;
    result.weighted_sq = weighted_norm_sq(phi, [&w, &m](VertexId x) { return w(x) * m(x); });
    result.margin = result.energy - result.weighted_sq;
    result.scale = std::fabs(result.energy) + std::fabs(result.weighted_sq);
    return result;
}

double line_weight(std::int64_t k) {
    if (k < 1) throw DomainViolation("line_weight: k must be >= 1, got " + std::to_string(k));
    const double x = 1.0 / static_cast<double>(k);
    const double r = std::sqrt(1.0 - x * x);
    const double s = std::sqrt(2.0 + 2.0 * r);
    return 2.0 * x * x / ((1.0 + r) * (2.0 + s));
}

namespace {

double binomial_exact_or_lgamma(int n, int k) {
    if (n <= 100) {
        unsigned __int128 acc = 1;
        for (int i = 1; i <= k; ++i) {
            acc *= static_cast<unsigned>(n - k + i);
            acc /= static_cast<unsigned>(i);
        }
        // 128-bit integers convert exactly up to the double mantissa; the
        // values here (<= C(100,50) ~ 1e29) round once, which is all the
        // series needs.
        return static_cast<double>(acc);
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

} // namespace

double line_weight_series(std::int64_t k, int n_terms) {
    if (k < 2)
        throw DomainViolation("line_weight_series: requires k >= 2, got " + std::to_string(k));
    if (n_terms < 1) throw DomainViolation("line_weight_series: n_terms must be >= 1");
    SumAccumulator acc;
    const double inv_k2 = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    double k_pow = 1.0;
    for (int l = 1; l <= n_terms; ++l) {
        k_pow *= inv_k2;
        const double binom = binomial_exact_or_lgamma(4 * l, 2 * l);
        acc.add(binom / (4.0 * l - 1.0) * std::ldexp(1.0, -(4 * l - 1)) * k_pow);
    }
    return acc.value();
}

QuadrantWeight quadrant_weight(std::span<const std::int64_t> k) {
    QuadrantWeight result;
    SumAccumulator value, bound;
    for (std::int64_t ki : k) {
        if (ki < 1)
            throw DomainViolation("quadrant_weight: coordinates must be >= 1, got " +
                                  std::to_string(ki));
        value.add(line_weight(ki));
        bound.add(0.25 / (static_cast<double>(ki) * static_cast<double>(ki)));
    }
    result.value = value.value();
    result.lower_bound = bound.value();
    return result;
}

HardyWeight line_hardy_weight() {
    return HardyWeight::closed_form(
        "line",
        [](VertexId x) { return line_weight(static_cast<std::int64_t>(x)); },
        [](VertexId x) { return x >= 1; });
}

HardyWeight quadrant_hardy_weight(int dim) {
    return HardyWeight::closed_form(
        "quadrant:" + std::to_string(dim),
        [dim](VertexId x) {
            auto coords = lattice_coords(x, dim);
            return quadrant_weight(coords).value;
        },
        [dim](VertexId x) {
            for (auto c : lattice_coords(x, dim))
                if (c < 1) return false;
            return true;
        });
}

} // namespace graphineq
