#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "graphineq/operators.hpp"

namespace graphineq {

/// Strictly positive Hardy weight with a provenance tag and an optional
/// domain of validity. Every evaluation validates positivity (and domain
/// membership when a domain is declared).
class HardyWeight {
public:
    enum class Provenance { Supersolution, ClosedForm, UserSupplied };

    HardyWeight() = default;

    /// Supersolution construction w = H(u^alpha)(x) / u^alpha(x) for a
    /// strictly positive superharmonic u and alpha in (0,1]. With
    /// validate_superharmonic set, every query additionally checks
    /// Hu(x) >= 0. For alpha = 1/2 each evaluation is cross-checked against
    /// the split form (1/m)(Delta u/(2u) + |grad u^(1/2)|^2/u) + q at
    /// 1e-12 times the summand scale.
    static HardyWeight supersolution(SchrodingerOperator op, VertexFunction u, double alpha,
                                     bool validate_superharmonic = false,
                                     std::function<bool(VertexId)> domain = nullptr);

    static HardyWeight closed_form(std::string name, std::function<double(VertexId)> fn,
                                   std::function<bool(VertexId)> domain = nullptr);

    static HardyWeight user_supplied(std::function<double(VertexId)> fn,
                                     std::function<bool(VertexId)> domain = nullptr);

    double operator()(VertexId x) const;

    /// Split-form evaluation; supersolution provenance with alpha = 1/2 only.
    double split_form(VertexId x) const;

    Provenance provenance() const { return provenance_; }
    const std::string& name() const { return name_; }
    double alpha() const { return alpha_; }

    bool has_domain() const { return static_cast<bool>(domain_); }
    bool in_domain(VertexId x) const { return !domain_ || domain_(x); }

private:
    Provenance provenance_ = Provenance::UserSupplied;
    std::string name_;
    double alpha_ = 0.0;
    std::function<double(VertexId)> eval_;
    std::function<double(VertexId)> split_;
    std::function<bool(VertexId)> domain_;
};

/// Convenience free function mirroring HardyWeight::supersolution.
HardyWeight supersolution_weight(const SchrodingerOperator& op, const VertexFunction& u,
                                 double alpha, bool validate_superharmonic = false,
                                 std::function<bool(VertexId)> domain = nullptr);

struct HardyMargin {
    double energy = 0.0;      // sum (|grad phi|^2 + m q phi^2)
    double weighted_sq = 0.0; // sum w m phi^2
    double margin = 0.0;      // energy - weighted_sq; >= 0 iff Hardy holds
    double scale = 0.0;       // |energy| + |weighted_sq|
};

/// Hardy-inequality margin for a finitely supported phi inside the weight's
/// domain of validity.
HardyMargin hardy_margin(const SchrodingerOperator& op, const HardyWeight& w,
                         const VertexFunction& phi);

/// Optimal Hardy weight of the line graph on N, from the supersolution u = n:
/// w(1) = 2 - sqrt(2), w(k) = 2 - sqrt(1 + 1/k) - sqrt(1 - 1/k) for k >= 2,
/// evaluated in the algebraically equivalent cancellation-free form
/// 2/k^2 / ((1 + sqrt(1 - 1/k^2)) (2 + sqrt(2 + 2 sqrt(1 - 1/k^2)))).
double line_weight(std::int64_t k);

/// Partial sum of the series
///   sum_l binom(4l, 2l) / ((4l-1) 2^(4l-1)) k^(-2l),   k >= 2.
/// Binomials are exact 128-bit integers up to l = 25, log-gamma beyond.
double line_weight_series(std::int64_t k, int n_terms);

struct QuadrantWeight {
    double value = 0.0;       // sum_i line_weight(k_i)
    double lower_bound = 0.0; // (1/4) sum_i k_i^(-2)
};

/// Hardy weight of the quadrant N^d from the supersolution u(k) = k_1...k_d.
QuadrantWeight quadrant_weight(std::span<const std::int64_t> k);

/// The line-graph Hardy weight as a HardyWeight over {k >= 1}.
HardyWeight line_hardy_weight();

/// The quadrant Hardy weight as a HardyWeight over N^d (lattice-coded ids).
HardyWeight quadrant_hardy_weight(int dim);

} // namespace graphineq
