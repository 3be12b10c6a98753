#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graphineq/hardy.hpp"
#include "graphineq/operators.hpp"

namespace graphineq {

/// theta-ratio ((1 - t^alpha)/(1 - t))^2 with the removable singularity at
/// t = 1 filled by alpha^2; switches to a 3-term Taylor branch for
/// |1 - t| < 1e-6 where the direct quotient cancels.
double theta_power_ratio(double t, double alpha);

/// theta-ratio ((1 - log(at+1)/log(t+1))/(1-a))^2 with the removable
/// singularity at a = 1 filled by t^2/((t+1)^2 log^2(t+1)); Taylor branch for
/// |1 - a| < 1e-6.
double theta_log_ratio(double a, double t);

/// gamma(eps) = ((1 - eps^alpha)/(1 - eps))^2, the admissible constant of
/// t -> t^alpha. Requires alpha, eps in (0,1).
double gamma_power(double alpha, double eps);

/// gamma(eps) = (1 - log(c eps + 1)/log(c + 1))^2 / (1 - eps)^2, the
/// admissible constant of t -> log(t+1) on [c, infinity). Requires c > 0,
/// eps in (0,1).
double gamma_log(double c, double eps);

enum class ThetaKind { Power, Log };

/// Degree-bound corollary constants: eps = D^(-1/2) with the power family's
/// alpha, or the log family's floor c (the constant is evaluated at floor
/// c^(1/2), the infimum of u^(1/2)). Bit-for-bit equal to gamma_power /
/// gamma_log at those arguments.
double corollary_constants(ThetaKind kind, double degree_bound, double extra);

/// An admissible candidate theta with its domain floor. The evaluator is the
/// formula's natural extension to all nonnegative arguments; the floor c
/// determines the admissible constant.
struct AdmissibleFamily {
    ThetaKind kind = ThetaKind::Power;
    double alpha = 0.5; // power family
    double floor_c = 0.0;

    double theta(double t) const;
    double gamma(double eps) const;

    static AdmissibleFamily power(double alpha);
    static AdmissibleFamily log_family(double c);
};

/// |theta(t) - theta(at)| - sqrt(gamma) |1-a| theta(t) at a single (t, a).
double admissibility_violation_at(const AdmissibleFamily& fam, double gamma, double t, double a);

struct AdmissibilityResult {
    double worst_violation = -std::numeric_limits<double>::infinity();
    double worst_t = 0.0;
    double worst_a = 0.0;
    std::size_t evaluated = 0;

    bool admissible(double tol) const { return worst_violation <= tol; }
};

/// Worst violation of the admissibility inequality over the grid.
AdmissibilityResult admissibility_check(const AdmissibleFamily& fam, double gamma,
                                        std::span<const std::pair<double, double>> grid);

/// Log-spaced (t, a) grid with t in [t_min, t_max], a in [eps, a_max],
/// including the exact rows a = eps and a = 1, filtered to the family's
/// Def-domain (t >= c and a t >= c).
std::vector<std::pair<double, double>> admissibility_grid(const AdmissibleFamily& fam, double eps,
                                                          double t_min, double t_max, int nt,
                                                          double a_max, int na);

enum class EikonalMode { Pointwise, Weak };

struct EikonalSample {
    std::string label;
    double margin = 0.0;
    double scale = 0.0;
};

struct EikonalReport {
    EikonalMode mode = EikonalMode::Pointwise;
    double gamma = 0.0;
    double tolerance_rel = 1e-10;
    std::vector<EikonalSample> samples;
    double worst_margin = 0.0;
    double worst_scale = 0.0;
    std::string worst_label;
    bool pass = true;

    nlohmann::json to_json() const;
};

/// Pointwise eikonal margin gamma g w m - |grad g^(1/2)|^2 at each window
/// vertex. When `domain` is set the gradient runs over neighbors inside the
/// domain only (the subset form of the inequality).
EikonalReport eikonal_margin_pointwise(const SchrodingerOperator& op,
                                       const std::function<double(VertexId)>& g,
                                       const HardyWeight& w, double gamma,
                                       std::span<const VertexId> window,
                                       const std::function<bool(VertexId)>& domain = nullptr,
                                       double tolerance_rel = 1e-10);

/// Weak eikonal margin gamma ||phi||^2_{gwm} - (1/2) sum b (phi x phi)
/// (grad g^(1/2))^2 for each sampled phi.
EikonalReport eikonal_margin_weak(const SchrodingerOperator& op,
                                  const std::function<double(VertexId)>& g, const HardyWeight& w,
                                  double gamma, std::span<const VertexFunction> phis,
                                  double tolerance_rel = 1e-10);

/// X_eps = {x in window : min over neighbors y of u(y)/u(x) >= eps^2}.
std::vector<VertexId> x_epsilon(const WeightedGraph& graph, const VertexFunction& u, double eps,
                                std::span<const VertexId> window);

} // namespace graphineq
