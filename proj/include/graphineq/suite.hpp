#pragma once

#include <memory>

#include "graphineq/config.hpp"
#include "graphineq/lattice_green.hpp"
#include "graphineq/poisson.hpp"
#include "graphineq/rellich.hpp"

namespace graphineq {

inline constexpr const char* kVersion = "graphineq 0.1.0";

/// Named verification checks. Each is deterministic given its arguments; the
/// same functions back `suite run` and the acceptance suite.
namespace checks {

// --- identity checks over random finite graphs -----------------------------
CheckResult greens_formula_random(std::uint64_t seed, int instances);
CheckResult main_identity_random(std::uint64_t seed, int instances);
CheckResult energy_form_vs_greens(std::uint64_t seed, int instances);
CheckResult ground_state_energy_identity(std::uint64_t seed, int instances);
CheckResult extend_infinity_energy(std::uint64_t seed, int instances);
CheckResult restrict_domain_agreement(std::uint64_t seed, int instances);

// --- hardy ------------------------------------------------------------------
CheckResult hardy_line(std::uint64_t seed, std::size_t samples, int support_radius);
CheckResult hardy_quadrant(std::uint64_t seed, std::size_t samples, int support_radius, int dim);
CheckResult hardy_green3(std::uint64_t seed, std::size_t samples,
                         std::shared_ptr<const GreenTable> table);
CheckResult line_weight_lower_bound(std::int64_t k_max);
CheckResult line_weight_series_agreement(std::int64_t k_max, int terms);
CheckResult quadrant_matches_supersolution(std::uint64_t seed);

// --- eikonal ----------------------------------------------------------------
CheckResult admissibility_power_grid();
CheckResult admissibility_log_grid();
CheckResult admissibility_sharpness();
CheckResult theta_monotonicity_power();
CheckResult theta_monotonicity_log();
CheckResult gamma_limit_checks();

// --- rellich instances and sweeps --------------------------------------------
RellichInstance line_power_instance(double alpha);
RellichInstance line_log_instance();
RellichInstance line_measure_instance(double alpha); // m(k) = 1 + 1/k, q = 0
RellichInstance quadrant_instance(int dim, double alpha);
RellichInstance lattice_green_instance(std::shared_ptr<const GreenTable> table, double alpha,
                                       const GreenHardy& hardy);

SampleSpace line_space(int support_radius, double alpha);
SampleSpace quadrant_space(int dim, int support_radius, double alpha);
SampleSpace green_space(std::shared_ptr<const GreenTable> table, const GreenHardy& hardy,
                        double alpha);

CheckResult rellich_check(const std::string& name, const RellichInstance& instance,
                          const SampleSpace& space, std::uint64_t seed, std::size_t samples);

/// q = 0 reduction: margins through the measure-weighted formulas equal the
/// margins on the unweighted graph with Hardy weight w' = w m.
CheckResult schrodinger_reduction(std::uint64_t seed, std::size_t samples);

// --- lattice green ------------------------------------------------------------
CheckResult green_invariants(const GreenTable& table);
CheckResult green_decay_slope(const GreenTable& table);
CheckResult green_w_asymptotics(std::shared_ptr<const GreenTable> table);

// --- exhaustion solver ---------------------------------------------------------
CheckResult solve_line_exhaustion(int stages, double stop_tol, double alpha);
CheckResult solve_linearity(std::uint64_t seed);

} // namespace checks

struct SuiteReport {
    RunConfig config;
    std::vector<CheckResult> checks; // ordered by name
    bool overall_pass = false;
    std::string version = kVersion;

    /// Deterministic for fixed (config, seed, version): timings are excluded.
    Json to_json() const;
    /// Human summary including per-check wall clock.
    std::string human_summary() const;
};

/// Runs the configured suite, writes the JSON report to cfg.out when set.
SuiteReport run_suite(const RunConfig& cfg);

} // namespace graphineq
