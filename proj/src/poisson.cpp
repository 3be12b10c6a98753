#include "graphineq/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "graphineq/errors.hpp"
#include "graphineq/sampler.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

Exhaustion::Exhaustion(GraphDomain domain, VertexId root, int max_stages)
    : domain_(std::move(domain)), root_(root), max_stages_(max_stages) {
    if (!domain_.contains(root))
        throw DomainViolation("Exhaustion: root " + vertex_to_string(root) +
                              " outside the solve domain");
    if (max_stages_ < 1) throw DomainViolation("Exhaustion: need at least one stage");
}

std::vector<VertexId> Exhaustion::stage(int k) const {
    if (k < 1) throw DomainViolation("Exhaustion: stages are numbered from 1");
    const int radius = 1 << std::min(k, 30);
    return bfs_ball(*domain_.parent().graph, root_, radius, domain_.membership());
}

VertexFunction finite_solve(const GraphDomain& domain, std::span<const VertexId> vertices,
                            const VertexFunction& f) {
    const SchrodingerOperator& op = domain.parent();
    const std::size_t n = vertices.size();
    if (n == 0) return VertexFunction::zero();

    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < n; ++i) index[vertices[i]] = static_cast<int>(i);

    // m(x) H u(x) = m(x) f(x) with u = 0 outside the set:
    //   diag = sum_{y in X} b(x,y) + m(x) q(x),  offdiag = -b(x,y) for y inside
    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    double f_sup = 0.0;
    bool f_nonnegative = true;
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId x = vertices[i];
        SumAccumulator diag;
        for (const Neighbor& nb : op.graph->neighbors(x)) {
            diag.add(nb.weight);
            auto it = index.find(nb.vertex);
            if (it != index.end())
                triplets.emplace_back(static_cast<int>(i), it->second, -nb.weight);
        }
        const double m = op.measure(x);
        diag.add(m * op.potential(x));
        triplets.emplace_back(static_cast<int>(i), static_cast<int>(i), diag.value());
        const double fx = f(x);
        rhs[static_cast<Eigen::Index>(i)] = m * fx;
        f_sup = std::max(f_sup, std::fabs(fx));
        if (fx < 0.0) f_nonnegative = false;
    }

    Eigen::SparseMatrix<double> A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    A.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::VectorXd u(static_cast<Eigen::Index>(n));
    if (n < 10000) {
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
        if (solver.info() != Eigen::Success)
            throw PositivityError("finite_solve: factorization failed; H is not positive on the set");
        if (solver.vectorD().minCoeff() <= 0.0)
            throw PositivityError("finite_solve: nonpositive pivot; H is not positive on the set");
        u = solver.solve(rhs);
    } else {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> solver;
        solver.setTolerance(1e-13);
        solver.setMaxIterations(static_cast<Eigen::Index>(20 * n));
        solver.compute(A);
        u = solver.solve(rhs);
        if (solver.info() != Eigen::Success)
            throw PositivityError("finite_solve: conjugate gradients failed to converge");
    }

    std::map<VertexId, double> values;
    for (std::size_t i = 0; i < n; ++i) values[vertices[i]] = u[static_cast<Eigen::Index>(i)];
    VertexFunction solution = VertexFunction::from_support(values);

    // verify the postconditions against the actual operator
    const double tol = 1e-10 * (1.0 + f_sup);
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = schrodinger_apply(op, solution, vertices[i]) - f(vertices[i]);
        if (std::fabs(residual) > tol)
            throw InternalError("finite_solve: residual " + std::to_string(residual) + " at " +
                                vertex_to_string(vertices[i]) + " exceeds tolerance");
        if (f_nonnegative && u[static_cast<Eigen::Index>(i)] < -1e-12)
            throw InternalError("finite_solve: negative solution value for nonnegative data");
    }
    return solution;
}

namespace {

VertexFunction sign_part(const VertexFunction& f, bool positive) {
    std::map<VertexId, double> values;
    const auto& supp = f.support();
    const auto& vals = f.support_values();
    for (std::size_t i = 0; i < supp.size(); ++i) {
        if (positive && vals[i] > 0.0) values[supp[i]] = vals[i];
        if (!positive && vals[i] < 0.0) values[supp[i]] = -vals[i];
    }
    return VertexFunction::from_support(values);
}

struct MonotoneRun {
    std::vector<VertexFunction> iterates; // one per stage
    bool converged = false;
    int stages_run = 0;
};

/// Monotone scheme for f >= 0: solves on each stage, enforcing
/// u_k <= u_{k+1} pointwise up to 1e-12.
MonotoneRun run_monotone(const Exhaustion& ex, const VertexFunction& f_part, double stop_tol) {
    MonotoneRun run;
    VertexFunction prev;
    std::vector<VertexId> prev_set;
    for (int k = 1; k <= ex.max_stages(); ++k) {
        const auto set = ex.stage(k);
        GraphDomain stage_domain(ex.domain().parent(), [members = std::set<VertexId>(
                                                            set.begin(), set.end())](VertexId x) {
            return members.count(x) > 0;
        });
        VertexFunction u = finite_solve(stage_domain, set, f_part);
        run.stages_run = k;
        if (k > 1) {
            double delta = 0.0;
            for (VertexId x : prev_set) {
                const double diff = u(x) - prev(x);
                if (diff < -1e-12)
                    throw InternalError("exhaustion_solve: non-monotone stage for nonnegative data "
                                        "(assembly bug)");
                delta = std::max(delta, std::fabs(diff));
            }
            run.iterates.push_back(u);
            if (delta < stop_tol) {
                run.converged = true;
                return run;
            }
        } else {
            run.iterates.push_back(u);
        }
        prev = std::move(u);
        prev_set = set;
    }
    return run;
}

} // namespace

SolveReport exhaustion_solve(const Exhaustion& exhaustion, const VertexFunction& f,
                             double stop_tol, const std::optional<BoundSpec>& bound) {
    if (!(stop_tol > 0.0)) throw DomainViolation("exhaustion_solve: stop tolerance must be positive");
    for (VertexId x : f.support())
        if (!exhaustion.domain().contains(x))
            throw DomainViolation("exhaustion_solve: f is supported at " + vertex_to_string(x) +
                                  " outside the solve domain");

    // positivity spot check of the energy form on the first stage
    {
        const auto window = exhaustion.stage(1);
        std::mt19937_64 rng(0x9a7e5eedULL);
        for (int trial = 0; trial < 8; ++trial) {
            const VertexFunction phi = random_vertex_function(rng, window, -1.0, 1.0);
            const double energy = energy_form(exhaustion.domain().restricted_operator(), phi);
            if (energy < -1e-10 * (std::fabs(energy) + 1.0))
                throw PositivityError("exhaustion_solve: energy form is negative on the first stage");
        }
    }

    const VertexFunction f_plus = sign_part(f, true);
    const VertexFunction f_minus = sign_part(f, false);

    const MonotoneRun plus = run_monotone(exhaustion, f_plus, stop_tol);
    MonotoneRun minus;
    if (!f_minus.support().empty()) {
        minus = run_monotone(exhaustion, f_minus, stop_tol);
    } else {
        minus.converged = true;
    }

    SolveReport report;
    report.converged = plus.converged && minus.converged;
    report.monotone = true; // a violation throws inside run_monotone

    const int stages = plus.stages_run;
    const SchrodingerOperator& op = exhaustion.domain().parent();

    // combine u = u(+) - u(-) per stage and assemble the stage reports
    VertexFunction final_u;
    std::vector<VertexId> prev_set;
    for (int k = 1; k <= stages; ++k) {
        const auto set = exhaustion.stage(k);
        const VertexFunction& up = plus.iterates[static_cast<std::size_t>(k - 1)];
        VertexFunction u = up;
        if (!f_minus.support().empty() && k <= minus.stages_run) {
            std::map<VertexId, double> combined;
            const VertexFunction& um = minus.iterates[static_cast<std::size_t>(k - 1)];
            for (VertexId x : set) {
                const double v = up(x) - um(x);
                if (v != 0.0) combined[x] = v;
            }
            u = VertexFunction::from_support(combined);
        }

        StageReport sr;
        sr.stage = k;
        sr.size = set.size();
        for (VertexId x : set)
            sr.residual_sup = std::max(sr.residual_sup, std::fabs(schrodinger_apply(op, u, x) - f(x)));
        if (k > 1) {
            // final_u still holds the combined stage k-1 solution here
            for (VertexId x : prev_set)
                sr.delta_sup = std::max(sr.delta_sup, std::fabs(u(x) - final_u(x)));
        }
        if (bound) {
            VertexFunction fk;
            {
                std::map<VertexId, double> vals;
                const std::set<VertexId> members(set.begin(), set.end());
                const auto& fs = f.support();
                const auto& fv = f.support_values();
                for (std::size_t i = 0; i < fs.size(); ++i)
                    if (members.count(fs[i])) vals[fs[i]] = fv[i];
                fk = VertexFunction::from_support(vals);
            }
            if (!fk.support().empty())
                sr.bound_ratio = bound_report(u, fk, bound->g, bound->w, op.measure, bound->gamma);
        }
        report.stages.push_back(sr);
        final_u = std::move(u);
        prev_set = set;
    }
    report.solution = final_u;

    // stabilization is declared on the ante-penultimate window; the last two
    // stages carry the boundary layer
    if (stages >= 3) {
        report.stabilized_stage = stages - 2;
        for (VertexId x : exhaustion.stage(stages - 2))
            report.stabilized_residual = std::max(
                report.stabilized_residual, std::fabs(schrodinger_apply(op, final_u, x) - f(x)));
    }
    return report;
}

double bound_report(const VertexFunction& u, const VertexFunction& f,
                    const std::function<double(VertexId)>& g,
                    const std::function<double(VertexId)>& w, const Measure& m, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainViolation("bound_report: gamma must lie in (0,1)");
    const double u_norm_sq =
        weighted_norm_sq(u, [&](VertexId x) { return g(x) * w(x) * m(x); });
    const double f_norm_sq =
        weighted_norm_sq(f, [&](VertexId x) { return g(x) / w(x) * m(x); });
    if (f_norm_sq == 0.0) {
        if (u_norm_sq != 0.0)
            throw DomainViolation("bound_report: ||f|| = 0 with u != 0 (degenerate input)");
        return 0.0;
    }
    return std::sqrt(u_norm_sq) * (1.0 - gamma) / std::sqrt(f_norm_sq);
}

bool is_connected_subset(const WeightedGraph& graph, std::span<const VertexId> vertices) {
    if (vertices.empty()) return true;
    const std::set<VertexId> members(vertices.begin(), vertices.end());
    std::set<VertexId> visited{vertices.front()};
    std::deque<VertexId> queue{vertices.front()};
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (const Neighbor& n : graph.neighbors(x)) {
            if (!members.count(n.vertex) || visited.count(n.vertex)) continue;
            visited.insert(n.vertex);
            queue.push_back(n.vertex);
        }
    }
    return visited.size() == members.size();
}

Json SolveReport::to_json() const {
    Json j;
    j["converged"] = converged;
    j["monotone"] = monotone;
    j["stabilized_stage"] = stabilized_stage;
    j["stabilized_residual"] = stabilized_residual;
    j["note"] = "minimal solution of the monotone scheme; solutions of Hu=f need not be unique";
    Json stage_array = Json::array();
    for (const StageReport& s : stages) {
        Json sj;
        sj["stage"] = s.stage;
        sj["size"] = s.size;
        sj["residual_sup"] = s.residual_sup;
        sj["delta_sup"] = s.delta_sup;
        sj["bound_ratio"] = s.bound_ratio;
        stage_array.push_back(std::move(sj));
    }
    j["stages"] = std::move(stage_array);
    j["solution"] = phi_to_json(solution);
    return j;
}

} // namespace graphineq
