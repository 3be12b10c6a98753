// graphineq command line: gamma constants, inequality sweeps, lattice Green
// tables, the exhaustion solver, and the verification suites.
//
// Exit codes: 0 pass, 1 check failure, 2 config error, 3 runtime error.

#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "graphineq/config.hpp"
#include "graphineq/errors.hpp"
#include "graphineq/lattice_green.hpp"
#include "graphineq/poisson.hpp"
#include "graphineq/suite.hpp"
#include "graphineq/summation.hpp"

namespace gq = graphineq;

namespace {

struct CliState {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool quiet = false;
    int exit_code = 0;
};

gq::RunConfig effective_config(const CliState& state) {
    gq::RunConfig cfg;
    if (!state.config_path.empty()) cfg = gq::parse_config(gq::read_text_file(state.config_path));
    if (state.seed) cfg.seed = *state.seed;
    if (!state.out.empty()) cfg.out = state.out;
    return cfg;
}

void emit_report(const CliState& state, const gq::Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) gq::write_text_file(out_path, text);
    if (!state.quiet) std::cout << text;
}

struct ExampleParts {
    std::string family; // line | lattice | quadrant | log-line
    int dim = 1;
};

ExampleParts split_example(const std::string& example) {
    ExampleParts parts;
    const auto colon = example.find(':');
    if (colon == std::string::npos) {
        parts.family = example;
        return parts;
    }
    parts.family = example.substr(0, colon);
    parts.dim = std::stoi(example.substr(colon + 1));
    return parts;
}

int run_gamma(const std::string& kind, double alpha, double c, double eps,
              std::optional<double> degree) {
    double gamma = 0.0;
    if (kind == "power")
        gamma = degree ? gq::corollary_constants(gq::ThetaKind::Power, *degree, alpha)
                       : gq::gamma_power(alpha, eps);
    else if (kind == "log")
        gamma = degree ? gq::corollary_constants(gq::ThetaKind::Log, *degree, c)
                       : gq::gamma_log(c, eps);
    else
        throw gq::ConfigError("gamma: kind must be power or log");
    std::cout << gq::format_double(gamma) << "\n";
    return 0;
}

int run_hardy_verify(const CliState& state, const std::string& example, std::size_t samples,
                     int support_radius, const std::string& out_path) {
    const gq::RunConfig cfg = effective_config(state);
    gq::CheckResult result;
    const ExampleParts parts = split_example(example);
    if (parts.family == "line") {
        result = gq::checks::hardy_line(cfg.seed, samples, support_radius);
    } else if (parts.family == "quadrant") {
        result = gq::checks::hardy_quadrant(cfg.seed, samples, support_radius, parts.dim);
    } else if (parts.family == "lattice" && parts.dim == 3) {
        auto table = gq::green_window(3, 24, 576);
        result = gq::checks::hardy_green3(cfg.seed, samples, table);
    } else {
        throw gq::ConfigError("hardy verify: unsupported example '" + example + "'");
    }
    emit_report(state, result.to_json(), out_path.empty() ? cfg.out : out_path);
    return result.pass ? 0 : 1;
}

int run_hardy_export(const std::string& example, std::int64_t from, std::int64_t to,
                     const std::string& out_path) {
    if (from < 1 || to < from) throw gq::ConfigError("hardy export-csv: bad window");
    const ExampleParts parts = split_example(example);
    std::vector<std::vector<std::string>> rows;
    if (parts.family == "line") {
        for (std::int64_t k = from; k <= to; ++k) {
            rows.push_back({std::to_string(k), gq::format_double(gq::line_weight(k)),
                            gq::format_double(0.25 / (static_cast<double>(k) * static_cast<double>(k)))});
        }
    } else if (parts.family == "quadrant") {
        const int d = parts.dim;
        std::vector<std::int64_t> k(static_cast<std::size_t>(d), from);
        while (true) {
            const auto qw = gq::quadrant_weight(k);
            std::string label;
            for (std::size_t i = 0; i < k.size(); ++i)
                label += (i ? ";" : "") + std::to_string(k[i]);
            rows.push_back({label, gq::format_double(qw.value), gq::format_double(qw.lower_bound)});
            int axis = d - 1;
            while (axis >= 0) {
                if (++k[static_cast<std::size_t>(axis)] <= to) break;
                k[static_cast<std::size_t>(axis)] = from;
                --axis;
            }
            if (axis < 0) break;
        }
    } else {
        throw gq::ConfigError("hardy export-csv: unsupported example '" + example + "'");
    }
    gq::write_csv(out_path, {"vertex", "w", "lower_bound"}, rows);
    return 0;
}

int run_eikonal_verify(const CliState& state, const std::string& example, const std::string& mode,
                       double alpha, int window_radius, std::size_t samples,
                       const std::string& out_path) {
    const gq::RunConfig cfg = effective_config(state);
    const ExampleParts parts = split_example(example);

    gq::RellichInstance inst;
    gq::SampleSpace space;
    if (parts.family == "line") {
        inst = gq::checks::line_power_instance(alpha);
        space = gq::checks::line_space(window_radius, alpha);
    } else if (parts.family == "log-line") {
        inst = gq::checks::line_log_instance();
        space = gq::checks::line_space(window_radius, 0.5);
    } else if (parts.family == "quadrant") {
        inst = gq::checks::quadrant_instance(parts.dim, alpha);
        space = gq::checks::quadrant_space(parts.dim, window_radius, alpha);
    } else {
        throw gq::ConfigError("eikonal verify: unsupported example '" + example + "'");
    }

    gq::EikonalReport report;
    if (mode == "pointwise") {
        report = gq::eikonal_margin_pointwise(inst.op, inst.g, inst.w, inst.gamma, space.candidates,
                                              inst.domain);
    } else if (mode == "weak") {
        const gq::PhiSampler sampler(space, cfg.seed);
        std::vector<gq::VertexFunction> phis;
        for (std::size_t i = 0; i < samples; ++i) phis.push_back(sampler(i));
        report = gq::eikonal_margin_weak(inst.op, inst.g, inst.w, inst.gamma, phis);
    } else {
        throw gq::ConfigError("eikonal verify: mode must be pointwise or weak");
    }

    gq::Json j = report.to_json();
    j["example"] = example;
    emit_report(state, j, out_path.empty() ? cfg.out : out_path);
    return report.pass ? 0 : 1;
}

int run_rellich_verify(const CliState& state, const std::string& example, double alpha,
                       std::optional<double> gamma_override, std::size_t samples,
                       int support_radius, const std::string& out_path) {
    const gq::RunConfig cfg = effective_config(state);
    const ExampleParts parts = split_example(example);

    gq::RellichInstance inst;
    gq::SampleSpace space;
    std::string name = "rellich/" + example;
    if (parts.family == "line") {
        inst = gq::checks::line_power_instance(alpha);
        space = gq::checks::line_space(support_radius, alpha);
    } else if (parts.family == "log-line") {
        inst = gq::checks::line_log_instance();
        space = gq::checks::line_space(support_radius, 0.5);
    } else if (parts.family == "quadrant") {
        inst = gq::checks::quadrant_instance(parts.dim, alpha);
        space = gq::checks::quadrant_space(parts.dim, support_radius, alpha);
    } else if (parts.family == "lattice" && parts.dim == 3) {
        auto table = gq::green_window(3, 24, 576);
        const gq::GreenHardy hardy = gq::green_hardy_weight(table);
        inst = gq::checks::lattice_green_instance(table, alpha, hardy);
        space = gq::checks::green_space(table, hardy, alpha);
    } else {
        throw gq::ConfigError("rellich verify: unsupported example '" + example + "'");
    }
    if (gamma_override) inst.gamma = *gamma_override;

    const gq::CheckResult result = gq::checks::rellich_check(name, inst, space, cfg.seed, samples);
    emit_report(state, result.to_json(), out_path.empty() ? cfg.out : out_path);
    return result.pass ? 0 : 1;
}

int run_green_compute(int dim, int radius, int steps, const std::string& tail_model,
                      const std::string& out_path) {
    if (out_path.empty()) throw gq::ConfigError("green compute: --out is required");
    auto table = gq::green_window(dim, radius, steps, tail_model);
    gq::write_green_table_bin(*table, out_path);
    std::cerr << "wrote " << out_path << " (leaked mass "
              << gq::format_double(table->metadata().mass_leaked) << ")\n";
    return 0;
}

int run_green_export(const std::string& in_path, const std::string& out_path) {
    if (in_path.empty() || out_path.empty())
        throw gq::ConfigError("green export-csv: --in and --out are required");
    const gq::GreenBinContents contents = gq::read_green_table_bin(in_path);
    gq::write_green_table_csv(contents.window, out_path);
    return 0;
}

int run_solve(const CliState& state, const std::string& example, double alpha,
              const std::string& f_spec, int stages, double stop_tol,
              const std::string& out_path, const std::string& solution_csv) {
    if (example != "line") throw gq::ConfigError("solve: unsupported example '" + example + "'");
    if (f_spec.rfind("delta:", 0) != 0)
        throw gq::ConfigError("solve: --f expects delta:<vertex>");
    std::int64_t site = 0;
    try {
        std::size_t used = 0;
        site = std::stoll(f_spec.substr(6), &used);
        if (used != f_spec.size() - 6) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw gq::ConfigError("solve: cannot parse '" + f_spec + "'");
    }
    if (site < 1) throw gq::ConfigError("solve: delta site must be >= 1");

    const auto op = gq::SchrodingerOperator::laplacian(gq::make_graph("line"));
    const gq::GraphDomain domain(op, [](gq::VertexId x) { return x >= 1; });
    const gq::Exhaustion exhaustion(domain, 1, stages);

    gq::BoundSpec bound;
    bound.g = [alpha](gq::VertexId x) { return std::pow(static_cast<double>(x), alpha); };
    bound.w = [](gq::VertexId x) { return gq::line_weight(static_cast<std::int64_t>(x)); };
    bound.gamma = gq::corollary_constants(gq::ThetaKind::Power, 2.0, alpha);

    const gq::SolveReport report =
        gq::exhaustion_solve(exhaustion, gq::VertexFunction::delta(site), stop_tol, bound);

    const gq::RunConfig cfg = effective_config(state);
    emit_report(state, report.to_json(), out_path.empty() ? cfg.out : out_path);

    if (!solution_csv.empty()) {
        std::vector<std::vector<std::string>> rows;
        const auto& supp = report.solution.support();
        const auto& vals = report.solution.support_values();
        for (std::size_t i = 0; i < supp.size(); ++i)
            rows.push_back({gq::vertex_to_string(supp[i]), gq::format_double(vals[i])});
        gq::write_csv(solution_csv, {"vertex", "u"}, rows);
    }
    const bool healthy =
        report.monotone && report.stabilized_stage >= 1 && report.stabilized_residual <= 1e-9;
    return healthy ? 0 : 1;
}

int run_suite_cmd(const CliState& state, const std::string& suite_name) {
    gq::RunConfig cfg = effective_config(state);
    if (!suite_name.empty()) cfg.suite = suite_name;
    const gq::SuiteReport report = gq::run_suite(cfg);
    if (!state.quiet) std::cout << report.human_summary();
    return report.overall_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphineq: Hardy and Rellich inequalities on weighted graphs, at desk scale"};
    app.require_subcommand(1);

    CliState state;
    app.add_option("--config", state.config_path, "key = value configuration file");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "master random seed");
    app.add_option("--out", state.out, "report output path");
    app.add_flag("--quiet", state.quiet, "suppress stdout report");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "print an admissible constant");
    std::string gamma_kind = "power";
    double gamma_alpha = 0.5, gamma_c = 1.0, gamma_eps = 0.7071067811865476;
    std::optional<double> gamma_degree;
    gamma_cmd->add_option("--kind", gamma_kind, "power | log");
    gamma_cmd->add_option("--alpha", gamma_alpha, "power exponent in (0,1)");
    gamma_cmd->add_option("--c", gamma_c, "log-family floor c > 0");
    gamma_cmd->add_option("--epsilon", gamma_eps, "eps in (0,1)");
    double gamma_degree_value = 0.0;
    auto* degree_opt =
        gamma_cmd->add_option("--degree", gamma_degree_value, "degree bound (uses eps = D^-1/2)");

    // hardy verify / export-csv
    auto* hardy_cmd = app.add_subcommand("hardy", "Hardy weight sweeps and tables");
    hardy_cmd->require_subcommand(1);
    auto* hardy_verify = hardy_cmd->add_subcommand("verify", "sweep the Hardy margin");
    std::string hardy_example = "line";
    std::size_t hardy_samples = 1000;
    int hardy_radius = 200;
    std::string hardy_out;
    hardy_verify->add_option("--example", hardy_example, "line | quadrant:<d> | lattice:3");
    hardy_verify->add_option("--samples", hardy_samples, "number of sampled phi");
    hardy_verify->add_option("--support-radius", hardy_radius, "candidate support radius");
    hardy_verify->add_option("--out", hardy_out, "report path");
    auto* hardy_export = hardy_cmd->add_subcommand("export-csv", "write vertex,w,lower_bound");
    std::string export_example = "line", export_out;
    std::int64_t export_from = 1, export_to = 100;
    hardy_export->add_option("--example", export_example, "line | quadrant:<d>");
    hardy_export->add_option("--from", export_from, "window start (per axis)");
    hardy_export->add_option("--to", export_to, "window end (per axis)");
    hardy_export->add_option("--out", export_out, "csv path")->required();

    // eikonal verify
    auto* eikonal_cmd = app.add_subcommand("eikonal", "eikonal inequality margins");
    auto* eikonal_verify = eikonal_cmd->add_subcommand("verify", "pointwise or weak margins");
    std::string eik_example = "line", eik_mode = "pointwise", eik_out;
    double eik_alpha = 0.5;
    int eik_radius = 200;
    std::size_t eik_samples = 200;
    eikonal_verify->add_option("--example", eik_example, "line | quadrant:<d> | log-line");
    eikonal_verify->add_option("--mode", eik_mode, "pointwise | weak");
    eikonal_verify->add_option("--alpha", eik_alpha, "power exponent");
    eikonal_verify->add_option("--window-radius", eik_radius, "window / support radius");
    eikonal_verify->add_option("--samples", eik_samples, "weak-mode sample count");
    eikonal_verify->add_option("--out", eik_out, "report path");
    eikonal_cmd->require_subcommand(1);

    // rellich verify
    auto* rellich_cmd = app.add_subcommand("rellich", "Rellich inequality sweeps");
    auto* rellich_verify = rellich_cmd->add_subcommand("verify", "sweep the Rellich margin");
    std::string rel_example = "line", rel_out;
    double rel_alpha = 0.5;
    std::optional<double> rel_gamma;
    double rel_gamma_value = 0.0;
    std::size_t rel_samples = 1000;
    int rel_radius = 200;
    rellich_verify->add_option("--example", rel_example,
                               "line | quadrant:<d> | lattice:3 | log-line");
    rellich_verify->add_option("--alpha", rel_alpha, "power exponent in (0,1)");
    auto* rel_gamma_opt = rellich_verify->add_option("--gamma", rel_gamma_value,
                                                     "override the admissible constant");
    rellich_verify->add_option("--samples", rel_samples, "number of sampled phi");
    rellich_verify->add_option("--support-radius", rel_radius, "candidate support radius");
    rellich_verify->add_option("--out", rel_out, "report path");
    rellich_cmd->require_subcommand(1);

    // green compute / export-csv
    auto* green_cmd = app.add_subcommand("green", "lattice Green function tables");
    green_cmd->require_subcommand(1);
    auto* green_compute = green_cmd->add_subcommand("compute", "run the random-walk convolution");
    int green_dim = 3, green_radius = 48, green_steps = 2048;
    std::string green_tail = "clt", green_out;
    green_compute->add_option("--dim", green_dim, "lattice dimension (>= 3)");
    green_compute->add_option("--radius", green_radius, "output window radius");
    green_compute->add_option("--steps", green_steps, "number of transition steps");
    green_compute->add_option("--tail-model", green_tail, "clt | power | none");
    green_compute->add_option("--out", green_out, "binary table path")->required();
    auto* green_export = green_cmd->add_subcommand("export-csv", "convert a table to CSV");
    std::string green_in, green_csv;
    green_export->add_option("--in", green_in, "binary table path")->required();
    green_export->add_option("--out", green_csv, "csv path")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exhaustion solver for Hu = f");
    std::string solve_example = "line", solve_f = "delta:5", solve_out, solve_csv;
    double solve_alpha = 0.5, solve_stop = 1e-10;
    int solve_stages = 8;
    solve_cmd->add_option("--example", solve_example, "line");
    solve_cmd->add_option("--alpha", solve_alpha, "bound weight exponent");
    solve_cmd->add_option("--f", solve_f, "right-hand side, delta:<vertex>");
    solve_cmd->add_option("--stages", solve_stages, "stage budget");
    solve_cmd->add_option("--stop", solve_stop, "stage stabilization tolerance");
    solve_cmd->add_option("--out", solve_out, "report path");
    solve_cmd->add_option("--solution-csv", solve_csv, "write the solution as vertex,u");

    // suite run
    auto* suite_cmd = app.add_subcommand("suite", "verification suites");
    auto* suite_run = suite_cmd->add_subcommand("run", "run a named suite");
    std::string suite_name;
    suite_run->add_option("--suite", suite_name,
                          "identities | hardy | eikonal | rellich | green | solve | all");
    suite_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (seed_opt->count()) state.seed = seed_value;
    if (degree_opt->count()) gamma_degree = gamma_degree_value;
    if (rel_gamma_opt->count()) rel_gamma = rel_gamma_value;

    try {
        if (gamma_cmd->parsed())
            return run_gamma(gamma_kind, gamma_alpha, gamma_c, gamma_eps, gamma_degree);
        if (hardy_cmd->parsed()) {
            if (hardy_verify->parsed())
                return run_hardy_verify(state, hardy_example, hardy_samples, hardy_radius, hardy_out);
            return run_hardy_export(export_example, export_from, export_to, export_out);
        }
        if (eikonal_cmd->parsed())
            return run_eikonal_verify(state, eik_example, eik_mode, eik_alpha, eik_radius,
                                      eik_samples, eik_out);
        if (rellich_cmd->parsed())
            return run_rellich_verify(state, rel_example, rel_alpha, rel_gamma, rel_samples,
                                      rel_radius, rel_out);
        if (green_cmd->parsed()) {
            if (green_compute->parsed())
                return run_green_compute(green_dim, green_radius, green_steps, green_tail, green_out);
            return run_green_export(green_in, green_csv);
        }
        if (solve_cmd->parsed())
            return run_solve(state, solve_example, solve_alpha, solve_f, solve_stages, solve_stop,
                             solve_out, solve_csv);
        if (suite_cmd->parsed()) return run_suite_cmd(state, suite_name);
    } catch (const gq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gq::DomainViolation& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
