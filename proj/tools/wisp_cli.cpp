// wisp: reconstruct the spatial source factor of a wave equation from
// partial interior observations.
//
//   wisp forward        --config cfg.json [--out dir]
//   wisp reconstruct    --config cfg.json [--seed N] [--out dir] [--quiet]
//   wisp sweep          --config cfg.json --levels 0.01,0.02 --repeats 5
//   wisp table          table1 [--nodes N [--rescale-k]] [--seed N] [--out dir]
//   wisp check-geometry --config cfg.json [--mode strict|relaxed] [--x0 a,b,c]
//   wisp estimate-k     --config cfg.json [--iterations N]
//
// Exit status: 0 success, 1 configuration error, 2 numerical failure.

#include "wisp/core/quadrature.hpp"
#include "wisp/errors.hpp"
#include "wisp/geometry/observability.hpp"
#include "wisp/harness/experiment.hpp"
#include "wisp/harness/output.hpp"
#include "wisp/harness/sweep.hpp"
#include "wisp/harness/tables.hpp"
#include "wisp/reconstruction/norm_estimate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace wisp;

namespace {

struct CommonOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool quiet = false;
};

ExperimentConfig load_with_overrides(const CommonOptions& o)
{
    ExperimentConfig c = load_config(o.config);
    if (o.seed)
        c.noise.seed = *o.seed;
    if (!o.out.empty())
        c.output_dir = fs::path(o.out);
    return c;
}

void print_result(const ExperimentResult& r)
{
    std::printf("%-14s M=%-5d err=%.4f%%  J=%.6e  stop=%s  K=%g  alpha=%.3e  eps=%.3e", r.name.c_str(), r.iterations,
                100.0 * r.error, r.final_objective, to_string(r.stop), r.K, r.alpha, r.epsilon);
    if (r.norm_bound)
        std::printf("  ||A||^2~%.4g", *r.norm_bound);
    std::printf("  %.2fs\n", r.seconds);
}

int cmd_forward(const CommonOptions& o)
{
    const ExperimentConfig c = load_with_overrides(o);
    const ProblemSetup setup = make_setup(c);
    const ScalarField f = sample(c.f_true, setup.grid);
    const SpaceTimeField u = setup.solve(f);

    const fs::path dir = c.output_dir.value_or(fs::path("out") / c.name);
    write_field_dump(dir / "f_true.txt", f);
    write_field_dump(dir / "u_final.txt", u.slice_field(u.time_levels() - 1));

    const fs::path trace = dir / "u_trace.csv";
    std::FILE* fp = std::fopen(trace.string().c_str(), "w");
    if (!fp)
        throw ConfigError("cannot open " + trace.string());
    std::fprintf(fp, "level,t,max_abs,l2_omega\n");
    for (int j = 0; j < u.time_levels(); ++j) {
        const ScalarField s = u.slice_field(j);
        std::fprintf(fp, "%d,%s,%s,%s\n", j, format_exact(setup.grid.time(j)).c_str(),
                     format_exact(s.values().cwiseAbs().maxCoeff()).c_str(),
                     format_exact(l2_norm(s, setup.region)).c_str());
    }
    std::fclose(fp);
    if (!o.quiet)
        std::printf("max|u| = %.6g; wrote %s\n", u.data().cwiseAbs().maxCoeff(), dir.string().c_str());
    return 0;
}

int cmd_reconstruct(const CommonOptions& o, int norm_iterations)
{
    ExperimentConfig c = load_with_overrides(o);
    if (!c.output_dir)
        c.output_dir = fs::path("out") / c.name;
    RunOptions opts;
    opts.norm_iterations = norm_iterations;
    if (!o.quiet) {
        opts.observer = [](const IterationRecord& r) {
            if (r.index % 10 == 0)
                std::printf("  m=%-5d J=%.6e  rel_change=%.3e  err=%.4f%%\n", r.index, r.objective,
                            r.relative_change, 100.0 * r.relative_error.value_or(0.0));
        };
    }
    const ExperimentRun run = run_experiment(c, opts);
    print_result(run.result);
    if (!o.quiet)
        std::printf("wrote %s\n", c.output_dir->string().c_str());
    return 0;
}

std::vector<double> parse_levels(const std::string& text)
{
    std::vector<double> levels;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            levels.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("malformed number '" + item + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return levels;
}

int cmd_sweep(const CommonOptions& o, const std::string& levels_text, int repeats)
{
    const ExperimentConfig c = load_with_overrides(o);
    const std::vector<double> levels = parse_levels(levels_text);
    const SweepResult s = stability_sweep(c, levels, repeats);
    std::printf("delta0,mean_err,std_err,errors\n");
    for (const auto& l : s.levels) {
        std::printf("%s,%s,%s,", format_exact(l.delta0).c_str(), format_exact(l.mean_error).c_str(),
                    format_exact(l.std_error).c_str());
        for (std::size_t i = 0; i < l.errors.size(); ++i)
            std::printf("%s%s", i ? ";" : "", format_exact(l.errors[i]).c_str());
        std::printf("\n");
    }
    if (s.slope)
        std::printf("slope,%s\n", format_exact(*s.slope).c_str());
    else
        std::printf("slope,absent\n");
    return 0;
}

int cmd_table(const std::string& name, std::optional<int> nodes, const CommonOptions& o, int norm_iterations,
              bool rescale_k)
{
    const auto rows = reference_table(name, nodes, o.seed.value_or(1));
    const auto native = nodes && rescale_k ? reference_table(name, std::nullopt, o.seed.value_or(1)) : rows;
    RunOptions opts;
    opts.norm_iterations = norm_iterations;
    std::printf("%-14s %6s %9s | %6s %9s %10s\n", "row", "M", "err", "ref M", "ref err", "seconds");
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        ExperimentConfig c = row.config;
        if (nodes && rescale_k)
            c.K = rescaled_tuning_constant(native[k].config, c);
        if (!o.out.empty())
            c.output_dir = fs::path(o.out) / c.name;
        const ExperimentRun run = run_experiment(c, opts);
        const auto& r = run.result;
        std::printf("%-14s %6d %8.2f%% | %6d %8.2f%% %10.2f", r.name.c_str(), r.iterations, 100.0 * r.error,
                    row.reported_iterations, 100.0 * row.reported_error, r.seconds);
        if (r.norm_bound)
            std::printf("   K=%g ||A||^2~%.4g", r.K, *r.norm_bound);
        std::printf("\n");
        std::fflush(stdout);
    }
    return 0;
}

int cmd_check_geometry(const CommonOptions& o, const std::string& mode_text, const std::vector<double>& x0_in)
{
    const ExperimentConfig c = load_with_overrides(o);
    const GridSpec grid = c.grid();
    const ObservationRegion region = c.region(grid);
    std::array<double, 3> x0{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < x0_in.size() && a < 3; ++a)
        x0[a] = x0_in[a];

    std::vector<ObservabilityMode> modes;
    if (mode_text == "strict" || mode_text == "both")
        modes.push_back(ObservabilityMode::Strict);
    if (mode_text == "relaxed" || mode_text == "both")
        modes.push_back(ObservabilityMode::Relaxed);
    if (modes.empty())
        throw ConfigError("--mode must be strict, relaxed or both");

    bool all = true;
    for (const auto mode : modes) {
        const ObservabilityReport r = check_observability(x0, region, c.final_time, mode);
        all = all && r.passed;
        if (mode == ObservabilityMode::Relaxed) {
            std::printf("relaxed: T=%g %s diam(Omega\\omega)=%.6g -> %s\n", r.final_time, r.time_clause ? ">" : "<=",
                        r.required_time, r.passed ? "PASS" : "FAIL");
            continue;
        }
        std::printf("strict: T=%g %s sup|x-x0|=%.6g (%s)\n", r.final_time, r.time_clause ? ">" : "<=",
                    r.required_time, r.time_clause ? "ok" : "fails");
        std::printf("  x0 outside closure(Omega\\omega): %s\n", *r.x0_outside_unobserved ? "yes" : "no");
        for (const auto& f : r.faces) {
            std::printf("  face %-6s (x-x0).nu>=0: %-3s  in closure(omega): %s\n", f.name().c_str(),
                        f.in_observation_set ? "yes" : "no",
                        f.covered ? "yes" : ("no (" + std::to_string(f.uncovered_nodes) + " nodes)").c_str());
        }
        std::printf("  boundary clause: %s -> %s\n", *r.boundary_clause ? "ok" : "fails", r.passed ? "PASS" : "FAIL");
    }
    (void)all;
    return 0;
}

int cmd_estimate_k(const CommonOptions& o, int iterations)
{
    const ExperimentConfig c = load_with_overrides(o);
    const ProblemSetup setup = make_setup(c);
    const NormEstimate est = estimate_norm_bound(setup, iterations);
    if (!o.quiet) {
        for (std::size_t k = 0; k < est.rayleigh.size(); ++k)
            std::printf("  iter %-3zu %.10g\n", k, est.rayleigh[k]);
    }
    std::printf("||A||^2 estimate: %.8g (configured K = %g, %s)\n", est.value, c.K,
                c.K >= est.value ? "K >= ||A||^2" : "K < ||A||^2");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Inverse source reconstruction for the wave equation"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App* sub, bool need_config) {
        auto* opt = sub->add_option("--config", common.config, "experiment configuration (JSON)");
        if (need_config)
            opt->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", common.seed, "noise seed override");
        sub->add_option("--out", common.out, "output directory");
        sub->add_flag("--quiet", common.quiet, "suppress progress output");
    };

    auto* forward = app.add_subcommand("forward", "solve the forward problem for f_true and dump u");
    add_common(forward, true);

    int norm_iterations = 10;
    auto* reconstruct = app.add_subcommand("reconstruct", "run one configured reconstruction");
    add_common(reconstruct, true);
    reconstruct->add_option("--norm-iterations", norm_iterations, "power iterations for the ||A||^2 advisory (0 = off)");

    std::string levels = "0.01,0.02,0.04,0.08";
    int repeats = 5;
    auto* sweep = app.add_subcommand("sweep", "error statistics over noise levels");
    add_common(sweep, true);
    sweep->add_option("--levels", levels, "comma-separated delta0 values");
    sweep->add_option("--repeats", repeats, "runs per level (distinct seeds)");

    std::string table_name;
    std::optional<int> nodes;
    int table_norm_iterations = 0;
    bool rescale_k = false;
    auto* table = app.add_subcommand("table", "reproduce a reference table (table1 .. table6)");
    table->add_option("name", table_name, "table name")->required();
    table->add_option("--nodes", nodes, "override nodes per axis (tau follows h)");
    table->add_option("--norm-iterations", table_norm_iterations, "power iterations for the ||A||^2 advisory");
    table->add_flag("--rescale-k", rescale_k, "with --nodes, keep each row's K / ||A||^2 at its native value");
    add_common(table, false);

    std::string mode = "both";
    std::vector<double> x0;
    auto* geometry = app.add_subcommand("check-geometry", "observability report for (x0, omega, T)");
    add_common(geometry, true);
    geometry->add_option("--mode", mode, "strict, relaxed or both");
    geometry->add_option("--x0", x0, "observation point x0")->delimiter(',');

    int k_iterations = 30;
    auto* estimate = app.add_subcommand("estimate-k", "power-iteration estimate of ||A||^2");
    add_common(estimate, true);
    estimate->add_option("--iterations", k_iterations, "power iterations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*forward)
            return cmd_forward(common);
        if (*reconstruct)
            return cmd_reconstruct(common, norm_iterations);
        if (*sweep)
            return cmd_sweep(common, levels, repeats);
        if (*table)
            return cmd_table(table_name, nodes, common, table_norm_iterations, rescale_k);
        if (*geometry)
            return cmd_check_geometry(common, mode, x0);
        if (*estimate)
            return cmd_estimate_k(common, k_iterations);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
