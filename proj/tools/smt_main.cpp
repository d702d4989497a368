// Command line front end: solve (one batch run from a config file),
// bench (the three closed-form benchmarks), validate (config + CFL +
// marginal checks without solving).
//
// Exit codes: 0 success, 1 generic failure or missed benchmark interval,
// 2 config parse failure, 3 CFL violation, 4 numeric abort.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smt/ascent.hpp"
#include "smt/config.hpp"
#include "smt/hjb.hpp"
#include "smt/oracles.hpp"
#include "smt/report_io.hpp"
#include "smt/sensitivity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGeneric = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCfl = 3;
constexpr int kExitNumeric = 4;

struct BuiltRun {
    smt::RunConfig cfg;
    smt::GridSpec grid;
    smt::ControlSet controls;
    smt::CostFn cost;
    smt::Marginal mu0;
    smt::Marginal mu1;
};

BuiltRun build_run(const std::string& config_path) {
    const smt::RunConfig cfg = smt::parse_config_file(config_path);
    std::string warn0, warn1;
    BuiltRun run{
        .cfg = cfg,
        .grid = smt::make_grid(cfg),
        .controls = smt::make_control_set(cfg),
        .cost = smt::make_cost(cfg),
        .mu0 = smt::make_marginal(cfg.mu0, &warn0),
        .mu1 = smt::make_marginal(cfg.mu1, &warn1),
    };
    if (!warn0.empty()) std::cerr << "warning: mu0: " << warn0 << "\n";
    if (!warn1.empty()) std::cerr << "warning: mu1: " << warn1 << "\n";
    return run;
}

int cmd_solve(const std::string& config_path) {
    const BuiltRun run = build_run(config_path);
    const smt::CflReport cfl = smt::check_cfl(run.grid, run.controls);
    if (!cfl.ok) {
        std::cerr << "error: CFL condition violated: dt*(|b|/dx + a/dx^2) = " << cfl.max_ratio
                  << " > 1 at candidate (a = " << cfl.worst.a << ", b = " << cfl.worst.b << ")\n";
        return kExitCfl;
    }

    const smt::AscentConfig ascent_cfg = smt::make_ascent_config(run.cfg);
    const smt::AscentReport rep =
        smt::run_ascent(run.grid, run.controls, run.cost, run.mu0, run.mu1, ascent_cfg);

    if (!run.cfg.trace_csv.empty()) smt::atomic_write(run.cfg.trace_csv, smt::trace_csv_text(rep));
    const std::string report = smt::report_text(run.cfg, run.grid, cfl, rep);
    if (!run.cfg.report_path.empty()) smt::atomic_write(run.cfg.report_path, report);

    if (!run.cfg.dump_lambda0_csv.empty() || !run.cfg.dump_controls_csv.empty() ||
        !run.cfg.dump_gradient_csv.empty()) {
        // one extra solve at the best multiplier for the requested dumps
        const smt::SolveResult sr =
            smt::solve_backward(run.grid, run.controls, run.cost, rep.best_iterate);
        if (!run.cfg.dump_lambda0_csv.empty())
            smt::atomic_write(run.cfg.dump_lambda0_csv,
                              smt::lambda0_csv_text(run.grid, sr.lambda0));
        if (!run.cfg.dump_controls_csv.empty())
            smt::atomic_write(run.cfg.dump_controls_csv,
                              smt::controls_csv_text(run.grid, run.controls, sr.controls));
        if (!run.cfg.dump_gradient_csv.empty()) {
            const smt::SuperGradient g = smt::supergradient_adjoint(
                run.grid, run.controls, run.cost, run.mu0, run.mu1, sr.controls);
            smt::atomic_write(run.cfg.dump_gradient_csv,
                              smt::gradient_csv_text(run.grid, g.components));
        }
    }

    std::cout << report;
    return kExitOk;
}

int cmd_validate(const std::string& config_path) {
    const BuiltRun run = build_run(config_path);
    std::cout << "config: ok\n"
              << "grid.r: " << run.grid.r() << "\n"
              << "grid.l: " << run.grid.l() << "\n"
              << "grid.dx: " << run.grid.dx() << "\n"
              << "grid.dt: " << run.grid.dt() << "\n"
              << "control_set.size: " << run.controls.size() << "\n";
    const smt::CflReport cfl = smt::check_cfl(run.grid, run.controls);
    std::cout << "cfl.max_ratio: " << cfl.max_ratio << "\n"
              << "cfl.margin: " << cfl.margin << "\n";
    if (!cfl.ok) {
        std::cerr << "error: CFL condition violated at candidate (a = " << cfl.worst.a
                  << ", b = " << cfl.worst.b << ")\n";
        return kExitCfl;
    }
    const smt::ErrorBudget budget =
        smt::error_budget(run.grid, run.controls, run.cost, run.mu0, run.mu1, run.cfg.K);
    std::cout << smt::format_error_budget(budget);
    return kExitOk;
}

int cmd_bench(long iterations_override) {
    std::vector<smt::Benchmark> benches;
    benches.push_back(smt::toy_benchmark());
    benches.push_back(smt::variance_swap_benchmark(smt::EtaKind::constant));
    benches.push_back(smt::variance_swap_benchmark(smt::EtaKind::linear));

    std::cout << std::left << std::setw(16) << "benchmark" << std::right << std::setw(12)
              << "exact" << std::setw(12) << "dual" << std::setw(12) << "gap" << std::setw(12)
              << "reported" << std::setw(22) << "accept" << std::setw(8) << "status" << "\n";

    bool all_ok = true;
    for (const smt::Benchmark& b : benches) {
        const std::optional<long> override_iters =
            iterations_override > 0 ? std::optional<long>(iterations_override) : std::nullopt;
        const smt::AscentReport rep = smt::run_benchmark(b, override_iters);
        const bool ok = rep.best_value >= b.accept_lo && rep.best_value <= b.accept_hi;
        all_ok = all_ok && ok;
        std::ostringstream interval;
        interval << "[" << b.accept_lo << ", " << b.accept_hi << "]";
        std::cout << std::left << std::setw(16) << b.name << std::right << std::fixed
                  << std::setprecision(7) << std::setw(12) << b.exact_value << std::setw(12)
                  << rep.best_value << std::setw(12) << (b.exact_value - rep.best_value)
                  << std::setw(12) << b.reported_value << std::setw(22) << interval.str()
                  << std::setw(8) << (ok ? "pass" : "FAIL") << "\n";
        std::cout.unsetf(std::ios::fixed);
    }
    return all_ok ? kExitOk : kExitGeneric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal semimartingale transportation cost via the dual HJB scheme"};
    app.require_subcommand(1);

    std::string config_path;
    long bench_iters = 0;

    CLI::App* solve = app.add_subcommand("solve", "run one batch solve from a config file");
    solve->add_option("config", config_path, "path to the run config")->required();

    CLI::App* bench = app.add_subcommand("bench", "run the three closed-form benchmarks");
    bench->add_option("--iterations", bench_iters,
                      "override the iteration count (default: full 100000)");

    CLI::App* validate =
        app.add_subcommand("validate", "check a config, the CFL condition and the marginals");
    validate->add_option("config", config_path, "path to the run config")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(config_path);
        if (bench->parsed()) return cmd_bench(bench_iters);
        if (validate->parsed()) return cmd_validate(config_path);
    } catch (const smt::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const smt::CflError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCfl;
    } catch (const smt::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeneric;
    }
    return kExitGeneric;
}
