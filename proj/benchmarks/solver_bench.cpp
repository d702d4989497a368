// Microbenchmarks for the per-iteration building blocks of the ascent.

#include <benchmark/benchmark.h>

#include "smt/ascent.hpp"
#include "smt/hjb.hpp"
#include "smt/lipproj.hpp"
#include "smt/oracles.hpp"
#include "smt/sensitivity.hpp"

namespace {

const smt::Benchmark& toy() {
    static const smt::Benchmark b = smt::toy_benchmark();
    return b;
}

const smt::Benchmark& varswap() {
    static const smt::Benchmark b = smt::variance_swap_benchmark(smt::EtaKind::linear);
    return b;
}

void bm_solve_backward_toy(benchmark::State& state) {
    const auto& b = toy();
    const smt::GridFunction lambda1 = smt::sample_nodes(b.grid, [](double x) { return -x * x; });
    for (auto _ : state) {
        auto sr = smt::solve_backward(b.grid, b.controls, b.cost, lambda1);
        benchmark::DoNotOptimize(sr.lambda0);
    }
}
BENCHMARK(bm_solve_backward_toy);

void bm_adjoint_gradient_toy(benchmark::State& state) {
    const auto& b = toy();
    const smt::GridFunction lambda1 = smt::sample_nodes(b.grid, [](double x) { return -x * x; });
    const auto sr = smt::solve_backward(b.grid, b.controls, b.cost, lambda1);
    const smt::GridFunction w0 = smt::hat_weights(b.mu0, b.grid).weights;
    const smt::GridFunction w1 = smt::hat_weights(b.mu1, b.grid).weights;
    for (auto _ : state) {
        auto g = smt::supergradient_adjoint_from_weights(b.grid, b.controls, sr.controls, w0, w1);
        benchmark::DoNotOptimize(g.components);
    }
}
BENCHMARK(bm_adjoint_gradient_toy);

void bm_projection_varswap(benchmark::State& state) {
    const auto& b = varswap();
    const smt::GridFunction phi = smt::sample_nodes(b.grid, [](double x) { return 10.0 * x * x; });
    for (auto _ : state) {
        auto p = smt::project_lipschitz(phi, b.K, b.grid.dx());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_projection_varswap);

void bm_ascent_iteration_varswap(benchmark::State& state) {
    const auto& b = varswap();
    smt::AscentConfig cfg;
    cfg.K = b.K;
    cfg.n_iters = 1;
    for (auto _ : state) {
        auto rep = smt::run_ascent(b.grid, b.controls, b.cost, b.mu0, b.mu1, cfg);
        benchmark::DoNotOptimize(rep.best_value);
    }
}
BENCHMARK(bm_ascent_iteration_varswap);

}  // namespace

BENCHMARK_MAIN();
