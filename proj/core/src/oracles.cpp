#include "smt/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace smt {

double toy_exact(double sigma0, double sigma1) {
    if (!(sigma0 >= 0.0) || !(sigma1 >= sigma0))
        throw std::invalid_argument("toy_exact: need sigma1 >= sigma0 >= 0");
    return sigma1 * sigma1 - sigma0 * sigma0;
}

double variance_swap_exact(EtaKind eta, double a, double x0) {
    if (!(a >= 0.0)) throw std::invalid_argument("variance_swap_exact: need a >= 0");
    switch (eta) {
        case EtaKind::constant:
            return a;
        case EtaKind::linear:
            return a * x0 - a * a / 4.0;
    }
    throw std::invalid_argument("variance_swap_exact: unknown eta kind");
}

Benchmark toy_benchmark() {
    const double sigma0 = 0.1, sigma1 = 0.2;
    Benchmark b{
        .name = "toy",
        .family = Benchmark::Family::toy,
        .exact_value = toy_exact(sigma0, sigma1),
        .feasible_primal_value = {},
        .reported_value = 0.029705,
        .accept_lo = 0.0290,
        .accept_hi = 0.0301,
        .grid = GridSpec(1.0, 0.1, 0.025),
        .controls = make_interval_set(0.0, 0.1, 0.0, 0.0, 2, 1),
        .cost = CostFn::diffusion(),
        .mu0 = Marginal::gaussian(0.0, sigma0),
        .mu1 = Marginal::gaussian(0.0, sigma1),
        .K = 1.5,
        .n_iters = 100000,
        .sigma0 = sigma0,
        .sigma1 = sigma1,
    };
    b.feasible_primal_value = feasible_primal_cost(b);
    return b;
}

Benchmark variance_swap_benchmark(EtaKind eta) {
    const double a = 0.04, x0 = 1.0;
    const bool lin = (eta == EtaKind::linear);
    Benchmark b{
        .name = lin ? "varswap_linear" : "varswap_const",
        .family = lin ? Benchmark::Family::varswap_linear : Benchmark::Family::varswap_const,
        .exact_value = variance_swap_exact(eta, a, x0),
        .feasible_primal_value = {},
        .reported_value = lin ? 0.0391632 : 0.0395311,
        .accept_lo = lin ? 0.0384 : 0.0388,
        .accept_hi = lin ? 0.0398 : 0.0402,
        .grid = GridSpec(2.0, 0.1, 0.025),
        .controls = make_log_martingale_set(0.0, 0.1, 2),
        .cost = lin ? CostFn::weighted_diffusion_linear() : CostFn::weighted_diffusion_const(1.0),
        .mu0 = Marginal::point(x0),
        .mu1 = Marginal::gaussian(x0 - a / 2.0, std::sqrt(a)),
        .K = 1.5,
        .n_iters = 100000,
        .a = a,
        .x0 = x0,
    };
    b.feasible_primal_value = feasible_primal_cost(b);
    return b;
}

double feasible_primal_cost(const Benchmark& bench) {
    // constant control required by the plan
    double a_star = 0.0;
    switch (bench.family) {
        case Benchmark::Family::toy:
            a_star = bench.sigma1 * bench.sigma1 - bench.sigma0 * bench.sigma0;
            break;
        case Benchmark::Family::varswap_const:
        case Benchmark::Family::varswap_linear:
            a_star = bench.a;
            break;
    }
    double a_lo = bench.controls[0].a, a_hi = a_lo;
    for (const Control& u : bench.controls.candidates()) {
        a_lo = std::min(a_lo, u.a);
        a_hi = std::max(a_hi, u.a);
    }
    if (a_star < a_lo || a_star > a_hi)
        throw std::domain_error("feasible_primal_cost: constant control a* = " +
                                std::to_string(a_star) + " outside the control interval [" +
                                std::to_string(a_lo) + ", " + std::to_string(a_hi) + "]");
    switch (bench.family) {
        case Benchmark::Family::toy:
            return a_star;  // int_0^1 a* dt
        case Benchmark::Family::varswap_const:
            return a_star;  // eta == 1
        case Benchmark::Family::varswap_linear:
            // a * int_0^1 E[X_t] dt with E[X_t] = x0 - a t / 2
            return a_star * (bench.x0 - a_star / 4.0);
    }
    throw std::logic_error("feasible_primal_cost: unknown benchmark family");
}

AscentReport run_benchmark(const Benchmark& bench, std::optional<long> override_iters) {
    AscentConfig cfg;
    cfg.K = bench.K;
    cfg.n_iters = override_iters.value_or(bench.n_iters);
    cfg.stepsize.kind = StepsizeKind::optimal;
    return run_ascent(bench.grid, bench.controls, bench.cost, bench.mu0, bench.mu1, cfg);
}

}  // namespace smt
