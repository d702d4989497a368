#pragma once

#include <optional>
#include <string>

#include "smt/ascent.hpp"
#include "smt/grid.hpp"
#include "smt/measures.hpp"
#include "smt/model.hpp"

namespace smt {

enum class EtaKind { constant, linear };

/// Martingale transport between centered Gaussians with cost = a:
/// the optimum moves the second moment, V = sigma1^2 - sigma0^2.
double toy_exact(double sigma0, double sigma1);

/// Weighted variance swap lower bound for the log-price started at x0 with
/// terminal law N(x0 - a/2, a): eta == 1 gives a, eta(x) = x gives
/// a*x0 - a^2/4. The particular solutions -2x + C1 e^x + C2 and
/// -x^2 - 2x - C1 e^x + C2 of  phi'' - phi' = 2 eta  enter only through
/// mu1(phi) - phi(x0), where the C1, C2 terms cancel.
double variance_swap_exact(EtaKind eta, double a, double x0);

/// A closed-form benchmark instance: full solver setup plus the exact value,
/// the reference numerical value, and the reproduction interval.
struct Benchmark {
    enum class Family { toy, varswap_const, varswap_linear };

    std::string name;
    Family family;
    double exact_value = 0.0;
    std::optional<double> feasible_primal_value;
    double reported_value = 0.0;  // reference numerical solution
    double accept_lo = 0.0;       // reproduction interval for the best dual value
    double accept_hi = 0.0;

    GridSpec grid;
    ControlSet controls;
    CostFn cost;
    Marginal mu0;
    Marginal mu1;
    double K = 0.0;
    long n_iters = 0;

    // family parameters
    double sigma0 = 0.0, sigma1 = 0.0;  // toy
    double a = 0.0, x0 = 0.0;           // variance swap
};

Benchmark toy_benchmark();
Benchmark variance_swap_benchmark(EtaKind eta);

/// Cost of the explicit constant-control Gaussian plan joining the two
/// marginals (toy: constant diffusion sigma1^2 - sigma0^2; swaps: constant
/// pair (a, -a/2)). Throws std::domain_error when the required constant
/// control lies outside the benchmark's control interval.
double feasible_primal_cost(const Benchmark& bench);

/// Runs the benchmark's ascent with its stated parameters.
AscentReport run_benchmark(const Benchmark& bench, std::optional<long> override_iters = {});

}  // namespace smt
