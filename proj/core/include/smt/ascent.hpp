#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smt/grid.hpp"
#include "smt/hjb.hpp"
#include "smt/measures.hpp"
#include "smt/model.hpp"

namespace smt {

enum class StepsizeKind {
    divergent,  // gamma_n = c / n^p with p in (1/2, 1]
    optimal,    // gamma_n = sqrt(2*Pi) / (|grad|_R * sqrt(n)), Pi = 2 K^2 R dx
};

struct StepsizePolicy {
    StepsizeKind kind = StepsizeKind::optimal;
    // divergent-series parameters; c <= 0 selects the default scale
    // K * dx / sqrt(R/dx + 1), which sizes the first step to the feasible set.
    double c = 0.0;
    double p = 1.0;
};

struct AscentConfig {
    double K = 1.0;  // Lipschitz bound, > 0
    long n_iters = 0;
    StepsizePolicy stepsize{};
    GridFunction seed;  // empty -> start from the zero multiplier
    // per-node direct solves instead of the adjoint pass; O(l r^2) per
    // iteration, kept for cross-checking the production path
    bool use_direct_gradient = false;
};

/// Decomposition of the distance between the computed number and the
/// continuous transportation cost. Only ascent_gap is a fully computable
/// bound; domain_truncation and the fd terms carry unknown constants and are
/// reported as scale factors.
struct ErrorBudget {
    double M = 0.0;                 // sup over (t, x, u) of |u| + |l(t,0,u)| + |dl/dx|
    double tail_integral = 0.0;     // int_{|x|>R/2} (1+|x|) d(mu0+mu1)
    double domain_truncation = 0.0; // (1+K) * (exp(-R^2/(8M) + R/2) + tail), x unknown C
    double fd_dt_term = 0.0;        // dt^(1/10)   (x unknown L_{K,R})
    double fd_dx_term = 0.0;        // dx^(1/5)    (x unknown L_{K,R})
    double fd_interp_term = 0.0;    // K * dx
    double ascent_gap = 0.0;        // computable bound on the remaining maximization gap
    std::string control_resolution; // qualitative note
};

std::string format_error_budget(const ErrorBudget& b);

struct GapBounds {
    double trace_bound = 0.0;         // (Pi + sum gamma^2 |g|^2) / sum gamma
    double closed_form_bound = 0.0;   // (2 K^2 R dx + 4 (R/dx + 1) sum gamma^2) / sum gamma
    double optimal_rate_shape = 0.0;  // K (R + sqrt(R dx)) / sqrt(N), x unknown C
};

struct AscentReport {
    double best_value = 0.0;
    GridFunction best_iterate;
    std::vector<double> value_trace;          // dual value at iterate n
    std::vector<double> gradient_norm_trace;  // |grad|_R at iterate n
    std::vector<double> gamma_trace;          // stepsize leaving iterate n (0 on the last row)
    double theoretical_gap = 0.0;             // = gap_bounds.trace_bound
    GapBounds gap_bounds{};
    ErrorBudget budget{};
    double wall_time_seconds = 0.0;
    long iterations_run = 0;  // gradient steps actually taken
    bool early_stopped = false;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dual objective: pair the backward solve started from lambda1 against mu0
/// and subtract the mu1 pairing of lambda1 itself.
double evaluate_dual(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                     const Marginal& m0, const Marginal& m1, const GridFunction& lambda1);

/// Projected super-gradient ascent over the K-Lipschitz multipliers
/// vanishing at the origin node. One backward solve per iteration feeds both
/// the value and the adjoint gradient; iterates are projected by increment
/// clamping. Runs exactly n_iters steps unless an exactly zero gradient is
/// met.
AscentReport run_ascent(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                        const Marginal& m0, const Marginal& m1, const AscentConfig& config);

/// Convergence-gap bounds from the realized stepsizes and gradient norms.
GapBounds gap_bounds(const GridSpec& grid, double K, std::span<const double> gammas,
                     std::span<const double> gradient_norms);

/// Trace-based gap bound after n steps under the configured policy;
/// gradient_norms[s] is the norm at the iterate step s+1 started from.
double theoretical_gap(const GridSpec& grid, const AscentConfig& config, long n,
                       std::span<const double> gradient_norms);

ErrorBudget error_budget(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                         const Marginal& m0, const Marginal& m1, double K,
                         double ascent_gap = std::numeric_limits<double>::quiet_NaN());

/// Default divergent-series scale c used when StepsizePolicy.c <= 0.
double default_divergent_scale(const GridSpec& grid, double K);

}  // namespace smt
