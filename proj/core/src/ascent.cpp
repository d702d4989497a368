#include "smt/ascent.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "smt/lipproj.hpp"
#include "smt/sensitivity.hpp"

namespace smt {

double evaluate_dual(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                     const Marginal& m0, const Marginal& m1, const GridFunction& lambda1) {
    const SolveResult sr = solve_backward(grid, cs, cost, lambda1);
    const GridFunction w0 = hat_weights(m0, grid).weights;
    const GridFunction w1 = hat_weights(m1, grid).weights;
    return dot(w0, sr.lambda0) - dot(w1, lambda1);
}

double default_divergent_scale(const GridSpec& grid, double K) {
    return K * grid.dx() / std::sqrt(grid.R() / grid.dx() + 1.0);
}

namespace {

void validate_config(const GridSpec& grid, const AscentConfig& cfg) {
    if (!(cfg.K > 0.0) || !std::isfinite(cfg.K))
        throw std::invalid_argument("run_ascent: K must be positive and finite");
    if (cfg.n_iters < 0) throw std::invalid_argument("run_ascent: n_iters must be >= 0");
    if (cfg.stepsize.kind == StepsizeKind::divergent) {
        if (!(cfg.stepsize.p > 0.5) || !(cfg.stepsize.p <= 1.0))
            throw std::invalid_argument("run_ascent: divergent exponent p must lie in (1/2, 1]");
    }
    if (!cfg.seed.empty() && cfg.seed.size() != grid.num_nodes())
        throw std::invalid_argument("run_ascent: seed multiplier has wrong size");
}

}  // namespace

AscentReport run_ascent(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                        const Marginal& m0, const Marginal& m1, const AscentConfig& cfg) {
    validate_config(grid, cfg);
    const CflReport cfl = check_cfl(grid, cs);
    if (!cfl.ok) throw CflError(cfl);

    const auto t_start = std::chrono::steady_clock::now();
    const GridFunction w0 = hat_weights(m0, grid).weights;
    const GridFunction w1 = hat_weights(m1, grid).weights;

    const double K = cfg.K;
    const double pi_bound = 2.0 * K * K * grid.R() * grid.dx();
    const double div_c =
        (cfg.stepsize.c > 0.0) ? cfg.stepsize.c : default_divergent_scale(grid, K);

    GridFunction lambda1 = cfg.seed.empty() ? GridFunction(grid.r(), 0.0) : cfg.seed;

    AscentReport rep;
    rep.value_trace.reserve(static_cast<std::size_t>(cfg.n_iters) + 1);
    rep.gradient_norm_trace.reserve(static_cast<std::size_t>(cfg.n_iters) + 1);
    rep.gamma_trace.reserve(static_cast<std::size_t>(cfg.n_iters) + 1);
    rep.best_value = -std::numeric_limits<double>::infinity();

    for (long n = 0;; ++n) {
        const SolveResult sr = solve_backward(grid, cs, cost, lambda1);
        const double value = dot(w0, sr.lambda0) - dot(w1, lambda1);
        if (!std::isfinite(value)) {
            std::ostringstream os;
            os << "run_ascent: non-finite dual value at iterate " << n;
            throw NumericError(os.str());
        }
        const SuperGradient grad =
            cfg.use_direct_gradient
                ? supergradient_direct_from_weights(grid, cs, cost, sr.controls, w0, w1)
                : supergradient_adjoint_from_weights(grid, cs, sr.controls, w0, w1);
        const double gnorm = norm_R(grad.components);

        rep.value_trace.push_back(value);
        rep.gradient_norm_trace.push_back(gnorm);
        if (value > rep.best_value) {
            rep.best_value = value;
            rep.best_iterate = lambda1;
        }

        if (n == cfg.n_iters) {
            rep.gamma_trace.push_back(0.0);
            break;
        }
        if (gnorm == 0.0) {  // stationary point of the concave objective
            rep.gamma_trace.push_back(0.0);
            rep.early_stopped = true;
            break;
        }

        const double step_index = static_cast<double>(n + 1);
        double gamma;
        if (cfg.stepsize.kind == StepsizeKind::optimal) {
            gamma = std::sqrt(2.0 * pi_bound) / (gnorm * std::sqrt(step_index));
        } else {
            gamma = div_c / std::pow(step_index, cfg.stepsize.p);
        }
        rep.gamma_trace.push_back(gamma);

        for (int i = -grid.r(); i <= grid.r(); ++i) lambda1[i] += gamma * grad.components[i];
        lambda1 = project_lipschitz(lambda1, K, grid.dx());
        ++rep.iterations_run;
    }

    // gamma/gradient pairs of the steps actually taken
    const std::size_t steps = static_cast<std::size_t>(rep.iterations_run);
    if (steps > 0) {
        rep.gap_bounds = gap_bounds(grid, K, std::span(rep.gamma_trace).first(steps),
                                    std::span(rep.gradient_norm_trace).first(steps));
        rep.theoretical_gap = rep.gap_bounds.trace_bound;
    } else {
        rep.theoretical_gap = std::numeric_limits<double>::quiet_NaN();
    }
    rep.budget = error_budget(grid, cs, cost, m0, m1, K, rep.theoretical_gap);
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

GapBounds gap_bounds(const GridSpec& grid, double K, std::span<const double> gammas,
                     std::span<const double> gradient_norms) {
    if (gammas.empty() || gammas.size() != gradient_norms.size())
        throw std::invalid_argument("gap_bounds: need matching non-empty gamma and norm traces");
    const double pi_bound = 2.0 * K * K * grid.R() * grid.dx();
    double sum_g = 0.0, sum_g2 = 0.0, sum_g2n2 = 0.0;
    for (std::size_t s = 0; s < gammas.size(); ++s) {
        sum_g += gammas[s];
        sum_g2 += gammas[s] * gammas[s];
        sum_g2n2 += gammas[s] * gammas[s] * gradient_norms[s] * gradient_norms[s];
    }
    GapBounds out;
    out.trace_bound = (pi_bound + sum_g2n2) / sum_g;
    out.closed_form_bound =
        (pi_bound + 4.0 * (grid.R() / grid.dx() + 1.0) * sum_g2) / sum_g;
    out.optimal_rate_shape = K * (grid.R() + std::sqrt(grid.R() * grid.dx())) /
                             std::sqrt(static_cast<double>(gammas.size()));
    return out;
}

double theoretical_gap(const GridSpec& grid, const AscentConfig& cfg, long n,
                       std::span<const double> gradient_norms) {
    if (n < 1) throw std::invalid_argument("theoretical_gap: need n >= 1");
    if (gradient_norms.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("theoretical_gap: need a gradient norm per step");
    const double K = cfg.K;
    const double pi_bound = 2.0 * K * K * grid.R() * grid.dx();
    const double div_c =
        (cfg.stepsize.c > 0.0) ? cfg.stepsize.c : default_divergent_scale(grid, K);
    std::vector<double> gammas(static_cast<std::size_t>(n));
    for (long s = 1; s <= n; ++s) {
        const double gnorm = gradient_norms[static_cast<std::size_t>(s - 1)];
        if (cfg.stepsize.kind == StepsizeKind::optimal) {
            gammas[static_cast<std::size_t>(s - 1)] =
                (gnorm == 0.0) ? 0.0
                               : std::sqrt(2.0 * pi_bound) /
                                     (gnorm * std::sqrt(static_cast<double>(s)));
        } else {
            gammas[static_cast<std::size_t>(s - 1)] =
                div_c / std::pow(static_cast<double>(s), cfg.stepsize.p);
        }
    }
    return gap_bounds(grid, K, gammas, gradient_norms.first(static_cast<std::size_t>(n)))
        .trace_bound;
}

ErrorBudget error_budget(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                         const Marginal& m0, const Marginal& m1, double K, double ascent_gap) {
    ErrorBudget b;
    const double dx = grid.dx();
    // M, with the x-gradient of the cost sampled over the grid by central
    // differences (approximate when the cost is not piecewise smooth there)
    double M = 0.0;
    for (const Control& u : cs.candidates()) {
        const double unorm = std::hypot(u.a, u.b);
        for (int k = 0; k <= grid.l(); ++k) {
            const double t = grid.t(k);
            double grad_max = 0.0;
            for (int i = -grid.r(); i <= grid.r(); ++i) {
                const double xm = grid.x(std::max(i - 1, -grid.r()));
                const double xp = grid.x(std::min(i + 1, grid.r()));
                const double dldx = (cost(t, xp, u.a, u.b) - cost(t, xm, u.a, u.b)) / (xp - xm);
                grad_max = std::max(grad_max, std::abs(dldx));
            }
            M = std::max(M, unorm + std::abs(cost(t, 0.0, u.a, u.b)) + grad_max);
        }
    }
    b.M = M;
    b.tail_integral = m0.tail_integral(grid.R() / 2.0) + m1.tail_integral(grid.R() / 2.0);
    const double exp_term =
        (M > 0.0) ? std::exp(-grid.R() * grid.R() / (8.0 * M) + grid.R() / 2.0) : 0.0;
    b.domain_truncation = (1.0 + K) * (exp_term + b.tail_integral);
    b.fd_dt_term = std::pow(grid.dt(), 0.1);
    b.fd_dx_term = std::pow(dx, 0.2);
    b.fd_interp_term = K * dx;
    b.ascent_gap = ascent_gap;
    b.control_resolution =
        "finite candidate list stands in for U: exact when the per-node objective is affine in "
        "(a, b) over a box or segment (endpoints attain the min); otherwise refine the list "
        "(no bound claimed)";
    return b;
}

std::string format_error_budget(const ErrorBudget& b) {
    std::ostringstream os;
    os.precision(12);
    os << "error_budget.M: " << b.M << "\n"
       << "error_budget.tail_integral: " << b.tail_integral << "\n"
       << "error_budget.domain_truncation: " << b.domain_truncation
       << "  (x C, unknown constant)\n"
       << "error_budget.fd_dt_term: " << b.fd_dt_term << "  (dt^0.1, x L_{K,R})\n"
       << "error_budget.fd_dx_term: " << b.fd_dx_term << "  (dx^0.2, x L_{K,R})\n"
       << "error_budget.fd_interp_term: " << b.fd_interp_term << "  (K dx)\n"
       << "error_budget.ascent_gap: " << b.ascent_gap << "\n"
       << "error_budget.control_resolution: " << b.control_resolution << "\n";
    return os.str();
}

}  // namespace smt
