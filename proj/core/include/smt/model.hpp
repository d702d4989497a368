#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace smt {

/// One admissible characteristic pair: diffusion coefficient a >= 0, drift b.
struct Control {
    double a = 0.0;
    double b = 0.0;
};

/// Compact control set U, represented by an explicit finite candidate list.
/// For costs affine in (a, b) over boxes or segments the extreme points are
/// exact; otherwise refine the list.
class ControlSet {
public:
    explicit ControlSet(std::vector<Control> candidates, std::string description = "");

    const std::vector<Control>& candidates() const { return candidates_; }
    const std::string& description() const { return description_; }
    std::size_t size() const { return candidates_.size(); }
    const Control& operator[](std::size_t idx) const { return candidates_[idx]; }

    double max_a() const;
    double max_abs_b() const;

private:
    std::vector<Control> candidates_;
    std::string description_;
};

/// Uniform n_a x n_b product grid over [a_min, a_max] x [b_min, b_max],
/// endpoints (hence all four corners) included.
ControlSet make_interval_set(double a_min, double a_max, double b_min, double b_max, int n_a,
                             int n_b);

/// The log-price martingale segment {(a, -a/2) : a in [a_min, a_max]},
/// sampled at n uniform points with endpoints included.
ControlSet make_log_martingale_set(double a_min, double a_max, int n);

/// Running cost ell(t, x, a, b).
class CostFn {
public:
    using Fn = std::function<double(double t, double x, double a, double b)>;

    explicit CostFn(Fn f, std::string description = "")
        : fn_(std::move(f)), description_(std::move(description)) {}

    double operator()(double t, double x, double a, double b) const { return fn_(t, x, a, b); }
    const std::string& description() const { return description_; }

    /// ell = a (pure quadratic-variation charge)
    static CostFn diffusion();
    /// ell = c * a
    static CostFn weighted_diffusion_const(double c);
    /// ell = x * a
    static CostFn weighted_diffusion_linear();

private:
    Fn fn_;
    std::string description_;
};

struct HamiltonianResult {
    double value = 0.0;
    std::size_t argmin = 0;  // candidate index; ties resolved to the lowest index
};

/// min over candidates of  b*p + a*gamma/2 + ell(t, x, a, b).
HamiltonianResult hamiltonian(const ControlSet& cs, const CostFn& cost, double t, double x,
                              double p, double gamma);

}  // namespace smt
