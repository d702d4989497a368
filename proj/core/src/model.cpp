#include "smt/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace smt {

ControlSet::ControlSet(std::vector<Control> candidates, std::string description)
    : candidates_(std::move(candidates)), description_(std::move(description)) {
    if (candidates_.empty()) throw std::invalid_argument("ControlSet: empty candidate list");
    for (const Control& c : candidates_) {
        if (!(c.a >= 0.0) || !std::isfinite(c.a) || !std::isfinite(c.b))
            throw std::invalid_argument("ControlSet: candidates need finite a >= 0 and finite b");
    }
}

double ControlSet::max_a() const {
    double m = 0.0;
    for (const Control& c : candidates_) m = std::max(m, c.a);
    return m;
}

double ControlSet::max_abs_b() const {
    double m = 0.0;
    for (const Control& c : candidates_) m = std::max(m, std::abs(c.b));
    return m;
}

namespace {

double lerp_inclusive(double lo, double hi, int k, int n) {
    if (k == 0) return lo;
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

}  // namespace

ControlSet make_interval_set(double a_min, double a_max, double b_min, double b_max, int n_a,
                             int n_b) {
    if (a_min < 0.0) throw std::invalid_argument("make_interval_set: a_min must be >= 0");
    if (a_min > a_max || b_min > b_max)
        throw std::invalid_argument("make_interval_set: interval bounds out of order");
    if (n_a < 1 || n_b < 1) throw std::invalid_argument("make_interval_set: need n_a, n_b >= 1");
    if (n_a == 1 && a_min != a_max)
        throw std::invalid_argument("make_interval_set: n_a = 1 requires a_min == a_max");
    if (n_b == 1 && b_min != b_max)
        throw std::invalid_argument("make_interval_set: n_b = 1 requires b_min == b_max");
    std::vector<Control> cands;
    cands.reserve(static_cast<std::size_t>(n_a) * static_cast<std::size_t>(n_b));
    for (int ia = 0; ia < n_a; ++ia)
        for (int ib = 0; ib < n_b; ++ib)
            cands.push_back(Control{lerp_inclusive(a_min, a_max, ia, n_a),
                                    lerp_inclusive(b_min, b_max, ib, n_b)});
    return ControlSet(std::move(cands), "interval");
}

ControlSet make_log_martingale_set(double a_min, double a_max, int n) {
    if (a_min < 0.0) throw std::invalid_argument("make_log_martingale_set: a_min must be >= 0");
    if (a_min > a_max) throw std::invalid_argument("make_log_martingale_set: a_min > a_max");
    if (n < 1 || (n == 1 && a_min != a_max))
        throw std::invalid_argument("make_log_martingale_set: need n >= 2, or n = 1 with a_min == a_max");
    std::vector<Control> cands;
    cands.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double a = lerp_inclusive(a_min, a_max, k, n);
        cands.push_back(Control{a, -0.5 * a});
    }
    return ControlSet(std::move(cands), "log_martingale");
}

CostFn CostFn::diffusion() {
    return CostFn([](double, double, double a, double) { return a; }, "a");
}

CostFn CostFn::weighted_diffusion_const(double c) {
    return CostFn([c](double, double, double a, double) { return c * a; }, "weighted_a const");
}

CostFn CostFn::weighted_diffusion_linear() {
    return CostFn([](double, double x, double a, double) { return x * a; }, "weighted_a linear");
}

HamiltonianResult hamiltonian(const ControlSet& cs, const CostFn& cost, double t, double x,
                              double p, double gamma) {
    HamiltonianResult best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Control& u = cs[k];
        const double obj = u.b * p + 0.5 * u.a * gamma + cost(t, x, u.a, u.b);
        if (obj < best.value) {
            best.value = obj;
            best.argmin = k;
        }
    }
    return best;
}

}  // namespace smt
