#include "smt/sensitivity.hpp"

#include <cmath>
#include <stdexcept>

namespace smt {

SuperGradient supergradient_direct_from_weights(const GridSpec& grid, const ControlSet& cs,
                                                const CostFn& cost, const ControlField& controls,
                                                const GridFunction& w0, const GridFunction& w1) {
    const int r = grid.r();
    SuperGradient out{GridFunction(r)};
    for (int j = -r; j <= r; ++j) {
        GridFunction delta(r, 0.0);
        delta[j] = 1.0;
        const SolveResult sr = solve_frozen(grid, cs, cost, controls, delta, /*include_cost=*/false);
        out.components[j] = dot(w0, sr.lambda0) - w1[j];
    }
    return out;
}

SuperGradient supergradient_direct(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                                   const Marginal& m0, const Marginal& m1,
                                   const ControlField& controls) {
    const GridFunction w0 = hat_weights(m0, grid).weights;
    const GridFunction w1 = hat_weights(m1, grid).weights;
    return supergradient_direct_from_weights(grid, cs, cost, controls, w0, w1);
}

SuperGradient supergradient_adjoint_from_weights(const GridSpec& grid, const ControlSet& cs,
                                                 const ControlField& controls,
                                                 const GridFunction& w0, const GridFunction& w1) {
    const int r = grid.r();
    const int l = grid.l();
    if (controls.radius() != r || controls.levels() != l)
        throw std::invalid_argument("supergradient_adjoint: control field shape does not match grid");
    for (std::uint32_t c : controls.raw())
        if (c >= cs.size()) throw std::invalid_argument("supergradient_adjoint: control index out of range");
    const double dx = grid.dx();
    const double dt = grid.dt();

    GridFunction mass = w0;            // mu0 hat weights pushed forward by the transposes
    GridFunction next(r, 0.0);
    GridFunction absorbed(r, 0.0);     // boundary contributions, pinned per level

    for (int k = 0; k < l; ++k) {
        absorbed[-r] += mass[-r];
        absorbed[r] += mass[r];
        for (int i = -r; i <= r; ++i) next[i] = 0.0;
        for (int i = -r + 1; i <= r - 1; ++i) {
            const Control& u = cs[controls.at(k, i)];
            const double bp = std::max(u.b, 0.0);
            const double bm = std::max(-u.b, 0.0);
            const double w_dn = dt * (bm / dx + 0.5 * u.a / (dx * dx));
            const double w_up = dt * (bp / dx + 0.5 * u.a / (dx * dx));
            const double w_ct = 1.0 - dt * ((bp + bm) / dx + u.a / (dx * dx));
            const double mi = mass[i];
            next[i - 1] += w_dn * mi;
            next[i] += w_ct * mi;
            next[i + 1] += w_up * mi;
        }
        std::swap(mass, next);
    }

    SuperGradient out{GridFunction(r)};
    for (int j = -r; j <= r; ++j) out.components[j] = mass[j] + absorbed[j] - w1[j];
    return out;
}

SuperGradient supergradient_adjoint(const GridSpec& grid, const ControlSet& cs, const CostFn&,
                                    const Marginal& m0, const Marginal& m1,
                                    const ControlField& controls) {
    const GridFunction w0 = hat_weights(m0, grid).weights;
    const GridFunction w1 = hat_weights(m1, grid).weights;
    return supergradient_adjoint_from_weights(grid, cs, controls, w0, w1);
}

}  // namespace smt
