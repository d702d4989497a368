#include "smt/hjb.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace smt {

CflReport check_cfl(const GridSpec& grid, const ControlSet& cs) {
    CflReport rep;
    rep.max_ratio = -std::numeric_limits<double>::infinity();
    const double dx = grid.dx();
    const double dt = grid.dt();
    for (const Control& u : cs.candidates()) {
        const double ratio = dt * (std::abs(u.b) / dx + u.a / (dx * dx));
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.worst = u;
        }
    }
    rep.ok = rep.max_ratio <= 1.0;
    rep.margin = 1.0 - rep.max_ratio;
    return rep;
}

CflError::CflError(const CflReport& rep)
    : std::runtime_error([&rep] {
          std::ostringstream os;
          os << "CFL condition violated: dt*(|b|/dx + a/dx^2) = " << rep.max_ratio
             << " > 1 at candidate (a = " << rep.worst.a << ", b = " << rep.worst.b << ")";
          return os.str();
      }()),
      report(rep) {}

namespace {

void validate_inputs(const GridSpec& grid, const ControlSet& cs, const GridFunction& lambda1) {
    const CflReport cfl = check_cfl(grid, cs);
    if (!cfl.ok) throw CflError(cfl);
    if (lambda1.size() != grid.num_nodes())
        throw std::invalid_argument("solve: lambda1 must have 2r+1 node values");
    if (!lambda1.all_finite())
        throw std::invalid_argument("solve: lambda1 has non-finite entries");
}

// shared sweep; pick == nullptr -> minimize over all candidates and record,
// otherwise follow the given field
SolveResult sweep(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                  const ControlField* pick, const GridFunction& lambda1, bool include_cost,
                  const SolveOptions& opts) {
    validate_inputs(grid, cs, lambda1);
    const int r = grid.r();
    const int l = grid.l();
    const double dx = grid.dx();
    const double dt = grid.dt();
    const auto& cands = cs.candidates();

    if (pick != nullptr && (pick->radius() != r || pick->levels() != l))
        throw std::invalid_argument("solve_frozen: control field shape does not match grid");
    SolveResult out;
    out.controls = (pick != nullptr) ? *pick : ControlField(r, l);

    GridFunction cur = lambda1;
    GridFunction next = lambda1;
    if (opts.keep_surface) {
        out.full_surface.emplace(static_cast<std::size_t>(l + 1), GridFunction(r));
        (*out.full_surface)[static_cast<std::size_t>(l)] = lambda1;
    }

    for (int k = l - 1; k >= 0; --k) {
        const double t1 = grid.t(k + 1);
        for (int i = -r + 1; i <= r - 1; ++i) {
            const double xi = grid.x(i);
            const double up = (cur[i + 1] - cur[i]) / dx;
            const double dn = (cur[i - 1] - cur[i]) / dx;
            const double d2 = (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]) / (dx * dx);
            double best;
            if (pick == nullptr) {
                best = std::numeric_limits<double>::infinity();
                std::uint32_t best_idx = 0;
                for (std::uint32_t c = 0; c < cands.size(); ++c) {
                    const Control& u = cands[c];
                    const double obj = cost(t1, xi, u.a, u.b) + std::max(u.b, 0.0) * up +
                                       std::max(-u.b, 0.0) * dn + 0.5 * u.a * d2;
                    if (obj < best) {
                        best = obj;
                        best_idx = c;
                    }
                }
                out.controls.at(k, i) = best_idx;
            } else {
                // same expression shape as the minimizing branch so frozen
                // optimal controls reproduce the optimum bitwise
                const Control& u = cands[pick->at(k, i)];
                const double cost_term = include_cost ? cost(t1, xi, u.a, u.b) : 0.0;
                best = cost_term + std::max(u.b, 0.0) * up + std::max(-u.b, 0.0) * dn +
                       0.5 * u.a * d2;
            }
            next[i] = cur[i] + dt * best;
        }
        next[-r] = lambda1[-r];
        next[r] = lambda1[r];
        std::swap(cur, next);
        if (opts.keep_surface) (*out.full_surface)[static_cast<std::size_t>(k)] = cur;
    }
    out.lambda0 = std::move(cur);
    return out;
}

}  // namespace

SolveResult solve_backward(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                           const GridFunction& lambda1, const SolveOptions& opts) {
    return sweep(grid, cs, cost, nullptr, lambda1, true, opts);
}

SolveResult solve_frozen(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                         const ControlField& controls, const GridFunction& lambda1,
                         bool include_cost, const SolveOptions& opts) {
    for (std::uint32_t c : controls.raw())
        if (c >= cs.size())
            throw std::invalid_argument("solve_frozen: control index out of range");
    return sweep(grid, cs, cost, &controls, lambda1, include_cost, opts);
}

}  // namespace smt
