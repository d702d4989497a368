#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "smt/grid.hpp"
#include "smt/model.hpp"

namespace smt {

/// Chosen candidate index per interior space-time node: levels k in [0, l),
/// nodes i in (-r, r). Entry (k, i) is the control used when stepping the
/// solution from level k+1 down to level k.
class ControlField {
public:
    ControlField() = default;
    ControlField(int radius, int levels)
        : r_(radius), l_(levels),
          idx_(static_cast<std::size_t>(levels) * interior_count(), 0) {
        if (radius < 1 || levels < 1)
            throw std::invalid_argument("ControlField: need radius >= 1 and levels >= 1");
    }

    int radius() const { return r_; }
    int levels() const { return l_; }
    std::size_t interior_count() const { return static_cast<std::size_t>(2 * r_ - 1); }

    std::uint32_t at(int k, int i) const { return idx_[offset(k, i)]; }
    std::uint32_t& at(int k, int i) { return idx_[offset(k, i)]; }

    const std::vector<std::uint32_t>& raw() const { return idx_; }
    std::vector<std::uint32_t>& raw() { return idx_; }

private:
    std::size_t offset(int k, int i) const {
        return static_cast<std::size_t>(k) * interior_count() +
               static_cast<std::size_t>(i + r_ - 1);
    }
    int r_ = 0;
    int l_ = 0;
    std::vector<std::uint32_t> idx_;
};

struct CflReport {
    bool ok = false;
    double max_ratio = 0.0;  // max over candidates of dt * (|b|/dx + a/dx^2)
    double margin = 0.0;     // 1 - max_ratio
    Control worst{};         // candidate attaining max_ratio
};

/// Time-step restriction dt * (|b|/dx + a/dx^2) <= 1 for every candidate;
/// it makes the explicit one-step update monotone (nonnegative stencil
/// weights summing to 1).
CflReport check_cfl(const GridSpec& grid, const ControlSet& cs);

class CflError : public std::runtime_error {
public:
    CflError(const CflReport& report);
    CflReport report;
};

struct SolveResult {
    GridFunction lambda0;  // solution slice at t = 0
    ControlField controls;
    // surface[k] = solution at level k, retained only on request
    std::optional<std::vector<GridFunction>> full_surface;
};

struct SolveOptions {
    bool keep_surface = false;
};

/// Explicit backward finite-difference sweep for the terminal/lateral data
/// lambda1: interior update
///   w(t_k, x_i) = w(t_{k+1}, x_i)
///               + dt * min_u { ell(t_{k+1}, x_i, a, b) + b+ D+ w + b- D- w + a/2 D2 w }(t_{k+1}, x_i),
/// all other nodes pinned to lambda1. Records the per-node argmin.
SolveResult solve_backward(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                           const GridFunction& lambda1, const SolveOptions& opts = {});

/// Same sweep with the candidate fixed per node by `controls` (no min);
/// the running cost term is included iff include_cost.
SolveResult solve_frozen(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                         const ControlField& controls, const GridFunction& lambda1,
                         bool include_cost, const SolveOptions& opts = {});

}  // namespace smt
