#pragma once

#include "smt/grid.hpp"
#include "smt/hjb.hpp"
#include "smt/measures.hpp"
#include "smt/model.hpp"

namespace smt {

/// Super-gradient of the concave dual objective at the multiplier whose
/// optimal controls are given: component j pairs the frozen fundamental
/// solution started from the Kronecker data at node j against mu0, minus the
/// mu1 hat weight at node j.
struct SuperGradient {
    GridFunction components;
};

/// Reference path: one frozen cost-free solve per node j (O(l * r^2) total).
SuperGradient supergradient_direct(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                                   const Marginal& m0, const Marginal& m1,
                                   const ControlField& controls);

/// Production path: a single forward pass of the transposed frozen one-step
/// operators applied to the mu0 hat weights, with the lateral boundary nodes
/// treated as absorbing accumulators (O(l * r) total). Matches the direct
/// path to roundoff.
SuperGradient supergradient_adjoint(const GridSpec& grid, const ControlSet& cs, const CostFn& cost,
                                    const Marginal& m0, const Marginal& m1,
                                    const ControlField& controls);

/// Adjoint pass on precomputed hat weights; used by the ascent loop so the
/// pairings are not rebuilt every iteration.
SuperGradient supergradient_adjoint_from_weights(const GridSpec& grid, const ControlSet& cs,
                                                 const ControlField& controls,
                                                 const GridFunction& w0, const GridFunction& w1);

/// Direct path on precomputed hat weights.
SuperGradient supergradient_direct_from_weights(const GridSpec& grid, const ControlSet& cs,
                                                const CostFn& cost, const ControlField& controls,
                                                const GridFunction& w0, const GridFunction& w1);

}  // namespace smt
