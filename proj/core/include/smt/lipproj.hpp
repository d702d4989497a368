#pragma once

#include "smt/grid.hpp"

namespace smt {

/// Image of a grid function under the outward-increment transform:
/// psi[0] = phi(0), psi[i] = phi(x_i) - phi(x_{i-1}) for i > 0 and
/// psi[i] = phi(x_i) - phi(x_{i+1}) for i < 0. In these coordinates the
/// K-Lipschitz functions vanishing at the origin node form the box
/// {psi : psi[0] = 0, |psi[i]| <= K*dx}.
struct IncrementVector {
    IncrementVector() = default;
    explicit IncrementVector(int radius, double fill = 0.0) : psi(radius, fill) {}

    int radius() const { return psi.radius(); }
    double operator[](int i) const { return psi[i]; }
    double& operator[](int i) { return psi[i]; }

    GridFunction psi;
};

IncrementVector to_increments(const GridFunction& phi);
GridFunction from_increments(const IncrementVector& psi);

/// |phi|_R: Euclidean norm of the increment vector (the psi[0] component
/// included).
double norm_R(const GridFunction& phi);

/// L2 projection (in |.|_R) onto the K-Lipschitz functions vanishing at the
/// origin node: clamp each increment to [-K*dx, K*dx], zero the origin
/// component, and rebuild.
GridFunction project_lipschitz(const GridFunction& phi, double K, double dx);

}  // namespace smt
