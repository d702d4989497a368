#include "smt/lipproj.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smt {

IncrementVector to_increments(const GridFunction& phi) {
    const int r = phi.radius();
    IncrementVector psi(r);
    psi[0] = phi[0];
    for (int i = 1; i <= r; ++i) psi[i] = phi[i] - phi[i - 1];
    for (int i = -1; i >= -r; --i) psi[i] = phi[i] - phi[i + 1];
    return psi;
}

GridFunction from_increments(const IncrementVector& psi) {
    const int r = psi.radius();
    GridFunction phi(r);
    phi[0] = psi[0];
    for (int i = 1; i <= r; ++i) phi[i] = phi[i - 1] + psi[i];
    for (int i = -1; i >= -r; --i) phi[i] = phi[i + 1] + psi[i];
    return phi;
}

double norm_R(const GridFunction& phi) {
    const IncrementVector psi = to_increments(phi);
    double s = 0.0;
    for (int i = -psi.radius(); i <= psi.radius(); ++i) s += psi[i] * psi[i];
    return std::sqrt(s);
}

GridFunction project_lipschitz(const GridFunction& phi, double K, double dx) {
    if (!(K >= 0.0)) throw std::invalid_argument("project_lipschitz: K must be >= 0");
    if (!(dx > 0.0)) throw std::invalid_argument("project_lipschitz: dx must be > 0");
    const double bound = K * dx;
    IncrementVector psi = to_increments(phi);
    psi[0] = 0.0;
    for (int i = 1; i <= psi.radius(); ++i) {
        psi[i] = std::clamp(psi[i], -bound, bound);
        psi[-i] = std::clamp(psi[-i], -bound, bound);
    }
    return from_increments(psi);
}

}  // namespace smt
