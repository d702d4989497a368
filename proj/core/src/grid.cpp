#include "smt/grid.hpp"

#include <cmath>
#include <string>

namespace smt {

namespace {

// round R/dx (resp. 1/dt) to the nearest integer, refusing if the snap moves
// the ratio by more than 1e-9 relative
int snap_count(double ratio, const char* what) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw std::invalid_argument(std::string("GridSpec: ") + what + " must be positive and finite");
    const double rounded = std::round(ratio);
    if (rounded < 1.0)
        throw std::invalid_argument(std::string("GridSpec: ") + what + " must be at least 1");
    if (std::abs(ratio - rounded) > 1e-9 * ratio)
        throw std::invalid_argument(std::string("GridSpec: ") + what + " = " + std::to_string(ratio) +
                                    " is not integral within 1e-9 relative");
    return static_cast<int>(rounded);
}

}  // namespace

GridSpec::GridSpec(double R, double dx, double dt) : R_(R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("GridSpec: R must be positive and finite");
    if (!(dx > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("GridSpec: dx and dt must be positive");
    r_ = snap_count(R / dx, "R/dx");
    l_ = snap_count(1.0 / dt, "1/dt");
    if (r_ < 1) throw std::invalid_argument("GridSpec: r must be >= 1");
    dx_ = R / r_;
    dt_ = 1.0 / l_;
}

}  // namespace smt
