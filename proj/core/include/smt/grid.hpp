#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace smt {

/// Uniform space-time lattice on [0,1] x [-R,R]: nodes x_i = i*dx for
/// |i| <= r, levels t_k = k*dt for k <= l, with r*dx = R and l*dt = 1.
class GridSpec {
public:
    /// Snaps dx to R/r and dt to 1/l where r = round(R/dx), l = round(1/dt).
    /// Throws std::invalid_argument if snapping would move a parameter by
    /// more than 1e-9 relative, or if r < 1 or l < 1.
    GridSpec(double R, double dx, double dt);

    double R() const { return R_; }
    double dx() const { return dx_; }
    double dt() const { return dt_; }
    int r() const { return r_; }
    int l() const { return l_; }

    int num_nodes() const { return 2 * r_ + 1; }
    int num_levels() const { return l_ + 1; }
    double x(int i) const { return i * dx_; }
    double t(int k) const { return k * dt_; }

    bool operator==(const GridSpec&) const = default;

private:
    double R_;
    double dx_;
    double dt_;
    int r_;
    int l_;
};

/// Real values on the 2r+1 spatial nodes, indexed by node index i in [-r, r].
class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(int radius, double fill = 0.0)
        : v_(2 * static_cast<std::size_t>(radius) + 1, fill) {
        if (radius < 0) throw std::invalid_argument("GridFunction: radius must be >= 0");
    }

    static GridFunction from_values(std::vector<double> values) {
        if (values.empty() || values.size() % 2 == 0)
            throw std::invalid_argument("GridFunction: need an odd number of node values");
        GridFunction f;
        f.v_ = std::move(values);
        return f;
    }

    int radius() const { return (static_cast<int>(v_.size()) - 1) / 2; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }

    double operator[](int node) const { return v_[static_cast<std::size_t>(node + radius())]; }
    double& operator[](int node) { return v_[static_cast<std::size_t>(node + radius())]; }

    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    bool all_finite() const {
        for (double v : v_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    GridFunction& operator+=(const GridFunction& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    GridFunction& operator-=(const GridFunction& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    GridFunction& operator*=(double s) {
        for (double& v : v_) v *= s;
        return *this;
    }

    bool operator==(const GridFunction&) const = default;

private:
    std::vector<double> v_;
};

/// Nodal samples of f over the grid: out[i] = f(x_i).
template <typename F>
GridFunction sample_nodes(const GridSpec& g, F&& f) {
    GridFunction out(g.r());
    for (int i = -g.r(); i <= g.r(); ++i) out[i] = f(g.x(i));
    return out;
}

inline double dot(const GridFunction& a, const GridFunction& b) {
    double s = 0.0;
    for (int i = -a.radius(); i <= a.radius(); ++i) s += a[i] * b[i];
    return s;
}

inline double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (int i = -a.radius(); i <= a.radius(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace smt
