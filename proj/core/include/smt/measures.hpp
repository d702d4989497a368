#pragma once

#include <string>
#include <variant>
#include <vector>

#include "smt/grid.hpp"

namespace smt {

struct GaussianLaw {
    double mean = 0.0;
    double stddev = 1.0;  // > 0
};

struct Atom {
    double position = 0.0;
    double weight = 0.0;  // >= 0
};

/// Probability measure on the real line: either a Gaussian law or a finite
/// atom list (weights summing to 1).
class Marginal {
public:
    static Marginal gaussian(double mean, double stddev);
    static Marginal atoms(std::vector<Atom> atoms);
    static Marginal point(double position) { return atoms({Atom{position, 1.0}}); }

    /// Loads an atom list from a two-column CSV (position, weight); a header
    /// line is skipped if present. Weights are normalized; when the raw sum
    /// deviates from 1 by more than 1e-6 a warning message is stored in
    /// *warning (if non-null).
    static Marginal from_csv(const std::string& path, std::string* warning = nullptr);

    bool is_gaussian() const { return std::holds_alternative<GaussianLaw>(data_); }
    const GaussianLaw& gaussian_law() const { return std::get<GaussianLaw>(data_); }
    const std::vector<Atom>& atom_list() const { return std::get<std::vector<Atom>>(data_); }

    /// Integral of (1 + |x|) over {|x| > c}; closed form for the Gaussian
    /// kind, finite sum for atoms. Requires c >= 0.
    double tail_integral(double c) const;

private:
    explicit Marginal(std::variant<GaussianLaw, std::vector<Atom>> d) : data_(std::move(d)) {}
    std::variant<GaussianLaw, std::vector<Atom>> data_;
};

/// Pairing weights of the measure against the nodal interpolation basis:
/// weights[i] = mu(hat_i) with hat_i the piecewise-linear tent at x_i,
/// clipped to zero outside [-R, R] (half-tents at the two boundary nodes).
/// Mass outside [-R, R] contributes nothing, so sum(weights) <= 1.
struct HatWeights {
    GridSpec grid;
    GridFunction weights;
};

HatWeights hat_weights(const Marginal& m, const GridSpec& grid);

/// mu(Lin[phi]) for the interpolant of the nodal values phi, extended by
/// zero outside [-R, R]. Equals dot(hat_weights(m, grid).weights, phi).
double integrate_linear(const Marginal& m, const GridSpec& grid, const GridFunction& phi);

// standard normal cdf/pdf, shared with the oracle and budget computations
double normal_cdf(double z);
double normal_pdf(double z);

}  // namespace smt
