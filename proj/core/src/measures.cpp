#include "smt/measures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smt {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_pdf(double z) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

namespace {

// mu([a,b]) for N(m, s^2); evaluated through the erfc tail on whichever
// half-line the cell sits, which keeps tiny tail masses from cancelling
// against 1
double gauss_mass(double m, double s, double a, double b) {
    const double za = (a - m) / s;
    const double zb = (b - m) / s;
    const double inv_sqrt2 = 0.7071067811865475244;
    if (za + zb >= 0.0) return 0.5 * (std::erfc(za * inv_sqrt2) - std::erfc(zb * inv_sqrt2));
    return 0.5 * (std::erfc(-zb * inv_sqrt2) - std::erfc(-za * inv_sqrt2));
}

// integral of x over [a,b] against N(m, s^2)
double gauss_first_moment(double m, double s, double a, double b) {
    const double za = (a - m) / s;
    const double zb = (b - m) / s;
    return m * gauss_mass(m, s, a, b) + s * (normal_pdf(za) - normal_pdf(zb));
}

}  // namespace

Marginal Marginal::gaussian(double mean, double stddev) {
    if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(mean))
        throw std::invalid_argument("Marginal::gaussian: stddev must be positive and finite");
    return Marginal(GaussianLaw{mean, stddev});
}

Marginal Marginal::atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("Marginal::atoms: empty atom list");
    double sum = 0.0;
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.position) || !std::isfinite(a.weight) || a.weight < 0.0)
            throw std::invalid_argument("Marginal::atoms: weights must be finite and >= 0");
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Marginal::atoms: weights sum to " + std::to_string(sum) +
                                    ", expected 1 within 1e-12");
    return Marginal(std::move(atoms));
}

Marginal Marginal::from_csv(const std::string& path, std::string* warning) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Marginal::from_csv: cannot open " + path);
    std::vector<Atom> atoms;
    std::string line;
    double sum = 0.0;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b))
            throw std::runtime_error("Marginal::from_csv: expected 'position,weight' in " + path);
        double pos, w;
        try {
            pos = std::stod(a);
            w = std::stod(b);
        } catch (const std::exception&) {
            if (first) {  // header line
                first = false;
                continue;
            }
            throw std::runtime_error("Marginal::from_csv: bad numeric row '" + line + "' in " + path);
        }
        first = false;
        if (w < 0.0) throw std::runtime_error("Marginal::from_csv: negative weight in " + path);
        atoms.push_back(Atom{pos, w});
        sum += w;
    }
    if (atoms.empty()) throw std::runtime_error("Marginal::from_csv: no atoms in " + path);
    if (!(sum > 0.0)) throw std::runtime_error("Marginal::from_csv: total weight is zero in " + path);
    if (std::abs(sum - 1.0) > 1e-6 && warning != nullptr) {
        std::ostringstream os;
        os << "atom weights in " << path << " sum to " << sum << "; normalizing";
        *warning = os.str();
    }
    for (Atom& a : atoms) a.weight /= sum;
    return Marginal(std::move(atoms));
}

double Marginal::tail_integral(double c) const {
    if (c < 0.0) throw std::invalid_argument("Marginal::tail_integral: c must be >= 0");
    if (is_gaussian()) {
        const auto& [m, s] = gaussian_law();
        const double z_hi = (c - m) / s;
        const double z_lo = (-c - m) / s;
        const double mass = (1.0 - normal_cdf(z_hi)) + normal_cdf(z_lo);
        // E[X; X > c] and E[-X; X < -c]
        const double upper = m * (1.0 - normal_cdf(z_hi)) + s * normal_pdf(z_hi);
        const double lower = s * normal_pdf(z_lo) - m * normal_cdf(z_lo);
        return mass + upper + lower;
    }
    double total = 0.0;
    for (const Atom& a : atom_list())
        if (std::abs(a.position) > c) total += a.weight * (1.0 + std::abs(a.position));
    return total;
}

HatWeights hat_weights(const Marginal& m, const GridSpec& grid) {
    GridFunction w(grid.r(), 0.0);
    const double dx = grid.dx();
    const int r = grid.r();
    if (m.is_gaussian()) {
        const auto& [mean, s] = m.gaussian_law();
        for (int i = -r; i <= r; ++i) {
            const double xi = grid.x(i);
            double acc = 0.0;
            if (i > -r) {  // rising edge over [x_{i-1}, x_i]
                const double lo = grid.x(i - 1);
                acc += (gauss_first_moment(mean, s, lo, xi) - lo * gauss_mass(mean, s, lo, xi)) / dx;
            }
            if (i < r) {  // falling edge over [x_i, x_{i+1}]
                const double hi = grid.x(i + 1);
                acc += (hi * gauss_mass(mean, s, xi, hi) - gauss_first_moment(mean, s, xi, hi)) / dx;
            }
            w[i] = std::max(acc, 0.0);  // roundoff can leave ~1e-30 below zero in the far tail
        }
    } else {
        const double R = grid.R();
        const double drop_tol = 1e-12 * std::max(1.0, R);
        for (const Atom& a : m.atom_list()) {
            if (std::abs(a.position) > R + drop_tol) continue;  // zero extension outside [-R, R]
            double s = a.position / dx;
            long iL = static_cast<long>(std::floor(s));
            double frac = s - static_cast<double>(iL);
            // snap to the node when the position is a node up to rounding
            if (frac < 1e-12) {
                frac = 0.0;
            } else if (frac > 1.0 - 1e-12) {
                ++iL;
                frac = 0.0;
            }
            if (iL < -r) {  // can only happen via the drop tolerance at -R
                iL = -r;
                frac = 0.0;
            }
            if (iL > r) {
                iL = r;
                frac = 0.0;
            }
            w[static_cast<int>(iL)] += a.weight * (1.0 - frac);
            if (frac > 0.0 && iL + 1 <= r) w[static_cast<int>(iL + 1)] += a.weight * frac;
        }
    }
    return HatWeights{grid, std::move(w)};
}

double integrate_linear(const Marginal& m, const GridSpec& grid, const GridFunction& phi) {
    if (phi.size() != grid.num_nodes())
        throw std::invalid_argument("integrate_linear: phi must have 2r+1 node values");
    return dot(hat_weights(m, grid).weights, phi);
}

}  // namespace smt
