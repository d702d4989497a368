#include "smt/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace smt {

namespace {

// shortest digit string that round-trips a double
std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
        out << content;
        if (!out) throw std::runtime_error("atomic_write: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("atomic_write: rename to " + path + " failed");
}

std::string trace_csv_text(const AscentReport& rep) {
    std::ostringstream os;
    os << "n,value,running_max,gradient_norm_R,gamma_n\n";
    double running = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < rep.value_trace.size(); ++n) {
        running = std::max(running, rep.value_trace[n]);
        os << n << ',' << num17(rep.value_trace[n]) << ',' << num17(running) << ','
           << num17(rep.gradient_norm_trace[n]) << ',' << num17(rep.gamma_trace[n]) << '\n';
    }
    return os.str();
}

std::string report_text(const RunConfig& cfg, const GridSpec& grid, const CflReport& cfl,
                        const AscentReport& rep) {
    std::ostringstream os;
    os << "best_value: " << num17(rep.best_value) << "\n"
       << "iterations: " << rep.iterations_run << "\n"
       << "early_stopped: " << (rep.early_stopped ? "yes" : "no") << "\n"
       << "wall_time_seconds: " << num17(rep.wall_time_seconds) << "\n"
       << "theoretical_gap: " << num17(rep.theoretical_gap) << "\n"
       << "theoretical_gap_closed_form: " << num17(rep.gap_bounds.closed_form_bound) << "\n"
       << "optimal_rate_shape: " << num17(rep.gap_bounds.optimal_rate_shape)
       << "  (K (R + sqrt(R dx)) / sqrt(N), x C)\n"
       << "grid.R: " << num17(grid.R()) << "\n"
       << "grid.dx: " << num17(grid.dx()) << "\n"
       << "grid.dt: " << num17(grid.dt()) << "\n"
       << "grid.r: " << grid.r() << "\n"
       << "grid.l: " << grid.l() << "\n"
       << "cfl.max_ratio: " << num17(cfl.max_ratio) << "\n"
       << "cfl.margin: " << num17(cfl.margin) << "\n"
       << "ascent.K: " << num17(cfg.K) << "\n"
       << "ascent.stepsize.policy: " << cfg.stepsize_policy << "\n"
       << format_error_budget(rep.budget);
    return os.str();
}

std::string lambda0_csv_text(const GridSpec& grid, const GridFunction& lambda0) {
    std::ostringstream os;
    os << "i,x_i,value\n";
    for (int i = -grid.r(); i <= grid.r(); ++i)
        os << i << ',' << num17(grid.x(i)) << ',' << num17(lambda0[i]) << '\n';
    return os.str();
}

std::string controls_csv_text(const GridSpec& grid, const ControlSet& cs,
                              const ControlField& controls) {
    std::ostringstream os;
    os << "k,i,a,b\n";
    for (int k = 0; k < grid.l(); ++k)
        for (int i = -grid.r() + 1; i <= grid.r() - 1; ++i) {
            const Control& u = cs[controls.at(k, i)];
            os << k << ',' << i << ',' << num17(u.a) << ',' << num17(u.b) << '\n';
        }
    return os.str();
}

std::string gradient_csv_text(const GridSpec& grid, const GridFunction& gradient) {
    std::ostringstream os;
    os << "j,x_j,component\n";
    for (int j = -grid.r(); j <= grid.r(); ++j)
        os << j << ',' << num17(grid.x(j)) << ',' << num17(gradient[j]) << '\n';
    return os.str();
}

}  // namespace smt
