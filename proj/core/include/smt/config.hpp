#pragma once

#include <stdexcept>
#include <string>

#include "smt/ascent.hpp"
#include "smt/grid.hpp"
#include "smt/measures.hpp"
#include "smt/model.hpp"

namespace smt {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MarginalSpec {
    std::string kind;  // gaussian | point | csv
    double mean = 0.0;
    double stddev = 1.0;
    double position = 0.0;
    std::string path;
};

/// One batch run, loadable from a flat text file of dotted `key = value`
/// lines (# comments, blank lines allowed; unknown keys rejected).
struct RunConfig {
    // grid
    double R = 1.0;
    double dx = 0.1;
    double dt = 0.025;

    // control set
    std::string control_kind = "interval";  // interval | log_martingale | explicit_list
    double a_min = 0.0, a_max = 0.0;
    double b_min = 0.0, b_max = 0.0;
    int n_a = 1, n_b = 1, n = 1;
    std::string candidates;  // explicit_list: "a,b; a,b; ..."

    // cost
    std::string cost_kind = "a";  // a | weighted_a
    std::string eta_kind = "const";  // const | linear
    double eta_c = 1.0;

    MarginalSpec mu0;
    MarginalSpec mu1;

    // ascent
    double K = 1.0;
    long iterations = 0;
    std::string stepsize_policy = "optimal";  // optimal | divergent
    double stepsize_c = 0.0;                  // <= 0: default scale
    double stepsize_p = 1.0;
    std::string gradient = "adjoint";  // adjoint | direct (slow cross-check path)

    // outputs
    std::string trace_csv;
    std::string report_path;
    std::string dump_lambda0_csv;
    std::string dump_controls_csv;
    std::string dump_gradient_csv;

    int threads = 0;  // 0 = auto; the solver currently runs one worker
};

RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");
RunConfig parse_config_file(const std::string& path);

GridSpec make_grid(const RunConfig& cfg);
ControlSet make_control_set(const RunConfig& cfg);
CostFn make_cost(const RunConfig& cfg);
/// Builds the marginal; CSV atom lists are normalized on load and any
/// normalization warning is appended to *warning when non-null.
Marginal make_marginal(const MarginalSpec& spec, std::string* warning = nullptr);
AscentConfig make_ascent_config(const RunConfig& cfg);

}  // namespace smt
