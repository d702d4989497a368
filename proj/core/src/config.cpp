#include "smt/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace smt {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("config: key '" + key + "' has trailing characters in '" + v + "'");
    return out;
}

long parse_long(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long out;
    try {
        out = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-integer value '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("config: key '" + key + "' has trailing characters in '" + v + "'");
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) +
                              ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ConfigError("config: duplicate key '" + key + "' in " + origin);
    }

    RunConfig cfg;
    auto take = [&kv](const std::string& key) -> std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto num = [&](const std::string& key, double& slot) {
        if (auto* v = take(key)) {
            slot = parse_double(key, *v);
            kv.erase(key);
        }
    };
    auto integer = [&](const std::string& key, auto& slot) {
        if (auto* v = take(key)) {
            slot = static_cast<std::remove_reference_t<decltype(slot)>>(parse_long(key, *v));
            kv.erase(key);
        }
    };
    auto str = [&](const std::string& key, std::string& slot) {
        if (auto* v = take(key)) {
            slot = *v;
            kv.erase(key);
        }
    };

    num("grid.R", cfg.R);
    num("grid.dx", cfg.dx);
    num("grid.dt", cfg.dt);

    str("control_set.kind", cfg.control_kind);
    num("control_set.a_min", cfg.a_min);
    num("control_set.a_max", cfg.a_max);
    num("control_set.b_min", cfg.b_min);
    num("control_set.b_max", cfg.b_max);
    integer("control_set.n_a", cfg.n_a);
    integer("control_set.n_b", cfg.n_b);
    integer("control_set.n", cfg.n);
    str("control_set.candidates", cfg.candidates);

    str("cost.kind", cfg.cost_kind);
    str("cost.eta", cfg.eta_kind);
    num("cost.c", cfg.eta_c);

    auto marginal = [&](const std::string& prefix, MarginalSpec& spec) {
        str(prefix + ".kind", spec.kind);
        num(prefix + ".mean", spec.mean);
        num(prefix + ".stddev", spec.stddev);
        num(prefix + ".position", spec.position);
        str(prefix + ".path", spec.path);
    };
    marginal("marginals.mu0", cfg.mu0);
    marginal("marginals.mu1", cfg.mu1);

    num("ascent.K", cfg.K);
    integer("ascent.iterations", cfg.iterations);
    str("ascent.stepsize.policy", cfg.stepsize_policy);
    num("ascent.stepsize.c", cfg.stepsize_c);
    num("ascent.stepsize.p", cfg.stepsize_p);
    str("ascent.gradient", cfg.gradient);

    str("outputs.trace_csv", cfg.trace_csv);
    str("outputs.report", cfg.report_path);
    str("outputs.dump_lambda0", cfg.dump_lambda0_csv);
    str("outputs.dump_controls", cfg.dump_controls_csv);
    str("outputs.dump_gradient", cfg.dump_gradient_csv);

    integer("threads", cfg.threads);

    if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "' in " + origin);
    if (cfg.mu0.kind.empty() || cfg.mu1.kind.empty())
        throw ConfigError("config: marginals.mu0.kind and marginals.mu1.kind are required");
    if (cfg.threads < 0) throw ConfigError("config: threads must be >= 0");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

GridSpec make_grid(const RunConfig& cfg) {
    try {
        return GridSpec(cfg.R, cfg.dx, cfg.dt);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ControlSet make_control_set(const RunConfig& cfg) {
    try {
        if (cfg.control_kind == "interval")
            return make_interval_set(cfg.a_min, cfg.a_max, cfg.b_min, cfg.b_max, cfg.n_a, cfg.n_b);
        if (cfg.control_kind == "log_martingale")
            return make_log_martingale_set(cfg.a_min, cfg.a_max, cfg.n);
        if (cfg.control_kind == "explicit_list") {
            std::vector<Control> cands;
            std::istringstream in(cfg.candidates);
            std::string pair;
            while (std::getline(in, pair, ';')) {
                pair = trim(pair);
                if (pair.empty()) continue;
                const auto comma = pair.find(',');
                if (comma == std::string::npos)
                    throw ConfigError("config: explicit_list entries must be 'a,b'");
                cands.push_back(Control{parse_double("control_set.candidates", trim(pair.substr(0, comma))),
                                        parse_double("control_set.candidates", trim(pair.substr(comma + 1)))});
            }
            return ControlSet(std::move(cands), "explicit_list");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("config: control_set.kind must be interval, log_martingale or explicit_list");
}

CostFn make_cost(const RunConfig& cfg) {
    if (cfg.cost_kind == "a") return CostFn::diffusion();
    if (cfg.cost_kind == "weighted_a") {
        if (cfg.eta_kind == "const") return CostFn::weighted_diffusion_const(cfg.eta_c);
        if (cfg.eta_kind == "linear") return CostFn::weighted_diffusion_linear();
        throw ConfigError("config: cost.eta must be const or linear");
    }
    throw ConfigError("config: cost.kind must be a or weighted_a");
}

Marginal make_marginal(const MarginalSpec& spec, std::string* warning) {
    try {
        if (spec.kind == "gaussian") return Marginal::gaussian(spec.mean, spec.stddev);
        if (spec.kind == "point") return Marginal::point(spec.position);
        if (spec.kind == "csv") return Marginal::from_csv(spec.path, warning);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: marginal: ") + e.what());
    }
    throw ConfigError("config: marginal kind must be gaussian, point or csv");
}

AscentConfig make_ascent_config(const RunConfig& cfg) {
    AscentConfig out;
    out.K = cfg.K;
    out.n_iters = cfg.iterations;
    if (cfg.stepsize_policy == "optimal") {
        out.stepsize.kind = StepsizeKind::optimal;
    } else if (cfg.stepsize_policy == "divergent") {
        out.stepsize.kind = StepsizeKind::divergent;
    } else {
        throw ConfigError("config: ascent.stepsize.policy must be optimal or divergent");
    }
    out.stepsize.c = cfg.stepsize_c;
    out.stepsize.p = cfg.stepsize_p;
    if (cfg.gradient == "direct") {
        out.use_direct_gradient = true;
    } else if (cfg.gradient != "adjoint") {
        throw ConfigError("config: ascent.gradient must be adjoint or direct");
    }
    return out;
}

}  // namespace smt
