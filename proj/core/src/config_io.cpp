#include "polyrl/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "run_config_json.hpp"

namespace polyrl {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

void expect_keys(const json& obj, const char* section,
                 std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (key == k)
                known = true;
        if (!known)
            config_error(std::string(section) + ": unknown key '" + key + "'");
    }
}

void read_count(const json& obj, const char* section, const char* key,
                std::size_t& out) {
    if (!obj.contains(key))
        return;
    const json& v = obj.at(key);
    if (!v.is_number_unsigned())
        config_error(std::string(section) + "." + key +
                     " must be a non-negative integer");
    out = v.get<std::size_t>();
}

void read_real(const json& obj, const char* section, const char* key, double& out) {
    if (!obj.contains(key))
        return;
    const json& v = obj.at(key);
    if (!v.is_number())
        config_error(std::string(section) + "." + key + " must be a number");
    out = v.get<double>();
}

void read_bool(const json& obj, const char* section, const char* key, bool& out) {
    if (!obj.contains(key))
        return;
    const json& v = obj.at(key);
    if (!v.is_boolean())
        config_error(std::string(section) + "." + key + " must be a boolean");
    out = v.get<bool>();
}

}  // namespace

void apply_profile(RunConfig& cfg, std::string_view name) {
    if (name == "desk") {
        cfg.setup.strategy.max_cycle_steps = 10000;
        cfg.n_experiments = 10;
    } else if (name == "paper") {
        cfg.setup.strategy.max_cycle_steps = 120000;
        cfg.n_experiments = 50;
    } else {
        config_error("unknown profile '" + std::string(name) +
                     "' (expected desk or paper)");
    }
    cfg.profile = name;
}

RunConfig default_run_config() {
    RunConfig cfg;
    apply_profile(cfg, "desk");
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path, RunConfig cfg) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path.string());

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config: " + path.string() + ": " + e.what());
    }
    if (!root.is_object())
        config_error(path.string() + ": top level must be an object");

    expect_keys(root, "config",
                {"seed", "experiments", "profile", "topology", "env", "strategy",
                 "line_search", "polytope", "evaluation"});

    // a profile named in the file is a baseline its other keys refine
    if (root.contains("profile")) {
        if (!root.at("profile").is_string())
            config_error("profile must be a string");
        apply_profile(cfg, root.at("profile").get<std::string>());
    }

    if (root.contains("seed")) {
        if (!root.at("seed").is_number_unsigned())
            config_error("seed must be a non-negative integer");
        cfg.master_seed = root.at("seed").get<std::uint64_t>();
    }
    read_count(root, "config", "experiments", cfg.n_experiments);

    if (root.contains("topology")) {
        const json& t = root.at("topology");
        expect_keys(t, "topology", {"inputs", "hidden", "outputs", "shortcut_connections"});
        read_count(t, "topology", "inputs", cfg.setup.topology.inputs);
        read_count(t, "topology", "hidden", cfg.setup.topology.hidden);
        read_count(t, "topology", "outputs", cfg.setup.topology.outputs);
        read_bool(t, "topology", "shortcut_connections",
                  cfg.setup.topology.shortcut_connections);
    }
    if (root.contains("env")) {
        const json& e = root.at("env");
        expect_keys(e, "env",
                    {"dt", "gravity", "cart_mass", "pole_mass", "pole_half_length",
                     "force_magnitude", "theta_fail", "x_fail", "init_frac_x",
                     "init_frac_x_dot", "init_frac_theta", "init_frac_theta_dot"});
        EnvConfig& env = cfg.setup.env;
        read_real(e, "env", "dt", env.dt);
        read_real(e, "env", "gravity", env.gravity);
        read_real(e, "env", "cart_mass", env.cart_mass);
        read_real(e, "env", "pole_mass", env.pole_mass);
        read_real(e, "env", "pole_half_length", env.pole_half_length);
        read_real(e, "env", "force_magnitude", env.force_magnitude);
        read_real(e, "env", "theta_fail", env.theta_fail);
        read_real(e, "env", "x_fail", env.x_fail);
        read_real(e, "env", "init_frac_x", env.init_frac_x);
        read_real(e, "env", "init_frac_x_dot", env.init_frac_x_dot);
        read_real(e, "env", "init_frac_theta", env.init_frac_theta);
        read_real(e, "env", "init_frac_theta_dot", env.init_frac_theta_dot);
    }
    if (root.contains("strategy")) {
        const json& s = root.at("strategy");
        expect_keys(s, "strategy",
                    {"probe_evaluations", "probe_success_steps",
                     "continuation_evaluations", "max_restarts",
                     "max_total_evaluations", "max_cycle_steps",
                     "stochastic_prefix_steps", "weight_init_range"});
        StrategyConfig& st = cfg.setup.strategy;
        read_count(s, "strategy", "probe_evaluations", st.probe_evaluations);
        read_count(s, "strategy", "probe_success_steps", st.probe_success_steps);
        read_count(s, "strategy", "continuation_evaluations", st.continuation_evaluations);
        read_count(s, "strategy", "max_restarts", st.max_restarts);
        read_count(s, "strategy", "max_total_evaluations", st.max_total_evaluations);
        read_count(s, "strategy", "max_cycle_steps", st.max_cycle_steps);
        read_count(s, "strategy", "stochastic_prefix_steps", st.stochastic_prefix_steps);
        read_real(s, "strategy", "weight_init_range", st.weight_init_range);
    }
    if (root.contains("line_search")) {
        const json& l = root.at("line_search");
        expect_keys(l, "line_search", {"probes_per_direction", "step_magnitude"});
        read_count(l, "line_search", "probes_per_direction",
                   cfg.setup.line_search.probes_per_direction);
        read_real(l, "line_search", "step_magnitude",
                  cfg.setup.line_search.step_magnitude);
    }
    if (root.contains("polytope")) {
        const json& p = root.at("polytope");
        expect_keys(p, "polytope", {"alpha", "gamma", "beta", "epsilon"});
        read_real(p, "polytope", "alpha", cfg.setup.polytope.alpha);
        read_real(p, "polytope", "gamma", cfg.setup.polytope.gamma);
        read_real(p, "polytope", "beta", cfg.setup.polytope.beta);
        read_real(p, "polytope", "epsilon", cfg.setup.polytope.epsilon);
    }
    if (root.contains("evaluation")) {
        const json& e = root.at("evaluation");
        expect_keys(e, "evaluation", {"tests", "success_threshold"});
        read_count(e, "evaluation", "tests", cfg.evaluation.tests);
        read_count(e, "evaluation", "success_threshold",
                   cfg.evaluation.success_threshold);
    }

    validate(cfg.setup.topology);
    validate(cfg.setup.env);
    validate(cfg.setup.strategy);
    validate(cfg.setup.line_search);
    validate(cfg.setup.polytope);
    return cfg;
}

std::string run_config_json(const RunConfig& cfg) {
    return detail::run_config_tree(cfg).dump(2);
}

namespace detail {

nlohmann::json run_config_tree(const RunConfig& cfg) {
    const TrainingSetup& s = cfg.setup;
    json tree;
    tree["seed"] = cfg.master_seed;
    tree["experiments"] = cfg.n_experiments;
    tree["profile"] = cfg.profile;
    tree["topology"] = {{"inputs", s.topology.inputs},
                        {"hidden", s.topology.hidden},
                        {"outputs", s.topology.outputs},
                        {"shortcut_connections", s.topology.shortcut_connections}};
    tree["env"] = {{"dt", s.env.dt},
                   {"gravity", s.env.gravity},
                   {"cart_mass", s.env.cart_mass},
                   {"pole_mass", s.env.pole_mass},
                   {"pole_half_length", s.env.pole_half_length},
                   {"force_magnitude", s.env.force_magnitude},
                   {"theta_fail", s.env.theta_fail},
                   {"x_fail", s.env.x_fail},
                   {"init_frac_x", s.env.init_frac_x},
                   {"init_frac_x_dot", s.env.init_frac_x_dot},
                   {"init_frac_theta", s.env.init_frac_theta},
                   {"init_frac_theta_dot", s.env.init_frac_theta_dot}};
    tree["strategy"] = {{"probe_evaluations", s.strategy.probe_evaluations},
                        {"probe_success_steps", s.strategy.probe_success_steps},
                        {"continuation_evaluations", s.strategy.continuation_evaluations},
                        {"max_restarts", s.strategy.max_restarts},
                        {"max_total_evaluations", s.strategy.max_total_evaluations},
                        {"max_cycle_steps", s.strategy.max_cycle_steps},
                        {"stochastic_prefix_steps", s.strategy.stochastic_prefix_steps},
                        {"weight_init_range", s.strategy.weight_init_range}};
    tree["line_search"] = {{"probes_per_direction", s.line_search.probes_per_direction},
                           {"step_magnitude", s.line_search.step_magnitude}};
    tree["polytope"] = {{"alpha", s.polytope.alpha},
                        {"gamma", s.polytope.gamma},
                        {"beta", s.polytope.beta},
                        {"epsilon", s.polytope.epsilon}};
    tree["evaluation"] = {{"tests", cfg.evaluation.tests},
                          {"success_threshold", cfg.evaluation.success_threshold}};
    return tree;
}

}  // namespace detail

}  // namespace polyrl
