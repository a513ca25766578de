#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "polyrl/trainer.hpp"

namespace polyrl {

struct EvaluationConfig {
    std::size_t tests = 5000;
    std::size_t success_threshold = 1000;
};

// Fully resolved configuration of one run; echoed verbatim into every
// machine-readable record so runs are self-describing.
struct RunConfig {
    TrainingSetup setup{};
    EvaluationConfig evaluation{};
    std::uint64_t master_seed = 0;
    std::size_t n_experiments = 10;
    std::string profile = "desk";
};

// desk: 10000-step success criterion, 10 experiments (minutes on a desktop)
// paper: 120000-step criterion, 50 experiments
void apply_profile(RunConfig& cfg, std::string_view name);

RunConfig default_run_config();

// Overlay a JSON config file onto `base`. Every key is optional; unknown
// keys are rejected so typos cannot silently fall back to defaults.
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base);

// Deterministic pretty-printed echo of the full configuration.
std::string run_config_json(const RunConfig& cfg);

}  // namespace polyrl
