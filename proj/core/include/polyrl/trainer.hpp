#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polyrl/action_network.hpp"
#include "polyrl/cartpole.hpp"
#include "polyrl/line_search.hpp"
#include "polyrl/optimizer.hpp"
#include "polyrl/rng.hpp"
#include "polyrl/types.hpp"

namespace polyrl {

enum class CycleEnd { failure, reached_max_steps };

// Result of one episode: how many steps the controller survived. The step
// that trips the failure predicate is not counted; reaching the cap counts
// every step.
struct CycleOutcome {
    std::size_t steps_survived = 0;
    CycleEnd cause = CycleEnd::failure;
};

struct StrategyConfig {
    std::size_t probe_evaluations = 100;       // per-restart probe budget
    std::size_t probe_success_steps = 100;     // cycle length that justifies continuing
    std::size_t continuation_evaluations = 750;
    std::size_t max_restarts = 15;
    std::size_t max_total_evaluations = 15000;
    std::size_t max_cycle_steps = 120000;      // a cycle this long ends training
    std::size_t stochastic_prefix_steps = 10;  // probabilistic action selection early on
    double weight_init_range = 0.5;            // first vertex drawn in (-range, range)^n
};

void validate(const StrategyConfig& cfg);

struct RestartRecord {
    std::size_t evaluations = 0;
    std::size_t best_steps = 0;
};

struct TrainingReport {
    bool succeeded = false;
    std::size_t total_evaluations = 0;
    std::size_t restarts_used = 0;
    ParameterVector best_weights;
    std::size_t best_cycle_steps = 0;
    std::vector<RestartRecord> per_restart;
};

// Everything one training run needs. The line-search default here is the
// cheap two-probe variant: for the 35-parameter controller, simplex
// construction then costs 71 of the 100-evaluation probe budget.
struct TrainingSetup {
    NetworkTopology topology{};
    EnvConfig env{};
    StrategyConfig strategy{};
    LineSearchConfig line_search{.probes_per_direction = 2, .step_magnitude = 0.5};
    PolytopeConfig polytope{};
};

// One episode. Steps 1..stochastic_prefix_steps push with probability equal
// to the network output; afterwards the push direction is deterministic
// (y > 0.5 means +F). The stream supplies the initial state (4 draws) and
// one draw per stochastic step.
CycleOutcome evaluate_cycle(const NetworkTopology& topology,
                            const ParameterVector& params, RandomStream& rng,
                            const EnvConfig& env, const StrategyConfig& strategy);

// The minimized objective: the negated cycle length.
double cycle_objective(const NetworkTopology& topology, const ParameterVector& params,
                       RandomStream& rng, const EnvConfig& env,
                       const StrategyConfig& strategy);

// Episode runner the restart strategy is written against; tests substitute
// stubs, production wires evaluate_cycle.
using CycleFn = std::function<CycleOutcome(const ParameterVector&, RandomStream&)>;

// The restart meta-strategy. Each restart draws a fresh first vertex from
// its own substream of `master` (substream index = restart number), builds
// the simplex by line searches, probes for up to probe_evaluations cycles
// (construction included), and either continues the same simplex for
// continuation_evaluations more or gives up and restarts. Training stops
// the moment any cycle reaches max_cycle_steps, or when the restart or
// total-evaluation budget runs out.
TrainingReport run_training(RandomStream& master, const TrainingSetup& setup,
                            const CycleFn& cycle);
TrainingReport run_training(RandomStream& master, const TrainingSetup& setup);

}  // namespace polyrl
