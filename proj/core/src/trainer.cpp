#include "polyrl/trainer.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrl {

void validate(const StrategyConfig& cfg) {
    if (cfg.probe_evaluations == 0 || cfg.continuation_evaluations == 0 ||
        cfg.max_restarts == 0 || cfg.max_total_evaluations == 0)
        throw std::invalid_argument("strategy: budgets must be positive");
    if (!(cfg.weight_init_range > 0.0))
        throw std::invalid_argument("strategy: weight_init_range must be > 0");
}

CycleOutcome evaluate_cycle(const NetworkTopology& topology,
                            const ParameterVector& params, RandomStream& rng,
                            const EnvConfig& env, const StrategyConfig& strategy) {
    CartPoleState state = random_initial_state(rng, env);
    std::size_t steps = 0;
    while (steps < strategy.max_cycle_steps) {
        const auto inputs = scale_state(state, env);
        const double y = forward(topology, params, inputs);
        bool push_right;
        if (steps < strategy.stochastic_prefix_steps)
            push_right = rng.uniform01() < y;
        else
            push_right = y > 0.5;
        const double force = push_right ? env.force_magnitude : -env.force_magnitude;
        state = step(state, force, env);
        if (is_failure(state, env))
            return {steps, CycleEnd::failure};
        ++steps;
    }
    return {steps, CycleEnd::reached_max_steps};
}

double cycle_objective(const NetworkTopology& topology, const ParameterVector& params,
                       RandomStream& rng, const EnvConfig& env,
                       const StrategyConfig& strategy) {
    return -static_cast<double>(
        evaluate_cycle(topology, params, rng, env, strategy).steps_survived);
}

TrainingReport run_training(RandomStream& master, const TrainingSetup& setup,
                            const CycleFn& cycle) {
    validate(setup.strategy);
    validate(setup.line_search);
    validate(setup.polytope);
    validate(setup.env);
    const StrategyConfig& strategy = setup.strategy;
    const std::size_t n = parameter_count(setup.topology);

    TrainingReport report;
    bool success = false;

    for (std::size_t restart = 0; restart < strategy.max_restarts && !success;
         ++restart) {
        if (report.total_evaluations >= strategy.max_total_evaluations)
            break;

        RandomStream stream = master.substream(restart);
        ParameterVector first(n);
        for (double& w : first)
            w = stream.uniform(-strategy.weight_init_range, strategy.weight_init_range);

        std::size_t restart_evaluations = 0;
        std::size_t restart_best_steps = 0;

        Objective objective = [&](const ParameterVector& p) {
            const CycleOutcome outcome = cycle(p, stream);
            ++report.total_evaluations;
            ++restart_evaluations;
            restart_best_steps = std::max(restart_best_steps, outcome.steps_survived);
            if (outcome.steps_survived > report.best_cycle_steps ||
                report.best_weights.empty()) {
                report.best_cycle_steps = outcome.steps_survived;
                report.best_weights = p;
            }
            if (outcome.cause == CycleEnd::reached_max_steps)
                success = true;
            return -static_cast<double>(outcome.steps_survived);
        };
        const StopPredicate stop = [&] { return success; };

        InitialSimplex initial = build_initial_simplex(first, setup.line_search, objective);
        Simplex simplex = std::move(initial.simplex);

        auto remaining_total = [&]() -> std::size_t {
            return report.total_evaluations >= strategy.max_total_evaluations
                       ? 0
                       : strategy.max_total_evaluations - report.total_evaluations;
        };

        // probe: construction evaluations count against the probe budget
        if (!success) {
            const std::size_t probe_left =
                restart_evaluations >= strategy.probe_evaluations
                    ? 0
                    : strategy.probe_evaluations - restart_evaluations;
            const std::size_t budget = std::min(probe_left, remaining_total());
            if (budget > 0) {
                PolytopeConfig cfg = setup.polytope;
                cfg.max_evaluations = budget;
                run(simplex, cfg, objective, stop);
            }
        }

        // continue the same simplex only if some cycle of this restart
        // outlasted the probe threshold
        if (!success && restart_best_steps > strategy.probe_success_steps) {
            const std::size_t budget =
                std::min(strategy.continuation_evaluations, remaining_total());
            if (budget > 0) {
                PolytopeConfig cfg = setup.polytope;
                cfg.max_evaluations = budget;
                run(simplex, cfg, objective, stop);
            }
        }

        report.per_restart.push_back({restart_evaluations, restart_best_steps});
        ++report.restarts_used;
    }

    report.succeeded = success;
    return report;
}

TrainingReport run_training(RandomStream& master, const TrainingSetup& setup) {
    return run_training(master, setup,
                        [&setup](const ParameterVector& p, RandomStream& rng) {
                            return evaluate_cycle(setup.topology, p, rng, setup.env,
                                                  setup.strategy);
                        });
}

}  // namespace polyrl
