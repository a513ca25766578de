#pragma once

#include <cstddef>
#include <span>

#include "polyrl/trainer.hpp"

namespace polyrl {

struct GeneralizationResult {
    std::size_t tests_run = 0;
    std::size_t successes = 0;
    double success_percentage = 0.0;  // 100 * successes / tests_run
};

// Run n_tests fully deterministic episodes (no stochastic prefix) from
// random initial states; a test succeeds if the controller survives at
// least success_threshold steps (episodes are cut off there). Test i draws
// from rng.substream(i), so the result does not depend on evaluation order.
GeneralizationResult generalization_test(const NetworkTopology& topology,
                                         const ParameterVector& params,
                                         RandomStream& rng, const EnvConfig& env,
                                         std::size_t n_tests = 5000,
                                         std::size_t success_threshold = 1000);

enum class Orientation { lower_is_better, higher_is_better };

// Standard deviation is the population form (divide by N).
struct BatchStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double sd = 0.0;
};

// Summary row over a batch of scalar results; throws on an empty list.
BatchStats batch_stats(std::span<const double> values, Orientation orientation);

}  // namespace polyrl
