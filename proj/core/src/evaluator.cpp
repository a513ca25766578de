#include "polyrl/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyrl {

GeneralizationResult generalization_test(const NetworkTopology& topology,
                                         const ParameterVector& params,
                                         RandomStream& rng, const EnvConfig& env,
                                         std::size_t n_tests,
                                         std::size_t success_threshold) {
    GeneralizationResult result;
    result.tests_run = n_tests;
    if (n_tests == 0)
        return result;

    StrategyConfig episode;
    episode.stochastic_prefix_steps = 0;
    episode.max_cycle_steps = success_threshold;

    for (std::size_t i = 0; i < n_tests; ++i) {
        RandomStream test_stream = rng.substream(i);
        const CycleOutcome outcome =
            evaluate_cycle(topology, params, test_stream, env, episode);
        if (outcome.cause == CycleEnd::reached_max_steps)
            ++result.successes;
    }
    result.success_percentage =
        100.0 * static_cast<double>(result.successes) / static_cast<double>(n_tests);
    return result;
}

BatchStats batch_stats(std::span<const double> values, Orientation orientation) {
    if (values.empty())
        throw std::invalid_argument("batch_stats: empty value list");

    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    BatchStats stats;
    stats.best = orientation == Orientation::lower_is_better ? *lo : *hi;
    stats.worst = orientation == Orientation::lower_is_better ? *hi : *lo;

    double sum = 0.0;
    for (double v : values)
        sum += v;
    stats.mean = sum / static_cast<double>(values.size());

    double sq = 0.0;
    for (double v : values)
        sq += (v - stats.mean) * (v - stats.mean);
    stats.sd = std::sqrt(sq / static_cast<double>(values.size()));
    return stats;
}

}  // namespace polyrl
