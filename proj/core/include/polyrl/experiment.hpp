#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polyrl/evaluator.hpp"
#include "polyrl/rng.hpp"
#include "polyrl/trainer.hpp"

namespace polyrl {

// Runs one experiment; the stream passed in is substream(index) of the
// batch master seed, so results are independent of execution order.
using ExperimentRunner =
    std::function<TrainingReport(std::size_t index, RandomStream& stream)>;

// Execute n_experiments independent runs across up to `jobs` worker
// threads. Results are keyed by experiment index; the returned vector is
// identical whatever the schedule.
std::vector<TrainingReport> run_experiment_batch(std::uint64_t master_seed,
                                                 std::size_t n_experiments,
                                                 std::size_t jobs,
                                                 const ExperimentRunner& runner);

struct BatchSummary {
    std::size_t n_experiments = 0;
    std::size_t n_successful = 0;
    double success_rate = 0.0;  // percent
    // evaluation-count stats over the successful runs only
    std::optional<BatchStats> evaluations;
};

BatchSummary summarize_batch(std::span<const TrainingReport> reports);

}  // namespace polyrl
