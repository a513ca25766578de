#include "polyrl/experiment.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace polyrl {

std::vector<TrainingReport> run_experiment_batch(std::uint64_t master_seed,
                                                 std::size_t n_experiments,
                                                 std::size_t jobs,
                                                 const ExperimentRunner& runner) {
    std::vector<TrainingReport> reports(n_experiments);
    if (n_experiments == 0)
        return reports;

    jobs = std::max<std::size_t>(1, std::min(jobs, n_experiments));
    const RandomStream master(master_seed);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_experiments)
                return;
            try {
                RandomStream stream = master.substream(i);
                reports[i] = runner(i, stream);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return reports;
}

BatchSummary summarize_batch(std::span<const TrainingReport> reports) {
    BatchSummary summary;
    summary.n_experiments = reports.size();

    std::vector<double> evaluations;
    for (const TrainingReport& r : reports)
        if (r.succeeded) {
            ++summary.n_successful;
            evaluations.push_back(static_cast<double>(r.total_evaluations));
        }
    if (!reports.empty())
        summary.success_rate = 100.0 * static_cast<double>(summary.n_successful) /
                               static_cast<double>(reports.size());
    if (!evaluations.empty())
        summary.evaluations = batch_stats(evaluations, Orientation::lower_is_better);
    return summary;
}

}  // namespace polyrl
