// Command-line driver: train one controller, run an experiment batch, or
// measure generalization of a saved network.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "polyrl/action_network.hpp"
#include "polyrl/config_io.hpp"
#include "polyrl/evaluator.hpp"
#include "polyrl/experiment.hpp"
#include "polyrl/reporting.hpp"
#include "polyrl/rng.hpp"
#include "polyrl/trainer.hpp"

namespace fs = std::filesystem;
using namespace polyrl;

namespace {

struct CliOptions {
    std::string config_path;
    std::string profile;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t experiments = 0;
    bool experiments_given = false;
    std::string out_dir = "out";
    std::size_t jobs = 0;
    std::string weights_path;
};

RunConfig resolve_config(const CliOptions& opts) {
    RunConfig cfg = default_run_config();
    if (!opts.profile.empty())
        apply_profile(cfg, opts.profile);
    if (!opts.config_path.empty())
        cfg = load_run_config(opts.config_path, std::move(cfg));
    if (opts.seed_given)
        cfg.master_seed = opts.seed;
    if (opts.experiments_given)
        cfg.n_experiments = opts.experiments;
    return cfg;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

void write_run_artifacts(const fs::path& dir, const RunConfig& cfg,
                         const TrainingReport& report) {
    fs::create_directories(dir);
    write_file(dir / "report.txt", training_report_text(report, iso8601_utc_now()));
    write_file(dir / "report.json", training_report_json(cfg, report));
    if (!report.best_weights.empty())
        save_weights(dir / "weights.txt", cfg.setup.topology, report.best_weights);
}

int cmd_train(const CliOptions& opts) {
    const RunConfig cfg = resolve_config(opts);
    RandomStream master(cfg.master_seed);
    RandomStream stream = master.substream(0);  // = experiment index 0
    const TrainingReport report = run_training(stream, cfg.setup);

    write_run_artifacts(opts.out_dir, cfg, report);
    std::cout << training_report_text(report, iso8601_utc_now());
    std::cout << "artifacts: " << opts.out_dir << '\n';
    return report.succeeded ? 0 : 1;
}

int cmd_experiment(const CliOptions& opts) {
    const RunConfig cfg = resolve_config(opts);
    const std::size_t jobs =
        opts.jobs > 0 ? opts.jobs
                      : std::max(1u, std::thread::hardware_concurrency());

    const std::vector<TrainingReport> reports = run_experiment_batch(
        cfg.master_seed, cfg.n_experiments, jobs,
        [&cfg](std::size_t, RandomStream& stream) {
            return run_training(stream, cfg.setup);
        });

    const fs::path out_dir(opts.out_dir);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        char name[16];
        std::snprintf(name, sizeof(name), "run_%02zu", i);
        write_run_artifacts(out_dir / name, cfg, reports[i]);
    }

    const BatchSummary summary = summarize_batch(reports);
    fs::create_directories(out_dir);
    write_file(out_dir / "runs.tsv", runs_tsv(reports));
    write_file(out_dir / "summary.tsv", batch_summary_tsv(summary));
    write_file(out_dir / "summary.json", batch_summary_json(cfg, reports, summary));

    std::cout << runs_tsv(reports) << '\n' << batch_summary_tsv(summary);
    std::cout << "artifacts: " << opts.out_dir << '\n';
    return 0;
}

int cmd_evaluate(const CliOptions& opts) {
    const RunConfig cfg = resolve_config(opts);
    const LoadedNetwork net = load_weights(opts.weights_path);

    RandomStream master(cfg.master_seed);
    const GeneralizationResult result =
        generalization_test(net.topology, net.params, master, cfg.setup.env,
                            cfg.evaluation.tests, cfg.evaluation.success_threshold);

    const fs::path out_dir(opts.out_dir);
    fs::create_directories(out_dir);
    const fs::path table = out_dir / "generalization.tsv";
    const bool fresh = !fs::exists(table);
    std::ofstream append(table, std::ios::app);
    if (!append)
        throw std::runtime_error("cannot open " + table.string() + " for writing");
    if (fresh)
        append << generalization_tsv_header();
    append << generalization_tsv_row(opts.weights_path, result, cfg.master_seed);
    append.flush();
    if (!append)
        throw std::runtime_error("failed writing " + table.string());

    write_file(out_dir / "evaluation.json",
               generalization_json(cfg, opts.weights_path, result));

    std::cout << "tests_run: " << result.tests_run << '\n'
              << "successes: " << result.successes << '\n'
              << "success_percentage: " << result.success_percentage << '\n';
    return 0;
}

void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file");
    cmd->add_option("--seed", opts.seed, "master seed")->each([&opts](const std::string&) {
        opts.seed_given = true;
    });
    cmd->add_option("--profile", opts.profile, "desk or paper scale")
        ->check(CLI::IsMember({"desk", "paper"}));
    cmd->add_option("--out", opts.out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivative-free policy search for cart-pole balancing "
                 "(Nelder-Mead polytope with random restarts)"};
    app.require_subcommand(1);

    CliOptions opts;

    CLI::App* train = app.add_subcommand("train", "train one controller");
    add_common_options(train, opts);

    CLI::App* experiment =
        app.add_subcommand("experiment", "run a batch of independent trainings");
    add_common_options(experiment, opts);
    experiment->add_option("--experiments", opts.experiments, "number of runs")
        ->each([&opts](const std::string&) { opts.experiments_given = true; });
    experiment->add_option("--jobs", opts.jobs, "worker threads (default: all cores)");

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "generalization test of a saved network");
    add_common_options(evaluate, opts);
    evaluate->add_option("--weights", opts.weights_path, "weight file to load")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed())
            return cmd_train(opts);
        if (experiment->parsed())
            return cmd_experiment(opts);
        return cmd_evaluate(opts);
    } catch (const std::exception& e) {
        std::cerr << "polyrl: " << e.what() << '\n';
        return 2;
    }
}
