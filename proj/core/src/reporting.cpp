#include "polyrl/reporting.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>

#include "run_config_json.hpp"

namespace polyrl {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

json report_tree(const TrainingReport& report) {
    json result;
    result["succeeded"] = report.succeeded;
    result["total_evaluations"] = report.total_evaluations;
    result["restarts_used"] = report.restarts_used;
    result["best_cycle_steps"] = report.best_cycle_steps;
    json restarts = json::array();
    for (const RestartRecord& r : report.per_restart)
        restarts.push_back({{"evaluations", r.evaluations}, {"best_steps", r.best_steps}});
    result["per_restart"] = restarts;
    return result;
}

}  // namespace

std::string iso8601_utc_now() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string training_report_text(const TrainingReport& report,
                                 std::string_view timestamp) {
    std::ostringstream out;
    out << "# polyrl training report (generated " << timestamp << ")\n";
    out << "succeeded: " << (report.succeeded ? "true" : "false") << '\n';
    out << "total_evaluations: " << report.total_evaluations << '\n';
    out << "restarts_used: " << report.restarts_used << '\n';
    out << "best_cycle_steps: " << report.best_cycle_steps << '\n';
    for (std::size_t i = 0; i < report.per_restart.size(); ++i) {
        const RestartRecord& r = report.per_restart[i];
        out << "restart " << i << ": evaluations=" << r.evaluations
            << " best_steps=" << r.best_steps << '\n';
    }
    return out.str();
}

std::string training_report_json(const RunConfig& cfg, const TrainingReport& report) {
    json tree;
    tree["config"] = detail::run_config_tree(cfg);
    tree["result"] = report_tree(report);
    return tree.dump(2) + "\n";
}

std::string runs_tsv(std::span<const TrainingReport> reports) {
    std::ostringstream out;
    out << "experiment\tsucceeded\tevaluations\trestarts\tbest_cycle_steps\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const TrainingReport& r = reports[i];
        out << i << '\t' << (r.succeeded ? "true" : "false") << '\t'
            << r.total_evaluations << '\t' << r.restarts_used << '\t'
            << r.best_cycle_steps << '\n';
    }
    return out.str();
}

std::string batch_summary_tsv(const BatchSummary& summary) {
    std::ostringstream out;
    out << "experiments\tsuccessful\tsuccess_rate\tbest\tworst\tmean\tsd\n";
    out << summary.n_experiments << '\t' << summary.n_successful << '\t'
        << format_double(summary.success_rate) << '\t';
    if (summary.evaluations) {
        const BatchStats& s = *summary.evaluations;
        out << format_double(s.best) << '\t' << format_double(s.worst) << '\t'
            << format_double(s.mean) << '\t' << format_double(s.sd) << '\n';
    } else {
        out << "-\t-\t-\t-\n";
    }
    return out.str();
}

std::string batch_summary_json(const RunConfig& cfg,
                               std::span<const TrainingReport> reports,
                               const BatchSummary& summary) {
    json tree;
    tree["config"] = detail::run_config_tree(cfg);
    json runs = json::array();
    for (const TrainingReport& r : reports)
        runs.push_back(report_tree(r));
    tree["runs"] = runs;
    json sum;
    sum["experiments"] = summary.n_experiments;
    sum["successful"] = summary.n_successful;
    sum["success_rate"] = summary.success_rate;
    if (summary.evaluations) {
        const BatchStats& s = *summary.evaluations;
        sum["evaluations"] = {{"best", s.best},
                              {"worst", s.worst},
                              {"mean", s.mean},
                              {"sd", s.sd}};
    }
    tree["summary"] = sum;
    return tree.dump(2) + "\n";
}

std::string generalization_tsv_header() {
    return "network\ttests\tsuccesses\tsuccess_percentage\tseed\n";
}

std::string generalization_tsv_row(std::string_view network_label,
                                   const GeneralizationResult& result,
                                   std::uint64_t seed) {
    std::ostringstream out;
    out << network_label << '\t' << result.tests_run << '\t' << result.successes
        << '\t' << format_double(result.success_percentage) << '\t' << seed << '\n';
    return out.str();
}

std::string generalization_json(const RunConfig& cfg, std::string_view weights_path,
                                const GeneralizationResult& result) {
    json tree;
    tree["config"] = detail::run_config_tree(cfg);
    tree["weights"] = std::string(weights_path);
    tree["result"] = {{"tests_run", result.tests_run},
                      {"successes", result.successes},
                      {"success_percentage", result.success_percentage}};
    return tree.dump(2) + "\n";
}

}  // namespace polyrl
