#pragma once

#include <span>
#include <string>
#include <string_view>

#include "polyrl/config_io.hpp"
#include "polyrl/evaluator.hpp"
#include "polyrl/experiment.hpp"
#include "polyrl/trainer.hpp"

namespace polyrl {

// Renderers return the file contents as strings; callers own the I/O.
// Every renderer is deterministic for a fixed input; the timestamp passed
// to the text report is the single non-reproducible element and stays on
// its own header line.

std::string iso8601_utc_now();

// Header-and-key-value record for one training run.
std::string training_report_text(const TrainingReport& report,
                                 std::string_view timestamp);

// Machine-readable record: config echo plus the full result.
std::string training_report_json(const RunConfig& cfg, const TrainingReport& report);

// One row per experiment, tab-delimited.
std::string runs_tsv(std::span<const TrainingReport> reports);

// Single summary row over a batch: success rate plus the evaluation-count
// best/worst/mean/sd over the successful runs.
std::string batch_summary_tsv(const BatchSummary& summary);

std::string batch_summary_json(const RunConfig& cfg,
                               std::span<const TrainingReport> reports,
                               const BatchSummary& summary);

std::string generalization_tsv_header();
std::string generalization_tsv_row(std::string_view network_label,
                                   const GeneralizationResult& result,
                                   std::uint64_t seed);

std::string generalization_json(const RunConfig& cfg, std::string_view weights_path,
                                const GeneralizationResult& result);

}  // namespace polyrl
