// Text and JSON rendering of training, evaluation, and pipeline-comparison
// results. JSON artifacts carry every count alongside every rate so the rates
// can be recomputed and checked from the file alone; no timestamps are
// embedded, so identical runs produce identical bytes.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowgraph/evaluation.hpp"
#include "flowgraph/trainer.hpp"

namespace flowgraph {

// Ordered run metadata (seed, digests, parameters) attached to JSON outputs.
using MetaMap = std::vector<std::pair<std::string, std::string>>;

std::string feature_display_name(std::size_t index);  // e.g. 6 -> "src_cc1"

std::string training_report_text(const TrainingOutcome& outcome);
std::string training_report_json(const TrainingOutcome& outcome, const MetaMap& meta = {});

std::string evaluation_report_text(const EvaluationReport& report);
std::string evaluation_report_json(const EvaluationReport& report, const MetaMap& meta = {});

// One pipeline cell = one (sigma, policy) combination run end to end.
struct CellSummary {
    std::string sigma_label;  // "1", "5", "N", ...
    std::string policy;       // "unweighted" / "weighted" / "mixed"
    std::size_t feature_count = 0;
    std::string most_significant;
    double best_c = 0.0;
    double best_gamma = 0.0;
    double robust_mean_f1 = 0.0;
    double robust_std_f1 = 0.0;
    double robust_mean_svs = 0.0;
    std::size_t support_vectors = 0;
    EvaluationReport test;
};

// Side-by-side table over all cells: selection, tuning, robustness, and
// held-out test blocks.
std::string comparison_text(const std::vector<CellSummary>& cells);
std::string comparison_json(const std::vector<CellSummary>& cells, const MetaMap& meta = {});

}  // namespace flowgraph
