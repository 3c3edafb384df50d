// Confusion-matrix bookkeeping and the headline rates. Positive class is
// malicious (+1); FPR is benign traffic flagged, FNR is attacks missed.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flowgraph/svm.hpp"

namespace flowgraph {

struct DerivedDataset;

struct ConfusionCounts {
    std::int64_t tp = 0;  // malicious predicted malicious
    std::int64_t fp = 0;  // benign predicted malicious
    std::int64_t tn = 0;  // benign predicted benign
    std::int64_t fn = 0;  // malicious predicted benign

    std::int64_t total() const { return tp + fp + tn + fn; }
    bool operator==(const ConfusionCounts&) const = default;
};

// A rate whose denominator can be empty; degenerate cases report 0 with the
// flag cleared.
struct RateValue {
    double value = 0.0;
    bool defined = false;
};

RateValue precision_of(std::int64_t tp, std::int64_t fp);
RateValue recall_of(std::int64_t tp, std::int64_t fn);
// Harmonic mean of precision and recall; 0 (undefined) when both are empty.
RateValue f1_of(std::int64_t tp, std::int64_t fp, std::int64_t fn);

RateValue f1_positive(const ConfusionCounts& c);  // malicious as target class
RateValue f1_negative(const ConfusionCounts& c);  // benign as target class
// Per-class F1 weighted by class support.
RateValue weighted_f1(const ConfusionCounts& c);
RateValue fpr(const ConfusionCounts& c);  // FP / (FP + TN)
RateValue fnr(const ConfusionCounts& c);  // FN / (FN + TP)

ConfusionCounts tally(const std::vector<int>& truth, const std::vector<int>& predicted);

struct EvaluationReport {
    ConfusionCounts confusion;
    RateValue f1_benign;
    RateValue f1_malicious;
    RateValue f1_weighted;
    RateValue false_positive_rate;
    RateValue false_negative_rate;
    std::map<std::string, std::int64_t> fn_by_attack;  // missed attacks per label
    std::size_t support_vector_count = 0;
    std::vector<std::size_t> selected_features;
    double gamma = 0.0;
    double c = 0.0;
};

// Scores the model on a derived dataset (raw 16-wide features; the model
// applies its own scaler and feature mask).
EvaluationReport evaluate(const SvmModel& model, const DerivedDataset& test);

}  // namespace flowgraph
