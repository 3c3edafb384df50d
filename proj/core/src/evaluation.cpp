#include "flowgraph/evaluation.hpp"

#include "flowgraph/derived.hpp"
#include "flowgraph/error.hpp"

namespace flowgraph {
namespace {

RateValue ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) return {0.0, false};
    return {static_cast<double>(num) / static_cast<double>(den), true};
}

}  // namespace

RateValue precision_of(std::int64_t tp, std::int64_t fp) { return ratio(tp, tp + fp); }
RateValue recall_of(std::int64_t tp, std::int64_t fn) { return ratio(tp, tp + fn); }

RateValue f1_of(std::int64_t tp, std::int64_t fp, std::int64_t fn) {
    return ratio(2 * tp, 2 * tp + fp + fn);
}

RateValue f1_positive(const ConfusionCounts& c) { return f1_of(c.tp, c.fp, c.fn); }

RateValue f1_negative(const ConfusionCounts& c) {
    // Benign as the target class: its misses are the false alarms and vice
    // versa.
    return f1_of(c.tn, c.fn, c.fp);
}

RateValue weighted_f1(const ConfusionCounts& c) {
    std::int64_t benign = c.tn + c.fp;
    std::int64_t malicious = c.tp + c.fn;
    if (benign + malicious == 0) return {0.0, false};
    double sum = static_cast<double>(benign) * f1_negative(c).value +
                 static_cast<double>(malicious) * f1_positive(c).value;
    return {sum / static_cast<double>(benign + malicious), true};
}

RateValue fpr(const ConfusionCounts& c) { return ratio(c.fp, c.fp + c.tn); }
RateValue fnr(const ConfusionCounts& c) { return ratio(c.fn, c.fn + c.tp); }

ConfusionCounts tally(const std::vector<int>& truth, const std::vector<int>& predicted) {
    if (truth.size() != predicted.size()) throw Error("truth/prediction size mismatch");
    ConfusionCounts c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == 1)
            (predicted[i] == 1 ? c.tp : c.fn)++;
        else
            (predicted[i] == 1 ? c.fp : c.tn)++;
    }
    return c;
}

EvaluationReport evaluate(const SvmModel& model, const DerivedDataset& test) {
    auto features = feature_matrix(test);
    auto truth = label_vector(test);
    auto predicted = predict_raw(model, features);

    EvaluationReport r;
    r.confusion = tally(truth, predicted);
    r.f1_benign = f1_negative(r.confusion);
    r.f1_malicious = f1_positive(r.confusion);
    r.f1_weighted = weighted_f1(r.confusion);
    r.false_positive_rate = fpr(r.confusion);
    r.false_negative_rate = fnr(r.confusion);
    for (std::size_t i = 0; i < test.size(); ++i)
        if (truth[i] == 1 && predicted[i] == -1) r.fn_by_attack[test.records[i].label]++;
    r.support_vector_count = model.support_vectors.rows;
    r.selected_features = model.feature_mask;
    r.gamma = model.gamma;
    r.c = model.c;
    return r;
}

}  // namespace flowgraph
