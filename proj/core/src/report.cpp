#include "flowgraph/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "flowgraph/derived.hpp"
#include "flowgraph/error.hpp"

namespace flowgraph {
namespace {

using nlohmann::json;

std::string num(double v, const char* fmt = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string rate(const RateValue& r) { return r.defined ? num(r.value, "%.4f") : "n/a"; }

json rate_json(const RateValue& r) {
    return json{{"value", r.value}, {"defined", r.defined}};
}

json meta_json(const MetaMap& meta) {
    json j = json::object();
    for (const auto& [key, value] : meta) j[key] = value;
    return j;
}

json confusion_json(const ConfusionCounts& c) {
    return json{{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}};
}

json evaluation_json_body(const EvaluationReport& r) {
    json j;
    j["confusion"] = confusion_json(r.confusion);
    j["f1_benign"] = rate_json(r.f1_benign);
    j["f1_malicious"] = rate_json(r.f1_malicious);
    j["f1_weighted"] = rate_json(r.f1_weighted);
    j["fpr"] = rate_json(r.false_positive_rate);
    j["fnr"] = rate_json(r.false_negative_rate);
    j["fn_by_attack"] = r.fn_by_attack;
    j["support_vectors"] = r.support_vector_count;
    json features = json::array();
    for (auto idx : r.selected_features)
        features.push_back({{"index", idx}, {"name", feature_display_name(idx)}});
    j["selected_features"] = features;
    j["gamma"] = r.gamma;
    j["c"] = r.c;
    return j;
}

}  // namespace

std::string feature_display_name(std::size_t index) {
    if (index >= kDerivedFeatureNames.size()) throw Error("feature index out of range");
    return std::string(kDerivedFeatureNames[index]);
}

std::string training_report_text(const TrainingOutcome& o) {
    std::ostringstream out;
    out << "Training summary\n";
    out << "  training rows: " << o.training_rows << "  (seed " << o.seed << ")\n";
    out << "Feature selection\n";
    for (std::size_t i = 0; i < o.selection.selected.size(); ++i)
        out << "  step " << i + 1 << ": + " << feature_display_name(o.selection.selected[i])
            << "  (cv F1 " << num(o.selection.step_f1[i], "%.4f") << ")\n";
    if (!o.selection.selected.empty())
        out << "  most significant: " << feature_display_name(o.selection.selected.front()) << "\n";
    out << "Hyperparameter search\n";
    out << "  best C " << num(o.grid.best_c) << ", gamma " << num(o.grid.best_gamma) << "  (cv F1 "
        << num(o.grid.best_f1, "%.4f") << ")\n";
    out << "Robustness (" << o.robust.fold_f1.size() << "-fold)\n";
    out << "  F1 avg " << num(o.robust.mean_f1, "%.4f") << ", F1 dev. std "
        << num(o.robust.std_f1, "%.4f") << ", avg support vectors "
        << num(o.robust.mean_support_vectors, "%.1f") << "\n";
    out << "Final model\n";
    out << "  support vectors: " << o.model.support_vectors.rows << "\n";
    return out.str();
}

std::string training_report_json(const TrainingOutcome& o, const MetaMap& meta) {
    json j;
    j["kind"] = "training-report";
    j["meta"] = meta_json(meta);
    j["seed"] = o.seed;
    j["training_rows"] = o.training_rows;
    json sel;
    json order = json::array();
    for (std::size_t i = 0; i < o.selection.selected.size(); ++i)
        order.push_back({{"index", o.selection.selected[i]},
                         {"name", feature_display_name(o.selection.selected[i])},
                         {"cv_f1", o.selection.step_f1[i]}});
    sel["order"] = order;
    sel["count"] = o.selection.selected.size();
    if (!o.selection.selected.empty())
        sel["most_significant"] = feature_display_name(o.selection.selected.front());
    j["feature_selection"] = sel;
    json cells = json::array();
    for (const auto& cell : o.grid.table)
        cells.push_back({{"c", cell.c}, {"gamma", cell.gamma}, {"cv_f1", cell.mean_f1}});
    j["grid"] = {{"cells", cells},
                 {"best_c", o.grid.best_c},
                 {"best_gamma", o.grid.best_gamma},
                 {"best_cv_f1", o.grid.best_f1}};
    j["robustness"] = {{"folds", o.robust.fold_f1.size()},
                       {"mean_f1", o.robust.mean_f1},
                       {"std_f1", o.robust.std_f1},
                       {"mean_support_vectors", o.robust.mean_support_vectors},
                       {"fold_f1", o.robust.fold_f1},
                       {"fold_support_vectors", o.robust.fold_support_vectors}};
    j["support_vectors"] = o.model.support_vectors.rows;
    return j.dump(2);
}

std::string evaluation_report_text(const EvaluationReport& r) {
    std::ostringstream out;
    out << "Evaluation\n";
    const auto& c = r.confusion;
    out << "  records: " << c.total() << "  (benign " << c.tn + c.fp << ", malicious "
        << c.tp + c.fn << ")\n";
    out << "  confusion: TP " << c.tp << "  FP " << c.fp << "  TN " << c.tn << "  FN " << c.fn
        << "\n";
    out << "  F1 benign " << rate(r.f1_benign) << ", F1 malicious " << rate(r.f1_malicious)
        << ", F1 weighted avg " << rate(r.f1_weighted) << "\n";
    out << "  FPR " << rate(r.false_positive_rate) << ", FNR " << rate(r.false_negative_rate)
        << "\n";
    out << "  support vectors: " << r.support_vector_count << "; C " << num(r.c) << ", gamma "
        << num(r.gamma) << "\n";
    if (!r.selected_features.empty()) {
        out << "  features:";
        for (auto idx : r.selected_features) out << ' ' << feature_display_name(idx);
        out << "\n";
    }
    if (!r.fn_by_attack.empty()) {
        out << "  missed attacks by label:\n";
        for (const auto& [label, count] : r.fn_by_attack)
            out << "    " << label << ": " << count << "\n";
    }
    return out.str();
}

std::string evaluation_report_json(const EvaluationReport& r, const MetaMap& meta) {
    json j = evaluation_json_body(r);
    j["kind"] = "evaluation-report";
    j["meta"] = meta_json(meta);
    return j.dump(2);
}

std::string comparison_text(const std::vector<CellSummary>& cells) {
    std::ostringstream out;
    auto row = [&](const std::string& name, auto&& value_of) {
        out << "  " << name;
        for (const auto& cell : cells) out << " | " << value_of(cell);
        out << "\n";
    };
    out << "Pipeline comparison\n";
    out << "  cell";
    for (const auto& cell : cells) out << " | sigma=" << cell.sigma_label << " " << cell.policy;
    out << "\n";
    out << "Feature selection\n";
    row("# features", [](const CellSummary& c) { return std::to_string(c.feature_count); });
    row("most significant", [](const CellSummary& c) { return c.most_significant; });
    out << "Hyperparameter tuning\n";
    row("C", [](const CellSummary& c) { return num(c.best_c); });
    row("gamma", [](const CellSummary& c) { return num(c.best_gamma); });
    out << "Model robustness\n";
    row("F1 avg", [](const CellSummary& c) { return num(c.robust_mean_f1, "%.4f"); });
    row("F1 dev. std", [](const CellSummary& c) { return num(c.robust_std_f1, "%.4f"); });
    row("support vectors", [](const CellSummary& c) { return num(c.robust_mean_svs, "%.1f"); });
    out << "Test performance\n";
    row("F1 weighted avg", [](const CellSummary& c) { return rate(c.test.f1_weighted); });
    row("FPR", [](const CellSummary& c) { return rate(c.test.false_positive_rate); });
    row("FNR", [](const CellSummary& c) { return rate(c.test.false_negative_rate); });
    row("FN errors", [](const CellSummary& c) { return std::to_string(c.test.confusion.fn); });
    row("FP errors", [](const CellSummary& c) { return std::to_string(c.test.confusion.fp); });
    return out.str();
}

std::string comparison_json(const std::vector<CellSummary>& cells, const MetaMap& meta) {
    json arr = json::array();
    for (const auto& cell : cells) {
        json j;
        j["sigma"] = cell.sigma_label;
        j["policy"] = cell.policy;
        j["feature_count"] = cell.feature_count;
        j["most_significant"] = cell.most_significant;
        j["best_c"] = cell.best_c;
        j["best_gamma"] = cell.best_gamma;
        j["robust_mean_f1"] = cell.robust_mean_f1;
        j["robust_std_f1"] = cell.robust_std_f1;
        j["robust_mean_support_vectors"] = cell.robust_mean_svs;
        j["support_vectors"] = cell.support_vectors;
        j["test"] = evaluation_json_body(cell.test);
        arr.push_back(j);
    }
    json root;
    root["kind"] = "pipeline-comparison";
    root["meta"] = meta_json(meta);
    root["cells"] = arr;
    return root.dump(2);
}

}  // namespace flowgraph
