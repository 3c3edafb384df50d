// Soft-margin SVM with RBF kernel, trained by sequential pairwise (SMO-style)
// optimization of the dual with max-violating-pair working-set selection.
// Training is deterministic: no randomized selection, fixed tie-breaks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flowgraph/matrix.hpp"
#include "flowgraph/scaler.hpp"

namespace flowgraph {

// e^{-gamma * ||x - y||^2}. Throws Error on dimension mismatch.
double rbf(const std::vector<double>& x, const std::vector<double>& y, double gamma);
double rbf(const double* x, const double* y, std::size_t dim, double gamma);

struct TrainOptions {
    double c = 1.0;
    double gamma = 1.0;
    double tol = 1e-3;       // KKT tolerance; solver stops at violation gap <= tol
    int max_passes = 10;     // scales the safety cap on solver iterations
    std::size_t cache_bytes = std::size_t{64} << 20;  // kernel row cache budget
    int workers = 1;
};

struct SvmModel {
    Matrix support_vectors;          // rows live in the model's input space
    std::vector<double> dual_coefs;  // alpha_i * y_i, same length as SV rows
    double bias = 0.0;
    double gamma = 0.0;
    double c = 0.0;
    // Raw-row adapters: standardize the full-width row, then gather the
    // selected columns. Both may be empty, meaning identity.
    Scaler scaler;
    std::vector<std::size_t> feature_mask;

    bool operator==(const SvmModel&) const = default;
};

struct TrainDiagnostics {
    std::vector<double> alpha;  // full dual solution, one entry per training row
    double bias = 0.0;
    std::int64_t iterations = 0;
    double final_gap = 0.0;
};

// Solves the dual on rows already in model space. Requires both labels
// present, finite features, c > 0, gamma > 0. On return every training point
// satisfies the KKT conditions within tol; only alpha > 1e-12 rows are stored.
SvmModel train(const Matrix& x, const std::vector<int>& y, const TrainOptions& opts,
               TrainDiagnostics* diag = nullptr);

// Decision values / labels for rows in model space (selected columns, scaled).
double decision_value(const SvmModel& m, const double* row);
std::vector<double> decision_values(const SvmModel& m, const Matrix& x);
// Sign of the decision value; exactly 0 predicts +1 (malicious).
int predict_one(const SvmModel& m, const double* row);
std::vector<int> predict(const SvmModel& m, const Matrix& x);

// Same, but for full-width raw rows: applies the stored scaler and feature
// mask first.
std::vector<double> decision_values_raw(const SvmModel& m, const Matrix& raw);
std::vector<int> predict_raw(const SvmModel& m, const Matrix& raw);
Matrix project_raw(const SvmModel& m, const Matrix& raw);

// JSON model container; round-trip preserves decision values bit-for-bit.
std::string model_to_json(const SvmModel& m);
SvmModel model_from_json(const std::string& text);
void save_model(const SvmModel& m, const std::string& path);
SvmModel load_model(const std::string& path);

}  // namespace flowgraph
