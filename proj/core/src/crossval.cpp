#include "flowgraph/crossval.hpp"

#include <random>

#include "flowgraph/error.hpp"
#include "flowgraph/evaluation.hpp"
#include "flowgraph/rng.hpp"

namespace flowgraph {

std::vector<std::size_t> CvPlan::test_indices(int f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i)
        if (fold[i] == f) out.push_back(i);
    return out;
}

std::vector<std::size_t> CvPlan::train_indices(int f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i)
        if (fold[i] != f) out.push_back(i);
    return out;
}

CvPlan kfold(const std::vector<int>& labels, int k, std::uint64_t seed) {
    if (k < 2) throw Error("fold count must be at least 2");
    std::vector<std::size_t> neg, pos;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == -1) neg.push_back(i);
        else if (labels[i] == 1) pos.push_back(i);
        else throw Error("labels must be -1 or +1");
    }
    for (const auto* cls : {&neg, &pos})
        if (cls->size() < static_cast<std::size_t>(k))
            throw Error("each class needs at least k samples for k-fold");

    std::mt19937_64 rng(seed);
    CvPlan plan;
    plan.k = k;
    plan.fold.assign(labels.size(), 0);
    for (auto* cls : {&neg, &pos}) {
        shuffle_deterministic(*cls, rng);
        for (std::size_t at = 0; at < cls->size(); ++at)
            plan.fold[(*cls)[at]] = static_cast<int>(at % static_cast<std::size_t>(k));
    }
    return plan;
}

Matrix gather_rows(const Matrix& x, const std::vector<std::size_t>& rows) {
    Matrix out(rows.size(), x.cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double* src = x.row(rows[r]);
        std::copy(src, src + x.cols, out.row(r));
    }
    return out;
}

Matrix gather_columns(const Matrix& x, const std::vector<std::size_t>& columns) {
    if (columns.empty()) return x;
    Matrix out(x.rows, columns.size());
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t k = 0; k < columns.size(); ++k) out.at(r, k) = x.at(r, columns[k]);
    return out;
}

double cv_mean_f1(const Matrix& x, const std::vector<int>& y,
                  const std::vector<std::size_t>& columns, const TrainOptions& opts,
                  const CvPlan& plan) {
    Matrix view = gather_columns(x, columns);
    double sum = 0.0;
    for (int f = 0; f < plan.k; ++f) {
        auto train_idx = plan.train_indices(f);
        auto test_idx = plan.test_indices(f);
        std::vector<int> y_train(train_idx.size()), y_test(test_idx.size());
        for (std::size_t i = 0; i < train_idx.size(); ++i) y_train[i] = y[train_idx[i]];
        for (std::size_t i = 0; i < test_idx.size(); ++i) y_test[i] = y[test_idx[i]];
        auto model = train(gather_rows(view, train_idx), y_train, opts);
        auto predicted = predict(model, gather_rows(view, test_idx));
        sum += f1_positive(tally(y_test, predicted)).value;
    }
    return sum / static_cast<double>(plan.k);
}

}  // namespace flowgraph
