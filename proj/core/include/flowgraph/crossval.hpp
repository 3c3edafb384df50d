// Stratified, seeded k-fold assignment plus the fold-scoring helper shared by
// feature selection and grid search. The shuffle is a fixed Fisher-Yates over
// mt19937_64 so plans are identical across platforms and runs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowgraph/matrix.hpp"
#include "flowgraph/svm.hpp"

namespace flowgraph {

struct CvPlan {
    int k = 0;
    std::vector<int> fold;  // per-sample fold index in [0, k)

    std::vector<std::size_t> test_indices(int f) const;
    std::vector<std::size_t> train_indices(int f) const;
};

// Labels in {-1, +1}. Requires k >= 2 and every class to have at least k
// samples; throws Error otherwise. Within each class, samples are shuffled by
// the seed and dealt round-robin, so fold sizes per class differ by at most
// one.
CvPlan kfold(const std::vector<int>& labels, int k, std::uint64_t seed);

// Mean F1 of the malicious class across folds: per fold, an SVM is trained on
// the column subset of the training side and scored on the held-out side.
// An empty column list means all columns.
double cv_mean_f1(const Matrix& x, const std::vector<int>& y,
                  const std::vector<std::size_t>& columns, const TrainOptions& opts,
                  const CvPlan& plan);

// Rows of x restricted to the given indices (and optionally columns).
Matrix gather_rows(const Matrix& x, const std::vector<std::size_t>& rows);
Matrix gather_columns(const Matrix& x, const std::vector<std::size_t>& columns);

}  // namespace flowgraph
