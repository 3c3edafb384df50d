// Exhaustive (C, gamma) search over cross-validated F1, and the k-fold
// robustness summary for a fixed configuration.
#pragma once

#include <cstddef>
#include <vector>

#include "flowgraph/crossval.hpp"

namespace flowgraph {

inline const std::vector<double> kDefaultCGrid = {0.1, 1, 5, 10, 100, 1000, 10000, 100000};
inline const std::vector<double> kDefaultGammaGrid = {0.01, 0.1, 0.5, 1};

struct GridCell {
    double c = 0.0;
    double gamma = 0.0;
    double mean_f1 = 0.0;
};

struct GridSearchResult {
    double best_c = 0.0;
    double best_gamma = 0.0;
    double best_f1 = 0.0;
    std::vector<GridCell> table;  // every evaluated cell, C-major
};

// Evaluates every grid cell; the winner has maximal mean F1, with ties broken
// toward smaller C, then smaller gamma. Throws Error on an empty grid.
GridSearchResult grid_search(const Matrix& x, const std::vector<int>& y,
                             const std::vector<double>& c_grid,
                             const std::vector<double>& gamma_grid, const CvPlan& plan,
                             const TrainOptions& base);

struct RobustnessResult {
    double mean_f1 = 0.0;
    double std_f1 = 0.0;  // population standard deviation over folds
    double mean_support_vectors = 0.0;
    std::vector<double> fold_f1;
    std::vector<std::size_t> fold_support_vectors;
};

// Trains one model per fold at the given configuration and summarizes
// held-out F1 and support-vector counts.
RobustnessResult robustness(const Matrix& x, const std::vector<int>& y,
                            const TrainOptions& opts, const CvPlan& plan);

}  // namespace flowgraph
