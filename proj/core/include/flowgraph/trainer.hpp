// Full training procedure over a derived dataset: standardize, select
// features by forward selection, tune (C, gamma) on a grid, measure k-fold
// robustness, then fit the final model on everything.
#pragma once

#include <cstdint>
#include <vector>

#include "flowgraph/derived.hpp"
#include "flowgraph/feature_select.hpp"
#include "flowgraph/grid_search.hpp"
#include "flowgraph/svm.hpp"

namespace flowgraph {

struct TrainerConfig {
    std::uint64_t seed = 1;
    int selection_folds = 5;    // FFS and grid search
    int robustness_folds = 10;
    std::size_t ffs_cap = 8;
    double ffs_saturation = 1e-4;
    // Fixed mid-grid estimator used while features are being chosen.
    double ffs_c = 1.0;
    double ffs_gamma = 1.0;
    std::vector<double> c_grid = kDefaultCGrid;
    std::vector<double> gamma_grid = kDefaultGammaGrid;
    double tol = 1e-3;
    int max_passes = 10;
    std::size_t cache_bytes = std::size_t{64} << 20;
    int workers = 1;
};

struct TrainingOutcome {
    SvmModel model;  // scaler + feature mask attached; ready for raw rows
    ForwardSelectionResult selection;
    GridSearchResult grid;
    RobustnessResult robust;
    std::size_t training_rows = 0;
    std::uint64_t seed = 0;
};

TrainingOutcome run_training(const DerivedDataset& training_set, const TrainerConfig& config);

}  // namespace flowgraph
