#include "flowgraph/trainer.hpp"

#include <numeric>

#include "flowgraph/error.hpp"
#include "flowgraph/scaler.hpp"

namespace flowgraph {

TrainingOutcome run_training(const DerivedDataset& training_set, const TrainerConfig& config) {
    if (training_set.empty()) throw Error("training set is empty");
    Matrix raw = feature_matrix(training_set);
    auto y = label_vector(training_set);

    Scaler scaler = fit_scaler(raw, degree_feature_mask());
    Matrix x = apply_scaler(scaler, raw);

    auto plan = kfold(y, config.selection_folds, config.seed);

    TrainOptions estimator;
    estimator.c = config.ffs_c;
    estimator.gamma = config.ffs_gamma;
    estimator.tol = config.tol;
    estimator.max_passes = config.max_passes;
    estimator.cache_bytes = config.cache_bytes;
    estimator.workers = config.workers;

    std::vector<std::size_t> candidates(x.cols);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});

    TrainingOutcome out;
    out.seed = config.seed;
    out.training_rows = training_set.size();
    out.selection = forward_select(x, y, candidates, config.ffs_cap, estimator, plan,
                                   config.ffs_saturation);

    Matrix selected = gather_columns(x, out.selection.selected);
    out.grid = grid_search(selected, y, config.c_grid, config.gamma_grid, plan, estimator);

    TrainOptions best = estimator;
    best.c = out.grid.best_c;
    best.gamma = out.grid.best_gamma;

    auto robust_plan = kfold(y, config.robustness_folds, config.seed);
    out.robust = robustness(selected, y, best, robust_plan);

    out.model = train(selected, y, best);
    out.model.scaler = scaler;
    out.model.feature_mask = out.selection.selected;
    return out;
}

}  // namespace flowgraph
