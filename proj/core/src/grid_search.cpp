#include "flowgraph/grid_search.hpp"

#include <cmath>

#include "flowgraph/error.hpp"
#include "flowgraph/evaluation.hpp"

namespace flowgraph {

GridSearchResult grid_search(const Matrix& x, const std::vector<int>& y,
                             const std::vector<double>& c_grid,
                             const std::vector<double>& gamma_grid, const CvPlan& plan,
                             const TrainOptions& base) {
    if (c_grid.empty() || gamma_grid.empty()) throw Error("hyperparameter grids must be non-empty");
    GridSearchResult result;
    bool have_best = false;
    for (double c : c_grid) {
        for (double gamma : gamma_grid) {
            TrainOptions opts = base;
            opts.c = c;
            opts.gamma = gamma;
            double f1 = cv_mean_f1(x, y, {}, opts, plan);
            result.table.push_back({c, gamma, f1});
            bool better = !have_best || f1 > result.best_f1 ||
                          (f1 == result.best_f1 &&
                           (c < result.best_c || (c == result.best_c && gamma < result.best_gamma)));
            if (better) {
                result.best_f1 = f1;
                result.best_c = c;
                result.best_gamma = gamma;
                have_best = true;
            }
        }
    }
    return result;
}

RobustnessResult robustness(const Matrix& x, const std::vector<int>& y, const TrainOptions& opts,
                            const CvPlan& plan) {
    RobustnessResult r;
    for (int f = 0; f < plan.k; ++f) {
        auto train_idx = plan.train_indices(f);
        auto test_idx = plan.test_indices(f);
        std::vector<int> y_train(train_idx.size()), y_test(test_idx.size());
        for (std::size_t i = 0; i < train_idx.size(); ++i) y_train[i] = y[train_idx[i]];
        for (std::size_t i = 0; i < test_idx.size(); ++i) y_test[i] = y[test_idx[i]];
        auto model = train(gather_rows(x, train_idx), y_train, opts);
        auto predicted = predict(model, gather_rows(x, test_idx));
        r.fold_f1.push_back(f1_positive(tally(y_test, predicted)).value);
        r.fold_support_vectors.push_back(model.support_vectors.rows);
    }
    auto k = static_cast<double>(plan.k);
    for (double f1 : r.fold_f1) r.mean_f1 += f1;
    r.mean_f1 /= k;
    double var = 0.0;
    for (double f1 : r.fold_f1) var += (f1 - r.mean_f1) * (f1 - r.mean_f1);
    r.std_f1 = std::sqrt(var / k);
    for (auto sv : r.fold_support_vectors) r.mean_support_vectors += static_cast<double>(sv);
    r.mean_support_vectors /= k;
    return r;
}

}  // namespace flowgraph
