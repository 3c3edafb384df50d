#include "flowgraph/feature_select.hpp"

#include <algorithm>

#include "flowgraph/error.hpp"

namespace flowgraph {

ForwardSelectionResult forward_select(const Matrix& x, const std::vector<int>& y,
                                      const std::vector<std::size_t>& candidates,
                                      std::size_t cap, const TrainOptions& estimator,
                                      const CvPlan& plan, double saturation_eps) {
    if (candidates.empty()) throw Error("forward selection needs at least one candidate");
    ForwardSelectionResult result;
    std::vector<std::size_t> remaining = candidates;
    std::sort(remaining.begin(), remaining.end());

    while (!remaining.empty() && result.selected.size() < cap) {
        double best_f1 = 0.0;
        std::size_t best = remaining.front();
        bool have_best = false;
        std::vector<std::size_t> trial = result.selected;
        trial.push_back(0);
        for (std::size_t cand : remaining) {
            trial.back() = cand;
            double f1 = cv_mean_f1(x, y, trial, estimator, plan);
            if (!have_best || f1 > best_f1) {  // ascending scan: ties keep the lower index
                best_f1 = f1;
                best = cand;
                have_best = true;
            }
        }
        if (!result.selected.empty() && best_f1 < result.step_f1.back() + saturation_eps) break;
        result.selected.push_back(best);
        result.step_f1.push_back(best_f1);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }
    return result;
}

}  // namespace flowgraph
