// Greedy forward feature selection scored by cross-validated F1.
#pragma once

#include <cstddef>
#include <vector>

#include "flowgraph/crossval.hpp"

namespace flowgraph {

struct ForwardSelectionResult {
    std::vector<std::size_t> selected;  // column indices, in acceptance order
    std::vector<double> step_f1;        // mean CV F1 after each acceptance
};

// At each step the candidate that maximizes mean CV F1 joins the selection;
// ties go to the lower column index. The first feature is always accepted;
// afterwards the loop stops when the best candidate improves the previous
// score by less than saturation_eps, or at cap features. Throws Error on an
// empty candidate list.
ForwardSelectionResult forward_select(const Matrix& x, const std::vector<int>& y,
                                      const std::vector<std::size_t>& candidates,
                                      std::size_t cap, const TrainOptions& estimator,
                                      const CvPlan& plan, double saturation_eps = 1e-4);

}  // namespace flowgraph
