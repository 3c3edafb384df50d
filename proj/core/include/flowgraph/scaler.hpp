// Feature standardization. Only columns named by the mask are scaled — for
// this pipeline the degree counts, whose domain is unbounded; the remaining
// metrics live in fixed ranges (or carry the -10 sentinel) and pass through.
#pragma once

#include <cstdint>
#include <vector>

#include "flowgraph/matrix.hpp"

namespace flowgraph {

struct Scaler {
    // Per-column; columns with scale[i] == 0 pass through and hold mean 0,
    // std 1. A masked column whose variance is zero is demoted to passthrough.
    std::vector<double> means;
    std::vector<double> stds;
    std::vector<std::uint8_t> scaled;

    std::size_t size() const { return means.size(); }
    bool operator==(const Scaler&) const = default;
};

// Training-set statistics: mean and population standard deviation per masked
// column. Throws Error on an empty matrix or mask size mismatch.
Scaler fit_scaler(const Matrix& x, const std::vector<std::uint8_t>& mask);

Matrix apply_scaler(const Scaler& s, const Matrix& x);
void apply_scaler_row(const Scaler& s, double* row);

// Mask for the 16-wide derived feature layout: degree columns only.
std::vector<std::uint8_t> degree_feature_mask();

}  // namespace flowgraph
