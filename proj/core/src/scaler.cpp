#include "flowgraph/scaler.hpp"

#include <cmath>
#include <cstring>

#include "flowgraph/error.hpp"

namespace flowgraph {

Scaler fit_scaler(const Matrix& x, const std::vector<std::uint8_t>& mask) {
    if (x.rows == 0 || x.cols == 0) throw Error("cannot fit a scaler on an empty matrix");
    if (mask.size() != x.cols) throw Error("scaler mask size does not match column count");
    Scaler s;
    s.means.assign(x.cols, 0.0);
    s.stds.assign(x.cols, 1.0);
    s.scaled.assign(x.cols, 0);
    for (std::size_t c = 0; c < x.cols; ++c) {
        if (!mask[c]) continue;
        double sum = 0.0;
        for (std::size_t r = 0; r < x.rows; ++r) sum += x.at(r, c);
        double mean = sum / static_cast<double>(x.rows);
        double var = 0.0;
        for (std::size_t r = 0; r < x.rows; ++r) {
            double d = x.at(r, c) - mean;
            var += d * d;
        }
        var /= static_cast<double>(x.rows);
        double std = std::sqrt(var);
        if (std == 0.0) continue;  // constant column: leave as passthrough
        s.means[c] = mean;
        s.stds[c] = std;
        s.scaled[c] = 1;
    }
    return s;
}

void apply_scaler_row(const Scaler& s, double* row) {
    for (std::size_t c = 0; c < s.size(); ++c)
        if (s.scaled[c]) row[c] = (row[c] - s.means[c]) / s.stds[c];
}

Matrix apply_scaler(const Scaler& s, const Matrix& x) {
    if (x.cols != s.size()) throw Error("scaler/matrix column mismatch");
    Matrix out = x;
    for (std::size_t r = 0; r < out.rows; ++r) apply_scaler_row(s, out.row(r));
    return out;
}

std::vector<std::uint8_t> degree_feature_mask() {
    std::vector<std::uint8_t> mask(16, 0);
    // dc, in_dc, out_dc for both endpoints.
    for (std::size_t base : {std::size_t{0}, std::size_t{8}})
        for (std::size_t k = 0; k < 3; ++k) mask[base + k] = 1;
    return mask;
}

}  // namespace flowgraph
