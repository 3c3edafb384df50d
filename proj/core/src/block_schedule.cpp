#include "flowgraph/block_schedule.hpp"

#include "flowgraph/error.hpp"

namespace flowgraph {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

BlockSchedule::BlockSchedule(std::int64_t sigma, std::int64_t n) : sigma_(sigma), n_(n) {
    if (n < 1) throw Error("block schedule needs at least one connection");
    if (sigma < 1 || sigma > n)
        throw Error("block size must be between 1 and the connection count");
}

std::int64_t BlockSchedule::block_index(std::int64_t i) const {
    if (i < 0 || i >= n_) throw Error("connection index out of range");
    std::int64_t g = ceil_div(i, sigma_);
    if (g < ceil_div(n_, sigma_)) return sigma_ * g - 1;
    return n_ - 1;
}

std::int64_t BlockSchedule::block_count() const { return ceil_div(n_ - 1, sigma_) + 1; }

}  // namespace flowgraph
