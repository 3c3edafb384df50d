// The eight per-node graph metrics and their batched computation on a frozen
// snapshot. Weight semantics: under Unweighted all edges count 1 everywhere;
// under Weighted the stored counts act as traversal cost in shortest-path
// metrics, as magnitude in degree and eigenvector; under Mixed weights enter
// the degree metrics only. Clustering never sees weights.
#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "flowgraph/traffic_graph.hpp"

namespace flowgraph {

// Out-of-range stand-in for infinite/undefined metric values.
inline constexpr double kMetricSentinel = -10.0;

// Fixed metric order used everywhere a per-node vector is laid out.
inline constexpr std::array<std::string_view, 8> kMetricNames = {
    "dc", "in_dc", "out_dc", "closeness", "betweenness", "eigenvector", "cc1", "cc2"};

struct FeatureVector {
    double dc = 0;
    double in_dc = 0;
    double out_dc = 0;
    double closeness = kMetricSentinel;
    double betweenness = kMetricSentinel;
    double eigenvector = kMetricSentinel;
    double cc1 = 0;
    double cc2 = 0;

    // Vector for a node the snapshot has never seen.
    static FeatureVector unseen() { return {0, 0, 0, kMetricSentinel, kMetricSentinel, kMetricSentinel, 0, 0}; }

    std::array<double, 8> to_array() const {
        return {dc, in_dc, out_dc, closeness, betweenness, eigenvector, cc1, cc2};
    }
    static FeatureVector from_array(const std::array<double, 8>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
    }

    bool operator==(const FeatureVector&) const = default;
};

struct MetricOptions {
    int workers = 1;
    double eig_tolerance = 1e-8;
    int eig_max_iter = 1000;
};

// All eight metrics for every node of the snapshot.
struct MetricTable {
    std::vector<double> dc, in_dc, out_dc, closeness, betweenness, eigenvector, cc1, cc2;

    std::size_t size() const { return dc.size(); }
    FeatureVector row(NodeId v) const {
        auto i = static_cast<std::size_t>(v);
        return {dc[i], in_dc[i], out_dc[i], closeness[i], betweenness[i], eigenvector[i], cc1[i], cc2[i]};
    }
};

MetricTable compute_metrics(const GraphSnapshot& g, WeightPolicy policy,
                            const MetricOptions& opts = {});

// Single-node extraction in Table order. Unknown nodes yield the all-unseen
// vector. Computes a full table internally; prefer compute_metrics for bulk.
FeatureVector extract(const GraphSnapshot& g, std::string_view node, WeightPolicy policy,
                      const MetricOptions& opts = {});

enum class Direction { In, Out, Both };

// Individual metric entry points. All throw Error when v is out of range.
double degree(const GraphSnapshot& g, NodeId v, WeightPolicy policy, Direction direction);
double closeness(const GraphSnapshot& g, NodeId v, WeightPolicy policy);
double betweenness(const GraphSnapshot& g, NodeId v, WeightPolicy policy);
double eigenvector(const GraphSnapshot& g, NodeId v, WeightPolicy policy,
                   const MetricOptions& opts = {});
double clustering(const GraphSnapshot& g, NodeId v, int distance);

}  // namespace flowgraph
