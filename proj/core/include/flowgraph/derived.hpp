// Derived dataset: per-connection graph features for both endpoints, produced
// block-wise over the traffic graph and exchanged between pipeline stages as a
// 19-column delimited text file.
#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/connection.hpp"
#include "flowgraph/block_schedule.hpp"
#include "flowgraph/matrix.hpp"
#include "flowgraph/metrics.hpp"

namespace flowgraph {

// Column names of the 16-wide feature layout: the eight metrics for the source
// node, then the eight for the destination node.
extern const std::array<std::string_view, 16> kDerivedFeatureNames;

struct DerivedRecord {
    std::string src;
    std::string dst;
    std::string label;
    FeatureVector src_features;
    FeatureVector dst_features;

    std::array<double, 16> features() const;
    bool is_benign() const { return is_benign_label(label); }

    bool operator==(const DerivedRecord&) const = default;
};

struct DerivedDataset {
    std::vector<DerivedRecord> records;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
    bool operator==(const DerivedDataset&) const = default;
};

// Streams over the dataset once: the graph is populated up to each block
// boundary in turn, the metric table is computed there, and every connection
// in the block reads both endpoint rows from that table. Endpoints the
// boundary snapshot has not seen get the all-unseen vector. Output order
// matches input order.
DerivedDataset generate(const ConnectionDataset& d, const BlockSchedule& schedule,
                        WeightPolicy policy, const MetricOptions& opts = {});

// 19 columns: src, dst, label, then kDerivedFeatureNames. Feature values are
// written with 12 significant digits; writing is idempotent across one
// read-back, and the -10 sentinel survives exactly.
void write_derived(const DerivedDataset& d, std::ostream& sink);
void write_derived_file(const DerivedDataset& d, const std::string& path);
DerivedDataset read_derived(std::istream& source);
DerivedDataset read_derived_file(const std::string& path);

// Learner-facing views.
Matrix feature_matrix(const DerivedDataset& d);
std::vector<int> label_vector(const DerivedDataset& d);  // benign -1, else +1

// Derived-level mirror of the connection-level undersampling: all malicious
// records plus a seeded uniform benign subset of equal count, original order
// preserved. Same seed and label sequence pick the same positions.
DerivedDataset undersample_derived(const DerivedDataset& d, std::uint64_t seed);

}  // namespace flowgraph
