// Oriented weighted traffic graph, populated one connection at a time.
// The builder stores full integer weights; the weight policy is applied when
// metrics are computed, which is observationally equivalent to keeping
// separate unweighted/weighted graphs.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flowgraph/connection.hpp"

namespace flowgraph {

enum class WeightPolicy { Unweighted, Weighted, Mixed };

const char* weight_policy_name(WeightPolicy p);
// Accepts "unweighted"/"weighted"/"mixed" and the short forms "u"/"w"/"m".
WeightPolicy weight_policy_from_name(std::string_view name);

using NodeId = std::int32_t;

// Immutable view of the graph at one population point. Adjacency used by the
// metrics excludes self-loops; the raw edge list (including loops) is kept
// for export and edge counting.
class GraphSnapshot {
public:
    struct Arc {
        NodeId to;       // neighbor (target for out-arcs, source for in-arcs)
        std::int64_t weight;
    };

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& name(NodeId v) const { return names_[static_cast<std::size_t>(v)]; }
    // -1 when the node is not part of this snapshot.
    NodeId find(std::string_view name) const;

    const std::vector<Arc>& out_arcs(NodeId v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<Arc>& in_arcs(NodeId v) const { return in_[static_cast<std::size_t>(v)]; }
    // Undirected unweighted projection (sorted, no self-loops).
    const std::vector<NodeId>& undirected_neighbors(NodeId v) const {
        return und_[static_cast<std::size_t>(v)];
    }
    bool undirected_adjacent(NodeId a, NodeId b) const;

    // `src,dst,weight` lines sorted lexicographically; includes self-loops.
    void export_edge_list(std::ostream& sink) const;

private:
    friend class TrafficGraph;
    std::vector<std::string> names_;
    std::vector<std::vector<Arc>> out_;   // sorted by target id
    std::vector<std::vector<Arc>> in_;    // sorted by source id
    std::vector<std::vector<NodeId>> und_;
    std::vector<std::int64_t> self_loop_weight_;  // 0 when absent
    std::size_t edge_count_ = 0;
};

class TrafficGraph {
public:
    // Inserts the edge (src, dst): unseen endpoints join the node set, a new
    // edge starts at weight 1, an existing one is incremented.
    void update(std::string_view src, std::string_view dst);

    // Graph after folding update over connections 0..upto. upto = -1 gives
    // the empty graph; upto >= N throws.
    static TrafficGraph populate(const ConnectionDataset& d, std::int64_t upto);

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_weight_.size(); }
    std::int64_t weight(std::string_view src, std::string_view dst) const;  // 0 if absent
    NodeId find(std::string_view name) const;  // -1 when absent; O(1)
    bool contains(std::string_view name) const;

    // Interns a node name without adding edges (unused by the pipeline, handy
    // in tests); returns its id.
    NodeId intern(std::string_view name);

    GraphSnapshot freeze() const;

private:
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> names_;
    std::unordered_map<std::uint64_t, std::int64_t> edge_weight_;  // key src<<32|dst

    static std::uint64_t edge_key(NodeId a, NodeId b) {
        return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
    }
};

}  // namespace flowgraph
