#include "flowgraph/traffic_graph.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "flowgraph/error.hpp"

namespace flowgraph {

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

const char* weight_policy_name(WeightPolicy p) {
    switch (p) {
        case WeightPolicy::Unweighted: return "unweighted";
        case WeightPolicy::Weighted: return "weighted";
        case WeightPolicy::Mixed: return "mixed";
    }
    return "?";
}

WeightPolicy weight_policy_from_name(std::string_view name) {
    if (name == "unweighted" || name == "u") return WeightPolicy::Unweighted;
    if (name == "weighted" || name == "w") return WeightPolicy::Weighted;
    if (name == "mixed" || name == "m") return WeightPolicy::Mixed;
    throw UsageError("unknown weight policy '" + std::string(name) +
                     "' (expected unweighted|weighted|mixed)");
}

NodeId TrafficGraph::intern(std::string_view name) {
    std::string_view t = trim_view(name);
    if (t.empty()) throw Error("empty node id");
    auto it = ids_.find(std::string(t));
    if (it != ids_.end()) return it->second;
    NodeId id = static_cast<NodeId>(names_.size());
    names_.emplace_back(t);
    ids_.emplace(names_.back(), id);
    return id;
}

void TrafficGraph::update(std::string_view src, std::string_view dst) {
    NodeId a = intern(src);
    NodeId b = intern(dst);
    ++edge_weight_[edge_key(a, b)];
}

TrafficGraph TrafficGraph::populate(const ConnectionDataset& d, std::int64_t upto) {
    if (upto >= static_cast<std::int64_t>(d.size()))
        throw Error("populate: upto " + std::to_string(upto) + " >= dataset size " +
                    std::to_string(d.size()));
    TrafficGraph g;
    for (std::int64_t i = 0; i <= upto; ++i) {
        const auto& c = d.records[static_cast<std::size_t>(i)];
        g.update(c.src, c.dst);
    }
    return g;
}

std::int64_t TrafficGraph::weight(std::string_view src, std::string_view dst) const {
    auto a = ids_.find(std::string(trim_view(src)));
    auto b = ids_.find(std::string(trim_view(dst)));
    if (a == ids_.end() || b == ids_.end()) return 0;
    auto it = edge_weight_.find(edge_key(a->second, b->second));
    return it == edge_weight_.end() ? 0 : it->second;
}

bool TrafficGraph::contains(std::string_view name) const {
    return find(name) >= 0;
}

NodeId TrafficGraph::find(std::string_view name) const {
    auto it = ids_.find(std::string(trim_view(name)));
    return it == ids_.end() ? NodeId{-1} : it->second;
}

GraphSnapshot TrafficGraph::freeze() const {
    GraphSnapshot s;
    s.names_ = names_;
    std::size_t n = names_.size();
    s.out_.resize(n);
    s.in_.resize(n);
    s.und_.resize(n);
    s.self_loop_weight_.assign(n, 0);
    s.edge_count_ = edge_weight_.size();
    for (const auto& [key, w] : edge_weight_) {
        NodeId a = static_cast<NodeId>(key >> 32);
        NodeId b = static_cast<NodeId>(key & 0xffffffffu);
        if (a == b) {
            s.self_loop_weight_[static_cast<std::size_t>(a)] = w;
            continue;  // self-loops are invisible to the metrics
        }
        s.out_[static_cast<std::size_t>(a)].push_back({b, w});
        s.in_[static_cast<std::size_t>(b)].push_back({a, w});
        s.und_[static_cast<std::size_t>(a)].push_back(b);
        s.und_[static_cast<std::size_t>(b)].push_back(a);
    }
    auto by_id = [](const GraphSnapshot::Arc& x, const GraphSnapshot::Arc& y) {
        return x.to < y.to;
    };
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(s.out_[v].begin(), s.out_[v].end(), by_id);
        std::sort(s.in_[v].begin(), s.in_[v].end(), by_id);
        auto& u = s.und_[v];
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
    }
    return s;
}

NodeId GraphSnapshot::find(std::string_view name) const {
    std::string_view t = trim_view(name);
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == t) return static_cast<NodeId>(i);
    return -1;
}

bool GraphSnapshot::undirected_adjacent(NodeId a, NodeId b) const {
    const auto& u = und_[static_cast<std::size_t>(a)];
    return std::binary_search(u.begin(), u.end(), b);
}

void GraphSnapshot::export_edge_list(std::ostream& sink) const {
    std::vector<std::pair<std::pair<std::string, std::string>, std::int64_t>> rows;
    for (std::size_t v = 0; v < names_.size(); ++v) {
        for (const Arc& arc : out_[v])
            rows.push_back({{names_[v], names_[static_cast<std::size_t>(arc.to)]}, arc.weight});
        if (self_loop_weight_[v] > 0) rows.push_back({{names_[v], names_[v]}, self_loop_weight_[v]});
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [ends, w] : rows)
        sink << ends.first << ',' << ends.second << ',' << w << "\n";
}

}  // namespace flowgraph
