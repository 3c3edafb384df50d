#include "flowgraph/metrics.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "flowgraph/error.hpp"
#include "flowgraph/parallel.hpp"

namespace flowgraph {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_node(const GraphSnapshot& g, NodeId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.node_count())
        throw Error("node id out of range");
}

// Shortest paths from one source. Unit edge lengths use BFS; weighted lengths
// use Dijkstra with (distance, id) ordering so settle order is deterministic.
// Distances are sums of small integers held in doubles, so equality tests in
// the path-count accumulation are exact.
struct Sssp {
    std::vector<double> dist;
    std::vector<double> sigma;               // number of shortest paths
    std::vector<std::vector<NodeId>> preds;  // shortest-path predecessors
    std::vector<NodeId> order;               // settle order, source first
};

void sssp(const GraphSnapshot& g, NodeId s, bool weighted, bool want_preds, Sssp& out) {
    auto n = g.node_count();
    out.dist.assign(n, kInf);
    out.sigma.assign(n, 0.0);
    if (want_preds) {
        out.preds.resize(n);
        for (auto& p : out.preds) p.clear();
    }
    out.order.clear();
    out.dist[static_cast<std::size_t>(s)] = 0.0;
    out.sigma[static_cast<std::size_t>(s)] = 1.0;

    if (!weighted) {
        std::vector<NodeId> queue;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId v = queue[head];
            out.order.push_back(v);
            double dv = out.dist[static_cast<std::size_t>(v)];
            for (const auto& arc : g.out_arcs(v)) {
                auto w = static_cast<std::size_t>(arc.to);
                if (out.dist[w] == kInf) {
                    out.dist[w] = dv + 1.0;
                    queue.push_back(arc.to);
                }
                if (out.dist[w] == dv + 1.0) {
                    out.sigma[w] += out.sigma[static_cast<std::size_t>(v)];
                    if (want_preds) out.preds[w].push_back(v);
                }
            }
        }
        return;
    }

    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    std::vector<char> settled(n, 0);
    pq.emplace(0.0, s);
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        auto vi = static_cast<std::size_t>(v);
        if (settled[vi]) continue;
        settled[vi] = 1;
        out.order.push_back(v);
        for (const auto& arc : g.out_arcs(v)) {
            auto w = static_cast<std::size_t>(arc.to);
            double cand = dv + static_cast<double>(arc.weight);
            if (cand < out.dist[w]) {
                out.dist[w] = cand;
                out.sigma[w] = out.sigma[vi];
                if (want_preds) {
                    out.preds[w].clear();
                    out.preds[w].push_back(v);
                }
                pq.emplace(cand, arc.to);
            } else if (cand == out.dist[w] && !settled[w]) {
                out.sigma[w] += out.sigma[vi];
                if (want_preds) out.preds[w].push_back(v);
            }
        }
    }
}

// Closeness for one source from its finished shortest-path pass:
// (r / sum) * (r / (n - 1)) with r = reachable nodes excluding the source.
double closeness_from_sssp(const Sssp& sp, std::size_t n) {
    double total = 0.0;
    std::size_t r = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (sp.dist[v] == kInf || sp.dist[v] == 0.0) continue;
        total += sp.dist[v];
        ++r;
    }
    if (r == 0) return kMetricSentinel;
    double rd = static_cast<double>(r);
    return (rd / total) * (rd / static_cast<double>(n - 1));
}

// One Brandes dependency accumulation into `acc` (unnormalized).
void brandes_accumulate(const Sssp& sp, NodeId s, std::vector<double>& acc) {
    std::vector<double> delta(sp.dist.size(), 0.0);
    for (auto it = sp.order.rbegin(); it != sp.order.rend(); ++it) {
        auto w = static_cast<std::size_t>(*it);
        for (NodeId p : sp.preds[w]) {
            auto pi = static_cast<std::size_t>(p);
            delta[pi] += sp.sigma[pi] / sp.sigma[w] * (1.0 + delta[w]);
        }
        if (*it != s) acc[w] += delta[w];
    }
}

// Closeness and betweenness share the per-source shortest-path passes. The
// source range is cut into fixed-size chunks (geometry depends only on node
// count); each chunk accumulates betweenness into its own buffer and the
// buffers are folded in chunk order, so results do not depend on the number
// of workers.
void compute_path_metrics(const GraphSnapshot& g, WeightPolicy policy, int workers,
                          std::vector<double>& closeness_out, std::vector<double>& betweenness_out) {
    auto n = g.node_count();
    closeness_out.assign(n, kMetricSentinel);
    betweenness_out.assign(n, 0.0);
    if (n == 0) return;

    bool weighted = policy == WeightPolicy::Weighted;
    auto chunks = parallel_chunk_count(n);
    auto chunk_size = parallel_chunk_size(n);
    std::vector<std::vector<double>> partial(chunks);

    parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
        auto chunk = begin / chunk_size;
        auto& acc = partial[chunk];
        acc.assign(n, 0.0);
        Sssp sp;
        for (std::size_t s = begin; s < end; ++s) {
            auto sid = static_cast<NodeId>(s);
            sssp(g, sid, weighted, true, sp);
            closeness_out[s] = closeness_from_sssp(sp, n);
            brandes_accumulate(sp, sid, acc);
        }
    });

    for (auto& acc : partial) {
        if (acc.empty()) continue;
        for (std::size_t v = 0; v < n; ++v) betweenness_out[v] += acc[v];
    }
    if (n >= 3) {
        double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
        for (auto& b : betweenness_out) b /= norm;
    } else {
        std::fill(betweenness_out.begin(), betweenness_out.end(), 0.0);
    }
}

// Power iteration on the incoming-edge aggregation x'[v] = sum over u->v of
// A(u,v) * x[u], max-norm normalized each step. In-arcs are visited in source
// id order, so the summation order is reproducible. A zero iterate means no
// node has inbound mass; that fixed point is reported as all zeros. Hitting
// the iteration cap without meeting the tolerance yields sentinels.
std::vector<double> compute_eigenvector(const GraphSnapshot& g, WeightPolicy policy,
                                        const MetricOptions& opts) {
    auto n = g.node_count();
    std::vector<double> x(n, 1.0);
    if (n == 0) return x;
    bool weighted = policy == WeightPolicy::Weighted;
    std::vector<double> y(n);
    for (int iter = 0; iter < opts.eig_max_iter; ++iter) {
        for (std::size_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (const auto& arc : g.in_arcs(static_cast<NodeId>(v))) {
                double a = weighted ? static_cast<double>(arc.weight) : 1.0;
                sum += a * x[static_cast<std::size_t>(arc.to)];
            }
            y[v] = sum;
        }
        double peak = 0.0;
        for (double value : y) peak = std::max(peak, value);
        if (peak == 0.0) {
            std::fill(x.begin(), x.end(), 0.0);
            return x;
        }
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] /= peak;
            delta = std::max(delta, std::abs(y[v] - x[v]));
        }
        x = y;
        if (delta < opts.eig_tolerance) return x;
    }
    std::fill(x.begin(), x.end(), kMetricSentinel);
    return x;
}

// Local clustering over the undirected unweighted projection. A neighbor pair
// counts for cc1 when joined directly, for cc2 when not joined directly but
// bridged by some third node other than v itself.
double clustering_one(const GraphSnapshot& g, NodeId v, int distance) {
    const auto& nb = g.undirected_neighbors(v);
    auto k = nb.size();
    if (k < 2) return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool adjacent = g.undirected_adjacent(nb[i], nb[j]);
            if (distance == 1) {
                hits += adjacent;
                continue;
            }
            if (adjacent) continue;
            const auto& a = g.undirected_neighbors(nb[i]);
            const auto& b = g.undirected_neighbors(nb[j]);
            std::size_t p = 0, q = 0;
            bool bridged = false;
            while (p < a.size() && q < b.size()) {
                if (a[p] == b[q]) {
                    if (a[p] != v) {
                        bridged = true;
                        break;
                    }
                    ++p;
                    ++q;
                } else if (a[p] < b[q]) {
                    ++p;
                } else {
                    ++q;
                }
            }
            hits += bridged;
        }
    }
    double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
    return static_cast<double>(hits) / pairs;
}

double degree_value(const GraphSnapshot& g, NodeId v, WeightPolicy policy, Direction direction) {
    bool weighted = policy != WeightPolicy::Unweighted;
    auto tally = [&](const std::vector<GraphSnapshot::Arc>& arcs) {
        if (!weighted) return static_cast<double>(arcs.size());
        double sum = 0.0;
        for (const auto& arc : arcs) sum += static_cast<double>(arc.weight);
        return sum;
    };
    switch (direction) {
        case Direction::In: return tally(g.in_arcs(v));
        case Direction::Out: return tally(g.out_arcs(v));
        case Direction::Both: return tally(g.in_arcs(v)) + tally(g.out_arcs(v));
    }
    throw Error("bad direction");
}

}  // namespace

MetricTable compute_metrics(const GraphSnapshot& g, WeightPolicy policy, const MetricOptions& opts) {
    auto n = g.node_count();
    MetricTable t;
    t.dc.resize(n);
    t.in_dc.resize(n);
    t.out_dc.resize(n);
    t.cc1.resize(n);
    t.cc2.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto id = static_cast<NodeId>(v);
        t.in_dc[v] = degree_value(g, id, policy, Direction::In);
        t.out_dc[v] = degree_value(g, id, policy, Direction::Out);
        t.dc[v] = t.in_dc[v] + t.out_dc[v];
    }
    compute_path_metrics(g, policy, opts.workers, t.closeness, t.betweenness);
    t.eigenvector = compute_eigenvector(g, policy, opts);
    parallel_for(n, opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
            auto id = static_cast<NodeId>(v);
            t.cc1[v] = clustering_one(g, id, 1);
            t.cc2[v] = clustering_one(g, id, 2);
        }
    });
    return t;
}

FeatureVector extract(const GraphSnapshot& g, std::string_view node, WeightPolicy policy,
                      const MetricOptions& opts) {
    NodeId v = g.find(node);
    if (v < 0) return FeatureVector::unseen();
    return compute_metrics(g, policy, opts).row(v);
}

double degree(const GraphSnapshot& g, NodeId v, WeightPolicy policy, Direction direction) {
    check_node(g, v);
    return degree_value(g, v, policy, direction);
}

double closeness(const GraphSnapshot& g, NodeId v, WeightPolicy policy) {
    check_node(g, v);
    Sssp sp;
    sssp(g, v, policy == WeightPolicy::Weighted, false, sp);
    return closeness_from_sssp(sp, g.node_count());
}

double betweenness(const GraphSnapshot& g, NodeId v, WeightPolicy policy) {
    check_node(g, v);
    std::vector<double> cl, bt;
    compute_path_metrics(g, policy, 1, cl, bt);
    return bt[static_cast<std::size_t>(v)];
}

double eigenvector(const GraphSnapshot& g, NodeId v, WeightPolicy policy, const MetricOptions& opts) {
    check_node(g, v);
    return compute_eigenvector(g, policy, opts)[static_cast<std::size_t>(v)];
}

double clustering(const GraphSnapshot& g, NodeId v, int distance) {
    check_node(g, v);
    if (distance != 1 && distance != 2) throw Error("clustering distance must be 1 or 2");
    return clustering_one(g, v, distance);
}

}  // namespace flowgraph
