#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oracle {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSentinel = flowgraph::kMetricSentinel;
}  // namespace

DenseGraph dense_from_snapshot(const flowgraph::GraphSnapshot& g) {
    DenseGraph d;
    d.n = g.node_count();
    d.w.assign(d.n, std::vector<std::int64_t>(d.n, 0));
    for (std::size_t u = 0; u < d.n; ++u)
        for (const auto& arc : g.out_arcs(static_cast<flowgraph::NodeId>(u)))
            d.w[u][static_cast<std::size_t>(arc.to)] = arc.weight;
    return d;
}

Apsp apsp(const DenseGraph& g, bool weighted) {
    auto n = g.n;
    Apsp r;
    r.dist.assign(n, std::vector<double>(n, kInf));
    r.count.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        r.dist[u][u] = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.w[u][v] > 0)
                r.dist[u][v] = weighted ? static_cast<double>(g.w[u][v]) : 1.0;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r.dist[i][k] + r.dist[k][j] < r.dist[i][j])
                    r.dist[i][j] = r.dist[i][k] + r.dist[k][j];

    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return r.dist[s][a] < r.dist[s][b]; });
        r.count[s][s] = 1.0;
        for (std::size_t t : order) {
            if (t == s || r.dist[s][t] == kInf) continue;
            double c = 0.0;
            for (std::size_t u = 0; u < n; ++u) {
                if (u == t || g.w[u][t] <= 0) continue;
                double len = weighted ? static_cast<double>(g.w[u][t]) : 1.0;
                if (r.dist[s][u] + len == r.dist[s][t]) c += r.count[s][u];
            }
            r.count[s][t] = c;
        }
    }
    return r;
}

std::vector<double> closeness(const DenseGraph& g, bool weighted) {
    auto paths = apsp(g, weighted);
    std::vector<double> out(g.n, kSentinel);
    for (std::size_t v = 0; v < g.n; ++v) {
        double sum = 0.0;
        std::size_t reach = 0;
        for (std::size_t t = 0; t < g.n; ++t) {
            if (t == v || paths.dist[v][t] == kInf) continue;
            sum += paths.dist[v][t];
            ++reach;
        }
        if (reach == 0) continue;
        double r = static_cast<double>(reach);
        out[v] = (r / sum) * (r / static_cast<double>(g.n - 1));
    }
    return out;
}

std::vector<double> betweenness(const DenseGraph& g, bool weighted) {
    auto n = g.n;
    std::vector<double> out(n, 0.0);
    if (n < 3) return out;
    auto paths = apsp(g, weighted);
    for (std::size_t v = 0; v < n; ++v) {
        double total = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            if (s == v) continue;
            for (std::size_t t = 0; t < n; ++t) {
                if (t == v || t == s || paths.count[s][t] == 0.0) continue;
                if (paths.dist[s][v] + paths.dist[v][t] != paths.dist[s][t]) continue;
                total += paths.count[s][v] * paths.count[v][t] / paths.count[s][t];
            }
        }
        out[v] = total / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    }
    return out;
}

std::vector<double> eigenvector(const DenseGraph& g, bool weighted, double tol, int max_iter) {
    auto n = g.n;
    std::vector<double> x(n, 1.0);
    if (n == 0) return x;
    std::vector<double> y(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        for (std::size_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (std::size_t u = 0; u < n; ++u) {
                if (g.w[u][v] <= 0) continue;
                double a = weighted ? static_cast<double>(g.w[u][v]) : 1.0;
                sum += a * x[u];
            }
            y[v] = sum;
        }
        double peak = 0.0;
        for (double value : y) peak = std::max(peak, value);
        if (peak == 0.0) return std::vector<double>(n, 0.0);
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] /= peak;
            delta = std::max(delta, std::abs(y[v] - x[v]));
        }
        x = y;
        if (delta < tol) return x;
    }
    return std::vector<double>(n, kSentinel);
}

std::vector<double> clustering(const DenseGraph& g, int distance) {
    auto n = g.n;
    auto adj = [&](std::size_t a, std::size_t b) {
        return a != b && (g.w[a][b] > 0 || g.w[b][a] > 0);
    };
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < n; ++u)
            if (adj(v, u)) nb.push_back(u);
        if (nb.size() < 2) continue;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                bool direct = adj(nb[i], nb[j]);
                if (distance == 1) {
                    hits += direct;
                    continue;
                }
                if (direct) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != v && adj(nb[i], c) && adj(c, nb[j])) {
                        ++hits;
                        break;
                    }
                }
            }
        }
        double pairs = static_cast<double>(nb.size()) * static_cast<double>(nb.size() - 1) / 2.0;
        out[v] = static_cast<double>(hits) / pairs;
    }
    return out;
}

flowgraph::MetricTable metric_table(const flowgraph::GraphSnapshot& g,
                                    flowgraph::WeightPolicy policy) {
    using flowgraph::WeightPolicy;
    auto d = dense_from_snapshot(g);
    bool degree_weighted = policy != WeightPolicy::Unweighted;
    bool path_weighted = policy == WeightPolicy::Weighted;

    flowgraph::MetricTable t;
    t.in_dc.assign(d.n, 0.0);
    t.out_dc.assign(d.n, 0.0);
    t.dc.assign(d.n, 0.0);
    for (std::size_t v = 0; v < d.n; ++v) {
        for (std::size_t u = 0; u < d.n; ++u) {
            if (d.w[u][v] > 0) t.in_dc[v] += degree_weighted ? static_cast<double>(d.w[u][v]) : 1.0;
            if (d.w[v][u] > 0) t.out_dc[v] += degree_weighted ? static_cast<double>(d.w[v][u]) : 1.0;
        }
        t.dc[v] = t.in_dc[v] + t.out_dc[v];
    }
    t.closeness = closeness(d, path_weighted);
    t.betweenness = betweenness(d, path_weighted);
    t.eigenvector = eigenvector(d, path_weighted);
    t.cc1 = clustering(d, 1);
    t.cc2 = clustering(d, 2);
    return t;
}

}  // namespace oracle
