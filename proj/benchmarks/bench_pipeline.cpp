// Microbenchmarks for the hot paths: graph folding, metric extraction, the
// RBF kernel, and solver training on a synthetic two-class problem.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "flowgraph/block_schedule.hpp"
#include "flowgraph/derived.hpp"
#include "flowgraph/ingest.hpp"
#include "flowgraph/metrics.hpp"
#include "flowgraph/svm.hpp"
#include "flowgraph/traffic_graph.hpp"

using namespace flowgraph;

namespace {

ConnectionDataset make_stream(std::size_t n, std::size_t hosts) {
    std::mt19937_64 rng(99);
    ConnectionDataset d;
    d.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Connection c;
        c.src = "10.0." + std::to_string(rng() % hosts / 250) + "." +
                std::to_string(rng() % hosts % 250 + 1);
        c.dst = "10.1." + std::to_string(rng() % hosts / 250) + "." +
                std::to_string(rng() % hosts % 250 + 1);
        c.ts = static_cast<Micros>(i) * 1000;
        c.label = (rng() % 10 == 0) ? "PortScan" : "Benign";
        d.records.push_back(std::move(c));
    }
    return d;
}

void bm_graph_populate(benchmark::State& state) {
    auto data = make_stream(static_cast<std::size_t>(state.range(0)), 200);
    for (auto _ : state) {
        auto g = TrafficGraph::populate(data, static_cast<std::int64_t>(data.size()) - 1);
        benchmark::DoNotOptimize(g.node_count());
    }
}
BENCHMARK(bm_graph_populate)->Arg(1000)->Arg(10000);

void bm_compute_metrics(benchmark::State& state) {
    auto data = make_stream(2000, static_cast<std::size_t>(state.range(0)));
    auto snap =
        TrafficGraph::populate(data, static_cast<std::int64_t>(data.size()) - 1).freeze();
    for (auto _ : state) {
        auto table = compute_metrics(snap, WeightPolicy::Weighted);
        benchmark::DoNotOptimize(table.dc.data());
    }
    state.counters["nodes"] = static_cast<double>(snap.node_count());
}
BENCHMARK(bm_compute_metrics)->Arg(50)->Arg(200);

void bm_derive_dataset(benchmark::State& state) {
    auto data = make_stream(2000, 150);
    auto n = static_cast<std::int64_t>(data.size());
    auto sigma = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        auto derived = generate(data, BlockSchedule(sigma, n), WeightPolicy::Unweighted);
        benchmark::DoNotOptimize(derived.records.data());
    }
}
BENCHMARK(bm_derive_dataset)->Arg(500)->Arg(2000);

void bm_rbf(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1, 1);
    std::vector<double> a(16), b(16);
    for (auto& v : a) v = coord(rng);
    for (auto& v : b) v = coord(rng);
    for (auto _ : state) benchmark::DoNotOptimize(rbf(a, b, 0.5));
}
BENCHMARK(bm_rbf);

void bm_svm_train(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(31);
    std::normal_distribution<double> noise(0.0, 0.4);
    Matrix x(n, 4);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = (i % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < 4; ++j) x.at(i, j) = y[i] * 1.5 + noise(rng);
    }
    TrainOptions opts;
    opts.c = 10.0;
    opts.gamma = 0.5;
    for (auto _ : state) {
        auto model = train(x, y, opts);
        benchmark::DoNotOptimize(model.support_vectors.rows);
    }
}
BENCHMARK(bm_svm_train)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
