#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "flowgraph/block_schedule.hpp"
#include "flowgraph/derived.hpp"
#include "flowgraph/error.hpp"
#include "flowgraph/ingest.hpp"
#include "flowgraph/metrics.hpp"
#include "flowgraph/rng.hpp"
#include "flowgraph/traffic_graph.hpp"
#include "support/generators.hpp"
#include "support/scratch_dir.hpp"

using namespace flowgraph;

namespace {

ConnectionDataset tiny_dataset(std::initializer_list<std::pair<const char*, const char*>> edges) {
    ConnectionDataset d;
    Micros t = 0;
    for (auto [src, dst] : edges) {
        Connection c;
        c.src = src;
        c.dst = dst;
        c.ts = t++;
        c.label = "Benign";
        d.records.push_back(c);
    }
    return d;
}

}  // namespace

TEST_CASE("block boundary worked examples") {
    BlockSchedule s(50, 129);
    CHECK(s.block_index(63) == 99);
    CHECK(s.block_index(114) == 128);
    CHECK(s.block_index(0) == -1);
    CHECK(s.block_index(50) == 49);
    CHECK(s.block_index(51) == 99);
    CHECK(s.block_index(100) == 99);
    CHECK(s.block_index(101) == 128);  // final partial block
    CHECK(s.block_index(128) == 128);
}

TEST_CASE("sigma=1 scores every connection against the strict prefix") {
    BlockSchedule s(1, 10);
    for (std::int64_t i = 0; i < 10; ++i) CHECK(s.block_index(i) == i - 1);
    CHECK(s.block_count() == 10);
}

TEST_CASE("sigma=N gives one snapshot for everything after the opener") {
    BlockSchedule s(40, 40);
    CHECK(s.block_index(0) == -1);  // the first connection still sees the empty graph
    for (std::int64_t i = 1; i < 40; ++i) CHECK(s.block_index(i) == 39);
    CHECK(s.block_count() == 2);

    BlockSchedule one(1, 1);
    CHECK(one.block_index(0) == -1);
    CHECK(one.block_count() == 1);
}

TEST_CASE("boundary structure on random schedules") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::int64_t>(1 + uniform_below(rng, 200));
        auto sigma = static_cast<std::int64_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(n)));
        BlockSchedule s(sigma, n);

        std::int64_t prev = -2;
        std::int64_t distinct = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            auto phi = s.block_index(i);
            CHECK(phi < n);
            CHECK(phi >= prev);  // non-decreasing
            // Either a block edge (sigma*k - 1) or the final index.
            bool on_grid = (phi + 1) % sigma == 0;
            CHECK((on_grid || phi == n - 1));
            // The graph never lags more than one block behind.
            auto g = (i + sigma - 1) / sigma;
            CHECK(phi >= g * sigma - sigma);
            // Connections in one block share a boundary.
            if (i > 0 && (i + sigma - 1) / sigma == (i - 1 + sigma - 1) / sigma)
                CHECK(phi == s.block_index(i - 1));
            if (phi != prev) ++distinct;
            prev = phi;
        }
        CHECK(distinct == s.block_count());
    }
}

TEST_CASE("schedule argument validation") {
    CHECK_THROWS_AS(BlockSchedule(0, 5), Error);
    CHECK_THROWS_AS(BlockSchedule(6, 5), Error);
    CHECK_THROWS_AS(BlockSchedule(1, 0), Error);
    BlockSchedule ok(2, 5);
    CHECK_THROWS_AS(ok.block_index(-1), Error);
    CHECK_THROWS_AS(ok.block_index(5), Error);
}

TEST_CASE("generate: single-snapshot dataset") {
    auto d = tiny_dataset({{"a", "b"}, {"c", "a"}});
    auto out = generate(d, BlockSchedule(2, 2), WeightPolicy::Unweighted);
    REQUIRE(out.size() == 2);

    // Connection 0 is scored against the empty graph.
    CHECK(out.records[0].src_features == FeatureVector::unseen());
    CHECK(out.records[0].dst_features == FeatureVector::unseen());

    // Connection 1 reads the final 3-node graph.
    auto final_graph = TrafficGraph::populate(d, 1).freeze();
    CHECK(out.records[1].src_features == extract(final_graph, "c", WeightPolicy::Unweighted));
    CHECK(out.records[1].dst_features == extract(final_graph, "a", WeightPolicy::Unweighted));
    CHECK(out.records[1].src == "c");
    CHECK(out.records[1].dst == "a");
    CHECK(out.records[1].label == "Benign");
}

TEST_CASE("generate: sigma=1 opener gets the all-unseen vector") {
    auto d = tiny_dataset({{"a", "b"}});
    auto out = generate(d, BlockSchedule(1, 1), WeightPolicy::Weighted);
    REQUIRE(out.size() == 1);
    auto f = out.records[0].src_features;
    CHECK(f.dc == 0);
    CHECK(f.in_dc == 0);
    CHECK(f.out_dc == 0);
    CHECK(f.closeness == -10.0);
    CHECK(f.betweenness == -10.0);
    CHECK(f.eigenvector == -10.0);
    CHECK(f.cc1 == 0);
    CHECK(f.cc2 == 0);
}

TEST_CASE("streaming generation equals from-scratch recomputation bit for bit") {
    std::mt19937_64 rng(271828);
    const WeightPolicy policies[] = {WeightPolicy::Unweighted, WeightPolicy::Weighted,
                                     WeightPolicy::Mixed};
    for (int trial = 0; trial < 35; ++trial) {
        auto n = 5 + uniform_below(rng, 56);
        auto d = gen::random_stream(rng, n);
        auto sigma = static_cast<std::int64_t>(1 + uniform_below(rng, n));
        auto policy = policies[trial % 3];
        BlockSchedule schedule(sigma, static_cast<std::int64_t>(n));

        auto out = generate(d, schedule, policy);
        REQUIRE(out.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            auto snap = TrafficGraph::populate(d, schedule.block_index(static_cast<std::int64_t>(i)))
                            .freeze();
            INFO("trial " << trial << " record " << i << " sigma " << sigma);
            CHECK(out.records[i].src_features == extract(snap, d.records[i].src, policy));
            CHECK(out.records[i].dst_features == extract(snap, d.records[i].dst, policy));
        }
    }
}

TEST_CASE("generate is deterministic") {
    std::mt19937_64 rng(1);
    auto d = gen::random_stream(rng, 40);
    BlockSchedule s(7, 40);
    auto a = generate(d, s, WeightPolicy::Mixed);
    auto b = generate(d, s, WeightPolicy::Mixed);
    CHECK(a == b);
}

TEST_CASE("derived file header and layout") {
    auto d = tiny_dataset({{"a", "b"}});
    auto out = generate(d, BlockSchedule(1, 1), WeightPolicy::Unweighted);
    std::ostringstream sink;
    write_derived(out, sink);
    auto text = sink.str();

    std::string header = "src,dst,label";
    for (auto name : kDerivedFeatureNames) header += "," + std::string(name);
    CHECK(text.substr(0, text.find('\n')) == header);
    CHECK(text.find("a,b,Benign,0,0,0,-10,-10,-10,0,0,0,0,0,-10,-10,-10,0,0\n") != std::string::npos);
}

TEST_CASE("derived round-trip: canonical text is a fixed point") {
    std::mt19937_64 rng(5);
    auto d = gen::random_stream(rng, 30);
    auto out = generate(d, BlockSchedule(4, 30), WeightPolicy::Weighted);

    std::ostringstream first;
    write_derived(out, first);
    std::istringstream back(first.str());
    auto reread = read_derived(back);
    REQUIRE(reread.size() == out.size());

    std::ostringstream second;
    write_derived(reread, second);
    CHECK(first.str() == second.str());

    // Parsed data (already at 12-digit precision) round-trips exactly.
    std::istringstream again(second.str());
    CHECK(read_derived(again) == reread);

    // Sentinels survive exactly.
    CHECK(reread.records[0].src_features.closeness == -10.0);
}

TEST_CASE("derived file errors") {
    std::string good =
        "src,dst,label,src_dc,src_in_dc,src_out_dc,src_closeness,src_betweenness,"
        "src_eigenvector,src_cc1,src_cc2,dst_dc,dst_in_dc,dst_out_dc,dst_closeness,"
        "dst_betweenness,dst_eigenvector,dst_cc1,dst_cc2\n"
        "a,b,Benign,0,0,0,-10,-10,-10,0,0,0,0,0,-10,-10,-10,0,0\n";
    {
        std::istringstream in(good);
        CHECK(read_derived(in).size() == 1);
    }
    {
        std::istringstream in(std::string("x") + good);  // header mismatch
        CHECK_THROWS_AS(read_derived(in), ParseError);
    }
    {
        std::istringstream in(good + "a,b,Benign,1,2\n");  // short row
        CHECK_THROWS_AS(read_derived(in), ParseError);
    }
    {
        auto bad = good + "a,b,Benign,zero,0,0,-10,-10,-10,0,0,0,0,0,-10,-10,-10,0,0\n";
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_derived(in), ParseError);
    }
    {
        std::istringstream in(good + good.substr(good.find('\n') + 1) + "trailing,junk\n");
        CHECK_THROWS_AS(read_derived(in), ParseError);
    }
}

TEST_CASE("derived file i/o via paths") {
    testutil::ScratchDir dir;
    std::mt19937_64 rng(6);
    auto d = gen::random_stream(rng, 12);
    auto out = generate(d, BlockSchedule(3, 12), WeightPolicy::Unweighted);
    auto path = dir.file("derived.csv");
    write_derived_file(out, path);
    auto reread = read_derived_file(path);
    CHECK(reread.size() == out.size());
    CHECK_THROWS_AS(read_derived_file(dir.file("absent.csv")), Error);
}

TEST_CASE("learner views of a derived dataset") {
    std::mt19937_64 rng(8);
    auto d = gen::random_stream(rng, 20);
    auto out = generate(d, BlockSchedule(5, 20), WeightPolicy::Mixed);

    auto x = feature_matrix(out);
    auto y = label_vector(out);
    REQUIRE(x.rows == 20);
    REQUIRE(x.cols == 16);
    REQUIRE(y.size() == 20);
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto row = out.records[i].features();
        for (std::size_t j = 0; j < 16; ++j) CHECK(x.at(i, j) == row[j]);
        CHECK(y[i] == (out.records[i].is_benign() ? -1 : 1));
    }
}

TEST_CASE("derived undersampling mirrors the connection-level selection") {
    std::mt19937_64 rng(77);
    ConnectionDataset conns;
    for (std::size_t i = 0; i < 60; ++i) {
        Connection c;
        c.src = "10.0.0." + std::to_string(1 + uniform_below(rng, 6));
        c.dst = "10.0.0." + std::to_string(1 + uniform_below(rng, 6));
        c.ts = static_cast<Micros>(i);
        c.label = uniform_below(rng, 4) == 0 ? "Dos" : "Benign";
        conns.records.push_back(c);
    }
    auto derived = generate(conns, BlockSchedule(10, 60), WeightPolicy::Unweighted);

    const std::uint64_t seed = 99;
    auto picked = undersample_indices(conns, seed);
    auto sampled = undersample_derived(derived, seed);
    REQUIRE(sampled.size() == picked.size());
    for (std::size_t i = 0; i < picked.size(); ++i)
        CHECK(sampled.records[i] == derived.records[picked[i]]);

    CHECK(sampled == undersample_derived(derived, seed));
    CHECK_FALSE(undersample_derived(derived, seed + 1) == sampled);
}

TEST_CASE("generate rejects an empty dataset") {
    ConnectionDataset d;
    CHECK_THROWS_AS(generate(d, BlockSchedule(1, 1), WeightPolicy::Unweighted), Error);
}
