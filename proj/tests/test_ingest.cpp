#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "flowgraph/error.hpp"
#include "flowgraph/ingest.hpp"
#include "support/scratch_dir.hpp"

using namespace flowgraph;

namespace {

const char* kBasicCsv =
    "Flow ID,Source IP,Destination IP,Timestamp,Flow Duration,Label\n"
    "f1,10.0.0.1,10.0.0.2,1970-01-01 00:00:02,100,Benign\n"
    "f2,10.0.0.2,10.0.0.3,1970-01-01 00:00:01,200,PortScan\n"
    "f3,10.0.0.1,10.0.0.3,1970-01-01 00:00:02,300,BENIGN\n";

ConnectionDataset parse_text(const std::string& text, ParseOptions opts = {},
                             ParseStats* stats = nullptr) {
    std::istringstream in(text);
    return parse_connections(in, opts, stats);
}

}  // namespace

TEST_CASE("records come back sorted by timestamp, ties in input order") {
    auto d = parse_text(kBasicCsv);
    REQUIRE(d.size() == 3);
    CHECK(d.records[0].src == "10.0.0.2");  // 00:00:01 first
    CHECK(d.records[1].src == "10.0.0.1");
    CHECK(d.records[1].classic[0] == "f1");  // stable for the 00:00:02 tie
    CHECK(d.records[2].classic[0] == "f3");
    CHECK(d.records[0].ts == 1'000'000);
    CHECK(d.classic_names == std::vector<std::string>{"Flow ID", "Flow Duration"});
}

TEST_CASE("label classing is case-insensitive") {
    auto d = parse_text(kBasicCsv);
    CHECK(is_benign_label("Benign"));
    CHECK(is_benign_label("BENIGN"));
    CHECK(is_benign_label("benign"));
    CHECK_FALSE(is_benign_label("PortScan"));
    CHECK(d.count_malicious() == 1);
    CHECK(d.count_benign() == 2);
}

TEST_CASE("mapped columns are located by trimmed header name") {
    auto d = parse_text(
        "Label , Destination IP,Source IP,Timestamp\n"
        "Benign,10.0.0.2,10.0.0.1,1970-01-01 00:00:01\n");
    REQUIRE(d.size() == 1);
    CHECK(d.records[0].src == "10.0.0.1");
    CHECK(d.records[0].dst == "10.0.0.2");
    CHECK(d.records[0].label == "Benign");
    CHECK(d.classic_names.empty());
}

TEST_CASE("missing mapped column fails") {
    CHECK_THROWS_AS(parse_text("Source IP,Timestamp,Label\nx,y,z\n"), Error);
}

TEST_CASE("bad records: fail vs skip") {
    std::string text =
        "Source IP,Destination IP,Timestamp,Label\n"
        "10.0.0.1,10.0.0.2,1970-01-01 00:00:01,Benign\n"
        "not-an-ip,10.0.0.2,1970-01-01 00:00:02,Benign\n"
        "10.0.0.3,10.0.0.4,invalid-time,Benign\n"
        "10.0.0.5,10.0.0.6,1970-01-01 00:00:04,Benign\n";

    CHECK_THROWS_AS(parse_text(text), ParseError);

    ParseOptions skip;
    skip.bad_records = BadRecordPolicy::Skip;
    ParseStats stats;
    auto d = parse_text(text, skip, &stats);
    CHECK(d.size() == 2);
    CHECK(stats.parsed == 2);
    CHECK(stats.skipped == 2);

    // With endpoint validation off, only the timestamp row is bad.
    skip.validate_endpoints = false;
    auto d2 = parse_text(text, skip, &stats);
    CHECK(d2.size() == 3);
    CHECK(stats.skipped == 1);
}

TEST_CASE("ip literal check") {
    CHECK(looks_like_ip("192.168.1.254"));
    CHECK(looks_like_ip("::1"));
    CHECK(looks_like_ip("fe80::ab:1"));
    CHECK_FALSE(looks_like_ip("host.example"));
    CHECK_FALSE(looks_like_ip("10.0.0"));
    CHECK_FALSE(looks_like_ip("10.0.0.256"));
    CHECK_FALSE(looks_like_ip(""));
}

TEST_CASE("timestamp formats") {
    CHECK(parse_timestamp("1970-01-01 00:00:01") == Micros{1'000'000});
    CHECK(parse_timestamp("1970-01-01T00:00:01.5") == Micros{1'500'000});
    CHECK(parse_timestamp("2/1/1970 0:00:01", TsFormat::DayFirst) ==
          Micros{86'401'000'000});
    CHECK(parse_timestamp("1/2/1970 0:00:01", TsFormat::MonthFirst) ==
          Micros{86'401'000'000});
    CHECK(parse_timestamp("2/1/1970 1:00:00 PM", TsFormat::DayFirst) ==
          Micros{86'400'000'000 + 13 * 3'600'000'000LL});
    CHECK(parse_timestamp("42.25", TsFormat::EpochSeconds) == Micros{42'250'000});
    CHECK(parse_timestamp("123456", TsFormat::EpochMicros) == Micros{123456});
    CHECK_FALSE(parse_timestamp("not a time").has_value());

    // Round-trip through the canonical form.
    Micros t = 1'234'567'890'123'456;
    CHECK(parse_timestamp(format_timestamp(t)) == t);
}

TEST_CASE("serialize then parse is the identity") {
    auto d = parse_text(kBasicCsv);
    std::ostringstream out;
    serialize_connections(d, out);
    auto d2 = parse_text(out.str());
    CHECK(d == d2);
}

TEST_CASE("multi-file parse concatenates before sorting") {
    testutil::ScratchDir dir;
    auto a = dir.write("a.csv",
                       "Source IP,Destination IP,Timestamp,Label\n"
                       "10.0.0.1,10.0.0.2,1970-01-01 00:00:05,Benign\n");
    auto b = dir.write("b.csv",
                       "Source IP,Destination IP,Timestamp,Label\n"
                       "10.0.0.3,10.0.0.4,1970-01-01 00:00:01,PortScan\n");
    auto d = parse_connection_files({a, b}, {});
    REQUIRE(d.size() == 2);
    CHECK(d.records[0].src == "10.0.0.3");
    CHECK(d.records[1].src == "10.0.0.1");

    CHECK_THROWS_AS(parse_connection_files({dir.file("missing.csv")}, {}), Error);
}

TEST_CASE("split at a time boundary") {
    auto d = parse_text(kBasicCsv);
    auto [train, test] = split_train_test(d, 2'000'000);
    CHECK(train.size() == 1);  // only the 00:00:01 record is strictly earlier
    CHECK(test.size() == 2);
    CHECK(train.classic_names == d.classic_names);

    CHECK_THROWS_AS(split_train_test(d, 0), Error);           // empty train side
    CHECK_THROWS_AS(split_train_test(d, 100'000'000), Error); // empty test side
}

TEST_CASE("undersampling balances the classes deterministically") {
    ConnectionDataset d;
    for (int i = 0; i < 30; ++i) {
        Connection c;
        c.src = "10.0.0.1";
        c.dst = "10.0.0.2";
        c.ts = i;
        c.label = i % 5 == 0 ? "PortScan" : "Benign";  // 6 malicious, 24 benign
        d.records.push_back(c);
    }

    auto picked = undersample_indices(d, 42);
    CHECK(picked.size() == 12);
    CHECK(std::is_sorted(picked.begin(), picked.end()));
    CHECK(picked == undersample_indices(d, 42));
    CHECK(picked != undersample_indices(d, 43));

    auto balanced = undersample_benign(d, 42);
    CHECK(balanced.size() == 12);
    CHECK(balanced.count_malicious() == 6);
    CHECK(balanced.count_benign() == 6);
    for (std::size_t i = 0; i + 1 < balanced.size(); ++i)
        CHECK(balanced.records[i].ts <= balanced.records[i + 1].ts);

    // Every malicious record survives.
    for (const auto& r : d.records)
        if (!is_benign_label(r.label))
            CHECK(std::count(balanced.records.begin(), balanced.records.end(), r) == 1);
}

TEST_CASE("undersampling needs enough benign records") {
    ConnectionDataset d;
    for (int i = 0; i < 4; ++i) {
        Connection c;
        c.src = "10.0.0.1";
        c.dst = "10.0.0.2";
        c.ts = i;
        c.label = i == 0 ? "Benign" : "Dos";
        d.records.push_back(c);
    }
    CHECK_THROWS_AS(undersample_benign(d, 1), Error);
}

TEST_CASE("quoted fields and alternate delimiters") {
    ParseOptions opts;
    opts.csv.delimiter = ';';
    opts.validate_endpoints = false;
    auto d = parse_text(
        "Source IP;Destination IP;Timestamp;Label;Note\n"
        "a;b;1970-01-01 00:00:01;\"Port;Scan\";\"say \"\"hi\"\"\"\n",
        opts);
    REQUIRE(d.size() == 1);
    CHECK(d.records[0].label == "Port;Scan");
    CHECK(d.records[0].classic[0] == "say \"hi\"");
}
