// Parsing of labeled connection CSVs, train/test splitting and benign-class
// undersampling.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "flowgraph/connection.hpp"
#include "flowgraph/csv.hpp"
#include "flowgraph/timestamp.hpp"

namespace flowgraph {

// Names of the four mapped columns; every other column lands in `classic`.
// Header cells are trimmed before matching.
struct ColumnMapping {
    std::string src = "Source IP";
    std::string dst = "Destination IP";
    std::string ts = "Timestamp";
    std::string label = "Label";
    TsFormat ts_format = TsFormat::Auto;
};

enum class BadRecordPolicy { Fail, Skip };

struct ParseOptions {
    ColumnMapping mapping;
    CsvOptions csv;
    BadRecordPolicy bad_records = BadRecordPolicy::Fail;
    bool validate_endpoints = true;  // require src/dst to parse as IP literals
};

struct ParseStats {
    std::size_t parsed = 0;
    std::size_t skipped = 0;
};

// True if `s` is an IPv4 dotted quad or an IPv6 literal.
bool looks_like_ip(const std::string& s);

// Reads a header row plus records; returns the dataset stably sorted by
// timestamp (ties keep input order).
ConnectionDataset parse_connections(std::istream& source, const ParseOptions& opts,
                                    ParseStats* stats = nullptr);

// Multi-file variant; files are concatenated in argument order before the
// final stable sort.
ConnectionDataset parse_connection_files(const std::vector<std::string>& paths,
                                         const ParseOptions& opts, ParseStats* stats = nullptr);

// Writes the dataset back out in the same delimited layout (mapped columns
// first, then the classic columns). parse_connections on the output yields an
// equal dataset.
void serialize_connections(const ConnectionDataset& d, std::ostream& sink,
                           const ColumnMapping& mapping = {}, const CsvOptions& csv = {});

// Splits at `boundary`: records with ts < boundary go left, the rest right.
// Throws Error if either side would be empty.
std::pair<ConnectionDataset, ConnectionDataset> split_train_test(const ConnectionDataset& d,
                                                                 Micros boundary);

// Index-level core of undersample_benign: keeps every malicious record and a
// seeded uniform subset of benign ones, returned as sorted indices into `d`.
std::vector<std::size_t> undersample_indices(const ConnectionDataset& d, std::uint64_t seed);

// All malicious records plus an equally sized random benign subset, in
// chronological order. Throws Error if benign records are fewer than malicious.
ConnectionDataset undersample_benign(const ConnectionDataset& d, std::uint64_t seed);

}  // namespace flowgraph
