// Minimal delimited-text reader/writer (RFC 4180 quoting, configurable delimiter).
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flowgraph {

struct CsvOptions {
    char delimiter = ',';
};

// Splits one physical line into fields. Quoted fields may contain the
// delimiter and doubled quotes; embedded newlines are not supported.
std::vector<std::string> csv_split(std::string_view line, const CsvOptions& opts = {});

// Joins fields, quoting any that contain the delimiter, a quote or whitespace
// at the ends.
std::string csv_join(const std::vector<std::string>& fields, const CsvOptions& opts = {});

std::string csv_quote(std::string_view field, const CsvOptions& opts = {});

}  // namespace flowgraph
