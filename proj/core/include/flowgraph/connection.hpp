// Flow-record domain types: a single connection and a chronologically
// ordered dataset of them.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flowgraph/timestamp.hpp"

namespace flowgraph {

// One network flow summary. `classic` holds every unmapped input column as an
// opaque string; those values are carried through for inspection but never
// enter classification.
struct Connection {
    std::string src;
    std::string dst;
    Micros ts = 0;
    std::string label;
    std::vector<std::string> classic;

    bool operator==(const Connection&) const = default;
};

// Case-insensitive check against the benign class name.
bool is_benign_label(const std::string& label);

inline bool is_malicious(const Connection& c) { return !is_benign_label(c.label); }

struct ConnectionDataset {
    std::vector<Connection> records;
    // Header names for the passthrough `classic` columns, in column order.
    std::vector<std::string> classic_names;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }

    std::size_t count_malicious() const;
    std::size_t count_benign() const { return records.size() - count_malicious(); }

    bool operator==(const ConnectionDataset&) const = default;
};

}  // namespace flowgraph
