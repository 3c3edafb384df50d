#include "flowgraph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "flowgraph/error.hpp"
#include "flowgraph/rng.hpp"

namespace flowgraph {

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Stable chronological order: ties keep prior relative order.
void sort_by_ts(std::vector<Connection>& records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const Connection& a, const Connection& b) { return a.ts < b.ts; });
}

struct HeaderLayout {
    std::size_t src, dst, ts, label;
    std::vector<std::size_t> classic_cols;
};

HeaderLayout map_header(const std::vector<std::string>& header, const ColumnMapping& mapping) {
    HeaderLayout layout{};
    auto find = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trim_copy(header[i]) == name) return i;
        throw Error("missing mapped column '" + name + "' in header");
    };
    layout.src = find(mapping.src);
    layout.dst = find(mapping.dst);
    layout.ts = find(mapping.ts);
    layout.label = find(mapping.label);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != layout.src && i != layout.dst && i != layout.ts && i != layout.label)
            layout.classic_cols.push_back(i);
    }
    return layout;
}

}  // namespace

bool is_benign_label(const std::string& label) {
    static const std::string kBenign = "benign";
    if (label.size() != kBenign.size()) return false;
    for (std::size_t i = 0; i < label.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(label[i])) != kBenign[i]) return false;
    return true;
}

std::size_t ConnectionDataset::count_malicious() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (is_malicious(r)) ++n;
    return n;
}

bool looks_like_ip(const std::string& s) {
    if (s.empty()) return false;
    int dots = 0;
    bool all4 = true;
    int run = 0;
    for (char c : s) {
        if (c == '.') {
            if (run == 0 || run > 3) return false;
            ++dots;
            run = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            ++run;
        } else {
            all4 = false;
            break;
        }
    }
    if (all4 && dots == 3 && run >= 1 && run <= 3) {
        // check octet ranges
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            std::size_t next = s.find('.', pos);
            std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
            if (std::stoi(part) > 255) return false;
            pos = next == std::string::npos ? s.size() : next + 1;
        }
        return true;
    }
    // IPv6: hex digits and at least one ':'
    bool colon = false;
    for (char c : s) {
        if (c == ':') colon = true;
        else if (!std::isxdigit(static_cast<unsigned char>(c)) && c != '.') return false;
    }
    return colon;
}

ConnectionDataset parse_connections(std::istream& source, const ParseOptions& opts,
                                    ParseStats* stats) {
    std::string line;
    if (!std::getline(source, line)) throw Error("empty input: no header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = csv_split(line, opts.csv);
    HeaderLayout layout = map_header(header, opts.mapping);

    ConnectionDataset out;
    for (std::size_t col : layout.classic_cols) out.classic_names.push_back(trim_copy(header[col]));

    std::size_t lineno = 1;
    ParseStats local{};
    auto bad = [&](const std::string& why) {
        if (opts.bad_records == BadRecordPolicy::Fail) throw ParseError(why, lineno);
        ++local.skipped;
    };

    while (std::getline(source, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = csv_split(line, opts.csv);
        if (fields.size() != header.size()) {
            bad("expected " + std::to_string(header.size()) + " columns, got " +
                std::to_string(fields.size()));
            continue;
        }
        Connection c;
        c.src = trim_copy(fields[layout.src]);
        c.dst = trim_copy(fields[layout.dst]);
        c.label = trim_copy(fields[layout.label]);
        if (c.src.empty()) {
            bad("missing src");
            continue;
        }
        if (c.dst.empty()) {
            bad("missing dst");
            continue;
        }
        if (c.label.empty()) {
            bad("missing label");
            continue;
        }
        if (opts.validate_endpoints && (!looks_like_ip(c.src) || !looks_like_ip(c.dst))) {
            bad("endpoint is not an IP literal: '" +
                (looks_like_ip(c.src) ? c.dst : c.src) + "'");
            continue;
        }
        auto ts = parse_timestamp(fields[layout.ts], opts.mapping.ts_format);
        if (!ts) {
            bad("unparseable timestamp '" + trim_copy(fields[layout.ts]) + "'");
            continue;
        }
        c.ts = *ts;
        c.classic.reserve(layout.classic_cols.size());
        for (std::size_t col : layout.classic_cols) c.classic.push_back(fields[col]);
        out.records.push_back(std::move(c));
        ++local.parsed;
    }
    sort_by_ts(out.records);
    if (stats) *stats = local;
    return out;
}

ConnectionDataset parse_connection_files(const std::vector<std::string>& paths,
                                         const ParseOptions& opts, ParseStats* stats) {
    ConnectionDataset all;
    ParseStats total{};
    bool first = true;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open input file: " + path);
        ParseStats s{};
        ConnectionDataset d = parse_connections(in, opts, &s);
        total.parsed += s.parsed;
        total.skipped += s.skipped;
        if (first) {
            all = std::move(d);
            first = false;
        } else {
            if (d.classic_names != all.classic_names)
                throw Error("input files disagree on column layout: " + path);
            all.records.insert(all.records.end(), std::make_move_iterator(d.records.begin()),
                               std::make_move_iterator(d.records.end()));
        }
    }
    if (first) throw Error("no input files given");
    sort_by_ts(all.records);
    if (stats) *stats = total;
    return all;
}

void serialize_connections(const ConnectionDataset& d, std::ostream& sink,
                           const ColumnMapping& mapping, const CsvOptions& csv) {
    std::vector<std::string> row{mapping.src, mapping.dst, mapping.ts, mapping.label};
    row.insert(row.end(), d.classic_names.begin(), d.classic_names.end());
    sink << csv_join(row, csv) << "\n";
    for (const auto& c : d.records) {
        row.clear();
        row.push_back(c.src);
        row.push_back(c.dst);
        row.push_back(format_timestamp(c.ts));
        row.push_back(c.label);
        row.insert(row.end(), c.classic.begin(), c.classic.end());
        sink << csv_join(row, csv) << "\n";
    }
}

std::pair<ConnectionDataset, ConnectionDataset> split_train_test(const ConnectionDataset& d,
                                                                 Micros boundary) {
    ConnectionDataset train, test;
    train.classic_names = d.classic_names;
    test.classic_names = d.classic_names;
    for (const auto& c : d.records) {
        (c.ts < boundary ? train : test).records.push_back(c);
    }
    if (train.empty() || test.empty())
        throw Error("split boundary " + format_timestamp(boundary) +
                    " lies outside the dataset's time span");
    return {std::move(train), std::move(test)};
}

std::vector<std::size_t> undersample_indices(const ConnectionDataset& d, std::uint64_t seed) {
    std::vector<std::size_t> malicious, benign;
    for (std::size_t i = 0; i < d.records.size(); ++i)
        (is_malicious(d.records[i]) ? malicious : benign).push_back(i);
    if (benign.size() < malicious.size())
        throw Error("cannot undersample: " + std::to_string(benign.size()) +
                    " benign records < " + std::to_string(malicious.size()) + " malicious");

    std::mt19937_64 rng(seed);
    shuffle_deterministic(benign, rng);
    benign.resize(malicious.size());

    std::vector<std::size_t> keep = std::move(malicious);
    keep.insert(keep.end(), benign.begin(), benign.end());
    // Records are already chronologically sorted, so sorted indices give the
    // chronological subset.
    std::sort(keep.begin(), keep.end());
    return keep;
}

ConnectionDataset undersample_benign(const ConnectionDataset& d, std::uint64_t seed) {
    auto keep = undersample_indices(d, seed);
    ConnectionDataset out;
    out.classic_names = d.classic_names;
    out.records.reserve(keep.size());
    for (std::size_t i : keep) out.records.push_back(d.records[i]);
    return out;
}

}  // namespace flowgraph
