#include "flowgraph/derived.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "flowgraph/csv.hpp"
#include "flowgraph/error.hpp"
#include "flowgraph/rng.hpp"
#include "flowgraph/traffic_graph.hpp"

namespace flowgraph {

const std::array<std::string_view, 16> kDerivedFeatureNames = {
    "src_dc",  "src_in_dc",  "src_out_dc",  "src_closeness",
    "src_betweenness", "src_eigenvector", "src_cc1", "src_cc2",
    "dst_dc",  "dst_in_dc",  "dst_out_dc",  "dst_closeness",
    "dst_betweenness", "dst_eigenvector", "dst_cc1", "dst_cc2"};

std::array<double, 16> DerivedRecord::features() const {
    std::array<double, 16> out;
    auto s = src_features.to_array();
    auto d = dst_features.to_array();
    for (std::size_t k = 0; k < 8; ++k) {
        out[k] = s[k];
        out[8 + k] = d[k];
    }
    return out;
}

DerivedDataset generate(const ConnectionDataset& d, const BlockSchedule& schedule,
                        WeightPolicy policy, const MetricOptions& opts) {
    if (static_cast<std::int64_t>(d.size()) != schedule.n())
        throw Error("schedule does not match dataset size");
    DerivedDataset out;
    out.records.reserve(d.size());

    TrafficGraph builder;
    std::int64_t populated = -1;  // last connection folded into the builder
    std::int64_t boundary = -2;   // phi of the current metric table
    GraphSnapshot snapshot;
    MetricTable table;

    for (std::int64_t i = 0; i < schedule.n(); ++i) {
        std::int64_t phi = schedule.block_index(i);
        if (phi != boundary) {
            while (populated < phi) {
                ++populated;
                const auto& c = d.records[static_cast<std::size_t>(populated)];
                builder.update(c.src, c.dst);
            }
            snapshot = builder.freeze();
            table = compute_metrics(snapshot, policy, opts);
            boundary = phi;
        }
        const auto& c = d.records[static_cast<std::size_t>(i)];
        DerivedRecord r;
        r.src = c.src;
        r.dst = c.dst;
        r.label = c.label;
        NodeId sv = builder.find(c.src);
        NodeId dv = builder.find(c.dst);
        r.src_features = sv >= 0 ? table.row(sv) : FeatureVector::unseen();
        r.dst_features = dv >= 0 ? table.row(dv) : FeatureVector::unseen();
        out.records.push_back(std::move(r));
    }
    return out;
}

namespace {

std::string fmt_feature(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> header_fields() {
    std::vector<std::string> h = {"src", "dst", "label"};
    for (auto name : kDerivedFeatureNames) h.emplace_back(name);
    return h;
}

double parse_feature(const std::string& field, std::size_t line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError("bad feature value '" + field + "'", line_no);
    return v;
}

}  // namespace

void write_derived(const DerivedDataset& d, std::ostream& sink) {
    sink << csv_join(header_fields()) << '\n';
    std::vector<std::string> fields(19);
    for (const auto& r : d.records) {
        fields[0] = r.src;
        fields[1] = r.dst;
        fields[2] = r.label;
        auto f = r.features();
        for (std::size_t k = 0; k < 16; ++k) fields[3 + k] = fmt_feature(f[k]);
        sink << csv_join(fields) << '\n';
    }
}

void write_derived_file(const DerivedDataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_derived(d, out);
    if (!out) throw Error("write failed for " + path);
}

DerivedDataset read_derived(std::istream& source) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(source, line)) throw Error("derived dataset is empty");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (csv_split(line) != header_fields())
        throw ParseError("unexpected derived dataset header", line_no);

    DerivedDataset out;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = csv_split(line);
        if (fields.size() != 19)
            throw ParseError("expected 19 fields, got " + std::to_string(fields.size()), line_no);
        DerivedRecord r;
        r.src = fields[0];
        r.dst = fields[1];
        r.label = fields[2];
        std::array<double, 8> s, d;
        for (std::size_t k = 0; k < 8; ++k) s[k] = parse_feature(fields[3 + k], line_no);
        for (std::size_t k = 0; k < 8; ++k) d[k] = parse_feature(fields[11 + k], line_no);
        r.src_features = FeatureVector::from_array(s);
        r.dst_features = FeatureVector::from_array(d);
        out.records.push_back(std::move(r));
    }
    return out;
}

DerivedDataset read_derived_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return read_derived(in);
}

Matrix feature_matrix(const DerivedDataset& d) {
    Matrix m(d.size(), 16);
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto f = d.records[i].features();
        for (std::size_t k = 0; k < 16; ++k) m.at(i, k) = f[k];
    }
    return m;
}

std::vector<int> label_vector(const DerivedDataset& d) {
    std::vector<int> y(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) y[i] = d.records[i].is_benign() ? -1 : +1;
    return y;
}

DerivedDataset undersample_derived(const DerivedDataset& d, std::uint64_t seed) {
    std::vector<std::size_t> malicious, benign;
    for (std::size_t i = 0; i < d.size(); ++i)
        (d.records[i].is_benign() ? benign : malicious).push_back(i);
    if (benign.size() < malicious.size())
        throw Error("cannot undersample: " + std::to_string(benign.size()) + " benign records < " +
                    std::to_string(malicious.size()) + " malicious");
    std::mt19937_64 rng(seed);
    shuffle_deterministic(benign, rng);
    benign.resize(malicious.size());
    std::vector<std::size_t> keep = std::move(malicious);
    keep.insert(keep.end(), benign.begin(), benign.end());
    std::sort(keep.begin(), keep.end());

    DerivedDataset out;
    out.records.reserve(keep.size());
    for (std::size_t i : keep) out.records.push_back(d.records[i]);
    return out;
}

}  // namespace flowgraph
