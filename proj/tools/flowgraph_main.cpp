// flowgraph command-line tool: extract graph features from labeled connection
// logs, train the detector, evaluate it, or run the whole matrix of block
// sizes and weight policies.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.
//
// A --config file (plain key=value lines, '#' comments) carries the same keys
// as the long options and overrides anything given on the command line, so a
// checked-in run configuration always wins over ad-hoc flags.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flowgraph/block_schedule.hpp"
#include "flowgraph/derived.hpp"
#include "flowgraph/digest.hpp"
#include "flowgraph/error.hpp"
#include "flowgraph/evaluation.hpp"
#include "flowgraph/ingest.hpp"
#include "flowgraph/parallel.hpp"
#include "flowgraph/report.hpp"
#include "flowgraph/svm.hpp"
#include "flowgraph/timestamp.hpp"
#include "flowgraph/trainer.hpp"
#include "flowgraph/traffic_graph.hpp"

namespace fg = flowgraph;
namespace fs = std::filesystem;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Option bindings: every long option is also addressable from the config
// file; the config file is applied after the command line and overrides it.

struct Bindings {
    std::map<std::string, std::string*> strings;
    std::map<std::string, std::vector<std::string>*> lists;
    std::map<std::string, bool*> bools;

    void apply(const std::string& key, const std::string& value) const {
        if (auto it = strings.find(key); it != strings.end()) {
            *it->second = value;
            return;
        }
        if (auto it = lists.find(key); it != lists.end()) {
            it->second->clear();
            std::stringstream ss(value);
            std::string part;
            while (std::getline(ss, part, ',')) it->second->push_back(part);
            return;
        }
        if (auto it = bools.find(key); it != bools.end()) {
            if (value == "true" || value == "1" || value == "yes") *it->second = true;
            else if (value == "false" || value == "0" || value == "no") *it->second = false;
            else throw fg::UsageError("config key '" + key + "' expects a boolean, got '" + value + "'");
            return;
        }
        throw fg::UsageError("unknown config key '" + key + "'");
    }

    // Sorted key=value dump of the effective configuration (digest input).
    std::string canonical() const {
        std::map<std::string, std::string> all;
        for (const auto& [k, v] : strings) all[k] = *v;
        for (const auto& [k, v] : bools) all[k] = *v ? "true" : "false";
        for (const auto& [k, v] : lists) {
            std::string joined;
            for (std::size_t i = 0; i < v->size(); ++i) {
                if (i) joined += ',';
                joined += (*v)[i];
            }
            all[k] = joined;
        }
        std::string out;
        for (const auto& [k, v] : all) out += k + "=" + v + "\n";
        return out;
    }
};

void apply_config_file(const std::string& path, const Bindings& bindings) {
    std::ifstream in(path);
    if (!in) throw fg::UsageError("cannot open config file " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw fg::UsageError("config line " + std::to_string(line_no) + " is not key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        bindings.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

// ---------------------------------------------------------------------------
// Value parsing

std::uint64_t parse_u64(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw fg::UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
    }
}

std::int64_t parse_positive_i64(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        auto v = std::stoll(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw fg::UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    }
}

double parse_double_opt(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw fg::UsageError(std::string(what) + " must be a number, got '" + s + "'");
    }
}

std::vector<double> parse_grid(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_double_opt(part, what));
    if (out.empty()) throw fg::UsageError(std::string(what) + " grid is empty");
    return out;
}

// "N" (any case) means the whole dataset; otherwise a positive integer.
std::int64_t resolve_sigma(const std::string& label, std::int64_t n) {
    if (label == "N" || label == "n") return n;
    return parse_positive_i64(label, "sigma");
}

fg::TsFormat parse_ts_format(const std::string& name) {
    auto f = fg::ts_format_from_name(name);
    if (!f) throw fg::UsageError("unknown timestamp format '" + name + "'");
    return *f;
}

fg::WeightPolicy parse_policy(const std::string& name) {
    return fg::weight_policy_from_name(name);  // throws UsageError itself
}

// ---------------------------------------------------------------------------
// Shared option blocks

struct IngestOpts {
    std::vector<std::string> inputs;
    std::string src_col = "Source IP";
    std::string dst_col = "Destination IP";
    std::string ts_col = "Timestamp";
    std::string label_col = "Label";
    std::string ts_format = "auto";
    std::string delimiter = ",";
    bool skip_bad_records = false;
    bool no_ip_check = false;

    void register_on(CLI::App* cmd, Bindings& b, bool with_inputs = true) {
        if (with_inputs) {
            cmd->add_option("--input", inputs, "input connection CSV file(s)")->delimiter(',');
            b.lists["input"] = &inputs;
        }
        cmd->add_option("--src-col", src_col, "source endpoint column name");
        cmd->add_option("--dst-col", dst_col, "destination endpoint column name");
        cmd->add_option("--ts-col", ts_col, "timestamp column name");
        cmd->add_option("--label-col", label_col, "label column name");
        cmd->add_option("--ts-format", ts_format,
                        "timestamp format: auto|iso|dmy|mdy|epoch-seconds|epoch-micros");
        cmd->add_option("--delimiter", delimiter, "field delimiter (single character)");
        cmd->add_flag("--skip-bad-records", skip_bad_records,
                      "skip malformed records instead of failing");
        cmd->add_flag("--no-ip-check", no_ip_check, "accept endpoints that are not IP literals");
        b.strings["src-col"] = &src_col;
        b.strings["dst-col"] = &dst_col;
        b.strings["ts-col"] = &ts_col;
        b.strings["label-col"] = &label_col;
        b.strings["ts-format"] = &ts_format;
        b.strings["delimiter"] = &delimiter;
        b.bools["skip-bad-records"] = &skip_bad_records;
        b.bools["no-ip-check"] = &no_ip_check;
    }

    fg::ParseOptions parse_options() const {
        fg::ParseOptions o;
        o.mapping.src = src_col;
        o.mapping.dst = dst_col;
        o.mapping.ts = ts_col;
        o.mapping.label = label_col;
        o.mapping.ts_format = parse_ts_format(ts_format);
        if (delimiter.size() != 1)
            throw fg::UsageError("delimiter must be a single character, got '" + delimiter + "'");
        o.csv.delimiter = delimiter[0];
        o.bad_records = skip_bad_records ? fg::BadRecordPolicy::Skip : fg::BadRecordPolicy::Fail;
        o.validate_endpoints = !no_ip_check;
        return o;
    }

    fg::ConnectionDataset load() const {
        if (inputs.empty()) throw fg::UsageError("at least one --input file is required");
        fg::ParseStats stats;
        auto d = fg::parse_connection_files(inputs, parse_options(), &stats);
        if (stats.skipped > 0)
            std::cerr << "note: skipped " << stats.skipped << " malformed record(s)\n";
        if (d.empty()) throw fg::Error("input contains no records");
        return d;
    }
};

struct LearnOpts {
    std::string seed = "1";
    std::string folds = "5";
    std::string robust_folds = "10";
    std::string ffs_cap = "8";
    std::string tol = "0.001";
    std::string max_passes = "10";
    std::string cache_mb = "64";
    std::string workers = "0";
    std::vector<std::string> c_grid;
    std::vector<std::string> gamma_grid;
    bool no_undersample = false;

    void register_on(CLI::App* cmd, Bindings& b) {
        cmd->add_option("--seed", seed, "RNG seed recorded in every artifact");
        cmd->add_option("--folds", folds, "folds for feature selection and grid search");
        cmd->add_option("--robust-folds", robust_folds, "folds for the robustness pass");
        cmd->add_option("--ffs-cap", ffs_cap, "maximum features accepted by forward selection");
        cmd->add_option("--tol", tol, "solver KKT tolerance");
        cmd->add_option("--max-passes", max_passes, "solver iteration budget factor");
        cmd->add_option("--cache-mb", cache_mb, "kernel cache budget in MiB");
        cmd->add_option("--workers", workers, "worker threads (0 = FLOWGRAPH_WORKERS or cores)");
        cmd->add_option("--c-grid", c_grid, "comma-separated C grid override")->delimiter(',');
        cmd->add_option("--gamma-grid", gamma_grid, "comma-separated gamma grid override")->delimiter(',');
        cmd->add_flag("--no-undersample", no_undersample,
                      "train on the full training split without balancing");
        b.strings["seed"] = &seed;
        b.strings["folds"] = &folds;
        b.strings["robust-folds"] = &robust_folds;
        b.strings["ffs-cap"] = &ffs_cap;
        b.strings["tol"] = &tol;
        b.strings["max-passes"] = &max_passes;
        b.strings["cache-mb"] = &cache_mb;
        b.strings["workers"] = &workers;
        b.lists["c-grid"] = &c_grid;
        b.lists["gamma-grid"] = &gamma_grid;
        b.bools["no-undersample"] = &no_undersample;
    }

    fg::TrainerConfig trainer_config() const {
        fg::TrainerConfig cfg;
        cfg.seed = parse_u64(seed, "seed");
        cfg.selection_folds = static_cast<int>(parse_positive_i64(folds, "folds"));
        cfg.robustness_folds = static_cast<int>(parse_positive_i64(robust_folds, "robust-folds"));
        cfg.ffs_cap = static_cast<std::size_t>(parse_positive_i64(ffs_cap, "ffs-cap"));
        cfg.tol = parse_double_opt(tol, "tol");
        cfg.max_passes = static_cast<int>(parse_positive_i64(max_passes, "max-passes"));
        cfg.cache_bytes = static_cast<std::size_t>(parse_positive_i64(cache_mb, "cache-mb")) << 20;
        cfg.workers = fg::resolve_workers(static_cast<int>(parse_u64(workers, "workers")));
        std::string joined;
        if (!c_grid.empty()) {
            for (const auto& part : c_grid) joined += joined.empty() ? part : "," + part;
            cfg.c_grid = parse_grid(joined, "c-grid");
        }
        if (!gamma_grid.empty()) {
            joined.clear();
            for (const auto& part : gamma_grid) joined += joined.empty() ? part : "," + part;
            cfg.gamma_grid = parse_grid(joined, "gamma-grid");
        }
        return cfg;
    }
};

// ---------------------------------------------------------------------------
// Artifact plumbing

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fg::Error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw fg::Error("write failed for " + path.string());
}

fg::MetaMap base_meta(const std::string& command, const Bindings& bindings,
                      const std::vector<std::string>& input_files) {
    fg::MetaMap meta;
    meta.emplace_back("tool", "flowgraph");
    meta.emplace_back("version", kToolVersion);
    meta.emplace_back("command", command);
    meta.emplace_back("config_digest", fg::digest_hex(bindings.canonical()));
    std::string digests;
    for (const auto& file : input_files) {
        if (!digests.empty()) digests += ",";
        digests += fg::digest_file_hex(file);
    }
    meta.emplace_back("input_digest", digests);
    return meta;
}

void write_manifest(const fs::path& path, const fg::MetaMap& meta,
                    const std::vector<std::string>& outputs) {
    nlohmann::json j;
    j["kind"] = "manifest";
    for (const auto& [k, v] : meta) j[k] = v;
    j["outputs"] = outputs;
    write_text_file(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// extract

struct ExtractCmd {
    IngestOpts ingest;
    LearnOpts learn;  // for --seed/--workers reuse in manifests
    std::string sigma = "N";
    std::string policy = "unweighted";
    std::string boundary;
    std::string output_dir = ".";
    std::string dump_graph;
    std::string config_file;
    Bindings bindings;

    void register_on(CLI::App* cmd) {
        ingest.register_on(cmd, bindings);
        cmd->add_option("--sigma", sigma, "block size: positive integer or N (whole dataset)");
        cmd->add_option("--policy", policy, "weight policy: unweighted|weighted|mixed (u|w|m)");
        cmd->add_option("--boundary", boundary,
                        "train/test boundary timestamp; when given, writes split derived files");
        cmd->add_option("--output-dir", output_dir, "directory for derived files and manifest");
        cmd->add_option("--dump-graph", dump_graph,
                        "also write the final graph as an edge list to this path");
        cmd->add_option("--seed", learn.seed, "seed recorded in the manifest");
        cmd->add_option("--workers", learn.workers, "worker threads (0 = auto)");
        cmd->add_option("--config", config_file, "key=value file overriding these options");
        bindings.strings["sigma"] = &sigma;
        bindings.strings["policy"] = &policy;
        bindings.strings["boundary"] = &boundary;
        bindings.strings["output-dir"] = &output_dir;
        bindings.strings["dump-graph"] = &dump_graph;
        bindings.strings["seed"] = &learn.seed;
        bindings.strings["workers"] = &learn.workers;
    }

    int run() {
        if (!config_file.empty()) apply_config_file(config_file, bindings);
        auto dataset = ingest.load();
        auto n = static_cast<std::int64_t>(dataset.size());
        fg::BlockSchedule schedule(resolve_sigma(sigma, n), n);
        auto pol = parse_policy(policy);
        fg::MetricOptions mopts;
        mopts.workers = fg::resolve_workers(static_cast<int>(parse_u64(learn.workers, "workers")));

        auto derived = fg::generate(dataset, schedule, pol, mopts);

        fs::create_directories(output_dir);
        std::vector<std::string> outputs;
        if (boundary.empty()) {
            auto path = fs::path(output_dir) / "derived.csv";
            fg::write_derived_file(derived, path.string());
            outputs.push_back("derived.csv");
        } else {
            auto ts = fg::parse_timestamp(boundary, parse_ts_format(ingest.ts_format));
            if (!ts) throw fg::UsageError("cannot parse boundary timestamp '" + boundary + "'");
            auto [train_side, test_side] = fg::split_train_test(dataset, *ts);
            fg::DerivedDataset train_d, test_d;
            auto m = train_side.size();
            train_d.records.assign(derived.records.begin(),
                                   derived.records.begin() + static_cast<std::ptrdiff_t>(m));
            test_d.records.assign(derived.records.begin() + static_cast<std::ptrdiff_t>(m),
                                  derived.records.end());
            fg::write_derived_file(train_d, (fs::path(output_dir) / "derived_train.csv").string());
            fg::write_derived_file(test_d, (fs::path(output_dir) / "derived_test.csv").string());
            outputs.push_back("derived_train.csv");
            outputs.push_back("derived_test.csv");
            (void)test_side;
        }
        if (!dump_graph.empty()) {
            auto snapshot = fg::TrafficGraph::populate(dataset, n - 1).freeze();
            std::ostringstream edges;
            snapshot.export_edge_list(edges);
            write_text_file(dump_graph, edges.str());
            outputs.push_back(dump_graph);
        }

        auto meta = base_meta("extract", bindings, ingest.inputs);
        meta.emplace_back("seed", learn.seed);
        meta.emplace_back("sigma", sigma);
        meta.emplace_back("policy", fg::weight_policy_name(pol));
        meta.emplace_back("records", std::to_string(dataset.size()));
        write_manifest(fs::path(output_dir) / "extract_manifest.json", meta, outputs);
        return 0;
    }
};

// ---------------------------------------------------------------------------
// train

struct TrainCmd {
    std::string train_file;
    std::string output_dir = ".";
    std::string config_file;
    LearnOpts learn;
    Bindings bindings;

    void register_on(CLI::App* cmd) {
        cmd->add_option("--train", train_file, "derived training dataset")->required();
        cmd->add_option("--output-dir", output_dir, "directory for model and reports");
        learn.register_on(cmd, bindings);
        cmd->add_option("--config", config_file, "key=value file overriding these options");
        bindings.strings["train"] = &train_file;
        bindings.strings["output-dir"] = &output_dir;
    }

    int run() {
        if (!config_file.empty()) apply_config_file(config_file, bindings);
        auto data = fg::read_derived_file(train_file);
        auto cfg = learn.trainer_config();
        if (!learn.no_undersample) data = fg::undersample_derived(data, cfg.seed);

        auto outcome = fg::run_training(data, cfg);

        fs::create_directories(output_dir);
        fg::save_model(outcome.model, (fs::path(output_dir) / "model.json").string());
        auto meta = base_meta("train", bindings, {train_file});
        meta.emplace_back("seed", learn.seed);
        write_text_file(fs::path(output_dir) / "training_report.txt",
                        fg::training_report_text(outcome));
        write_text_file(fs::path(output_dir) / "training_report.json",
                        fg::training_report_json(outcome, meta) + "\n");
        write_manifest(fs::path(output_dir) / "train_manifest.json", meta,
                       {"model.json", "training_report.txt", "training_report.json"});
        std::cout << fg::training_report_text(outcome);
        return 0;
    }
};

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateCmd {
    std::string model_file;
    std::string test_file;
    std::string output_dir = ".";
    std::string config_file;
    Bindings bindings;

    void register_on(CLI::App* cmd) {
        cmd->add_option("--model", model_file, "trained model file")->required();
        cmd->add_option("--test", test_file, "derived test dataset")->required();
        cmd->add_option("--output-dir", output_dir, "directory for evaluation reports");
        cmd->add_option("--config", config_file, "key=value file overriding these options");
        bindings.strings["model"] = &model_file;
        bindings.strings["test"] = &test_file;
        bindings.strings["output-dir"] = &output_dir;
    }

    int run() {
        if (!config_file.empty()) apply_config_file(config_file, bindings);
        auto model = fg::load_model(model_file);
        auto test = fg::read_derived_file(test_file);
        auto report = fg::evaluate(model, test);

        fs::create_directories(output_dir);
        auto meta = base_meta("evaluate", bindings, {model_file, test_file});
        write_text_file(fs::path(output_dir) / "evaluation_report.txt",
                        fg::evaluation_report_text(report));
        write_text_file(fs::path(output_dir) / "evaluation_report.json",
                        fg::evaluation_report_json(report, meta) + "\n");
        write_manifest(fs::path(output_dir) / "evaluate_manifest.json", meta,
                       {"evaluation_report.txt", "evaluation_report.json"});
        std::cout << fg::evaluation_report_text(report);
        return 0;
    }
};

// ---------------------------------------------------------------------------
// pipeline

struct PipelineCmd {
    IngestOpts ingest;
    LearnOpts learn;
    std::vector<std::string> sigmas = {"1", "5", "N"};
    std::vector<std::string> policies = {"unweighted", "weighted", "mixed"};
    std::string boundary;
    std::string output_dir = ".";
    std::string config_file;
    Bindings bindings;

    void register_on(CLI::App* cmd) {
        ingest.register_on(cmd, bindings);
        learn.register_on(cmd, bindings);
        cmd->add_option("--sigmas", sigmas, "block sizes to run (integers or N)")->delimiter(',');
        cmd->add_option("--policies", policies, "weight policies to run")->delimiter(',');
        cmd->add_option("--boundary", boundary, "train/test boundary timestamp")->required();
        cmd->add_option("--output-dir", output_dir, "directory for per-cell artifacts");
        cmd->add_option("--config", config_file, "key=value file overriding these options");
        bindings.lists["sigmas"] = &sigmas;
        bindings.lists["policies"] = &policies;
        bindings.strings["boundary"] = &boundary;
        bindings.strings["output-dir"] = &output_dir;
    }

    int run() {
        if (!config_file.empty()) apply_config_file(config_file, bindings);
        if (sigmas.empty() || policies.empty())
            throw fg::UsageError("pipeline needs at least one sigma and one policy");
        auto dataset = ingest.load();
        auto n = static_cast<std::int64_t>(dataset.size());
        auto ts = fg::parse_timestamp(boundary, parse_ts_format(ingest.ts_format));
        if (!ts) throw fg::UsageError("cannot parse boundary timestamp '" + boundary + "'");
        auto [train_side, test_side] = fg::split_train_test(dataset, *ts);
        auto m = train_side.size();
        (void)test_side;

        auto cfg = learn.trainer_config();
        fg::MetricOptions mopts;
        mopts.workers = cfg.workers;

        fs::create_directories(output_dir);
        std::vector<fg::CellSummary> cells;
        std::vector<std::string> outputs;
        for (const auto& sigma_label : sigmas) {
            for (const auto& policy_name : policies) {
                auto pol = parse_policy(policy_name);
                fg::BlockSchedule schedule(resolve_sigma(sigma_label, n), n);
                auto derived = fg::generate(dataset, schedule, pol, mopts);

                fg::DerivedDataset train_d, test_d;
                train_d.records.assign(derived.records.begin(),
                                       derived.records.begin() + static_cast<std::ptrdiff_t>(m));
                test_d.records.assign(derived.records.begin() + static_cast<std::ptrdiff_t>(m),
                                      derived.records.end());

                std::string cell_name = "s" + sigma_label + "_" + fg::weight_policy_name(pol);
                fs::path cell_dir = fs::path(output_dir) / cell_name;
                fs::create_directories(cell_dir);
                fg::write_derived_file(train_d, (cell_dir / "derived_train.csv").string());
                fg::write_derived_file(test_d, (cell_dir / "derived_test.csv").string());

                auto balanced =
                    learn.no_undersample ? train_d : fg::undersample_derived(train_d, cfg.seed);
                auto outcome = fg::run_training(balanced, cfg);
                fg::save_model(outcome.model, (cell_dir / "model.json").string());

                auto report = fg::evaluate(outcome.model, test_d);
                auto meta = base_meta("pipeline", bindings, ingest.inputs);
                meta.emplace_back("seed", learn.seed);
                meta.emplace_back("sigma", sigma_label);
                meta.emplace_back("policy", fg::weight_policy_name(pol));
                write_text_file(cell_dir / "training_report.txt",
                                fg::training_report_text(outcome));
                write_text_file(cell_dir / "training_report.json",
                                fg::training_report_json(outcome, meta) + "\n");
                write_text_file(cell_dir / "evaluation_report.txt",
                                fg::evaluation_report_text(report));
                write_text_file(cell_dir / "evaluation_report.json",
                                fg::evaluation_report_json(report, meta) + "\n");

                fg::CellSummary cell;
                cell.sigma_label = sigma_label;
                cell.policy = fg::weight_policy_name(pol);
                cell.feature_count = outcome.selection.selected.size();
                cell.most_significant = outcome.selection.selected.empty()
                                            ? std::string()
                                            : fg::feature_display_name(outcome.selection.selected[0]);
                cell.best_c = outcome.grid.best_c;
                cell.best_gamma = outcome.grid.best_gamma;
                cell.robust_mean_f1 = outcome.robust.mean_f1;
                cell.robust_std_f1 = outcome.robust.std_f1;
                cell.robust_mean_svs = outcome.robust.mean_support_vectors;
                cell.support_vectors = outcome.model.support_vectors.rows;
                cell.test = report;
                cells.push_back(std::move(cell));
                outputs.push_back(cell_name);
            }
        }

        auto meta = base_meta("pipeline", bindings, ingest.inputs);
        meta.emplace_back("seed", learn.seed);
        write_text_file(fs::path(output_dir) / "comparison.txt", fg::comparison_text(cells));
        write_text_file(fs::path(output_dir) / "comparison.json",
                        fg::comparison_json(cells, meta) + "\n");
        outputs.push_back("comparison.txt");
        outputs.push_back("comparison.json");
        write_manifest(fs::path(output_dir) / "pipeline_manifest.json", meta, outputs);
        std::cout << fg::comparison_text(cells);
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-feature network intrusion detection pipeline"};
    app.require_subcommand(1);

    ExtractCmd extract_cmd;
    TrainCmd train_cmd;
    EvaluateCmd evaluate_cmd;
    PipelineCmd pipeline_cmd;

    auto* extract = app.add_subcommand("extract", "derive graph features from connection logs");
    extract_cmd.register_on(extract);
    auto* train = app.add_subcommand("train", "fit the detector on a derived dataset");
    train_cmd.register_on(train);
    auto* evaluate = app.add_subcommand("evaluate", "score a model on a derived dataset");
    evaluate_cmd.register_on(evaluate);
    auto* pipeline = app.add_subcommand("pipeline", "run the full sigma x policy matrix");
    pipeline_cmd.register_on(pipeline);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(extract)) return extract_cmd.run();
        if (app.got_subcommand(train)) return train_cmd.run();
        if (app.got_subcommand(evaluate)) return evaluate_cmd.run();
        if (app.got_subcommand(pipeline)) return pipeline_cmd.run();
        throw fg::UsageError("no subcommand selected");
    } catch (const fg::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
