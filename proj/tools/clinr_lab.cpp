// Copyright 2026 The clinr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// clinr-lab: command-line driver for circuit synthesis, lowering, resource
// analysis, graph compilation, experiments, sweeps and dataset export. Every
// subcommand writes its outputs and a manifest.json into a run directory.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <set>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clinr/circuit.hpp"
#include "clinr/clinr.hpp"
#include "clinr/dataset.hpp"
#include "clinr/graph.hpp"
#include "clinr/gse.hpp"
#include "clinr/harness.hpp"
#include "clinr/noise.hpp"
#include "clinr/simulator.hpp"
#include "clinr/trotter.hpp"
#include "json.hpp"

#ifndef CLINR_LAB_VERSION
#define CLINR_LAB_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace clinr;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string fnv1a_hex(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Output directory plus the manifest describing it.
class RunDir {
   public:
    RunDir(std::string command, const std::string& path, std::vector<std::string> args)
        : dir_(path), command_(std::move(command)) {
        fs::create_directories(dir_);
        manifest_["tool"] = "clinr-lab";
        manifest_["version"] = CLINR_LAB_VERSION;
        manifest_["subcommand"] = command_;
        manifest_["arguments"] = std::move(args);
        manifest_["threads"] = default_thread_count();
        manifest_["seeds"] = json::object();
        manifest_["config_hashes"] = json::object();
        manifest_["inputs"] = json::object();
        manifest_["outputs"] = json::array();
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + (dir_ / name).string());
        out << content;
        manifest_["outputs"].push_back({{"file", name}, {"fnv1a", fnv1a_hex(content)}});
    }
    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    void seed(const std::string& key, uint64_t value) { manifest_["seeds"][key] = value; }
    void config_hash(const std::string& key, const std::string& hash) { manifest_["config_hashes"][key] = hash; }
    void input(const std::string& path) { manifest_["inputs"][path] = fnv1a_hex(read_file(path)); }
    void note(const std::string& key, json value) { manifest_[key] = std::move(value); }

    void finish() {
        std::ofstream out(dir_ / "manifest.json");
        out << manifest_.dump(2) << "\n";
        std::cout << command_ << ": wrote " << manifest_["outputs"].size() << " files to " << dir_.string() << "\n";
    }

   private:
    fs::path dir_;
    std::string command_;
    json manifest_;
};

json gate_counts_json(const GateCounts& c) {
    return {{"single_qubit", c.single_qubit}, {"two_qubit", c.two_qubit}, {"zz", c.zz},
            {"virtual_z", c.virtual_z},       {"measurements", c.measurements},
            {"resets", c.resets},             {"noise", c.noise},   {"total_gates", c.total_gates()}};
}

/// Qubit count, gate counts by kind and, for native circuits, the schedule.
json circuit_metadata(const Circuit& c) {
    json j = {{"qubits", c.num_qubits()},
              {"records", c.num_records()},
              {"instructions", c.ops().size()},
              {"counts", gate_counts_json(count_gates(c))}};
    json by_kind = json::object();
    for (const auto& g : c.ops()) {
        std::string name(gate_name(g.kind));
        by_kind[name] = by_kind.value(name, 0) + 1;
    }
    j["by_kind"] = by_kind;
    bool native = true;
    for (const auto& g : c.ops()) native = native && (traits(g.kind).native || traits(g.kind).noise);
    if (native) {
        auto lc = schedule_layers(c);
        j["layers"] = lc.layers.size();
        j["duration_s"] = lc.total_duration();
    }
    return j;
}

json stats_json(const CircuitStats& s) {
    return {{"qubits", s.qubits},         {"zz", s.zz},
            {"native_gates", s.native_gates}, {"layers", s.layers},
            {"duration_s", s.duration},   {"noise_instructions", s.noise_instructions},
            {"mean_pair_rate", s.mean_pair_rate}};
}

ExperimentConfig load_experiment(const std::string& path) { return config_from_json(read_json(path)); }

PauliString parse_check_text(const std::string& text) {
    bool bits = text.size() == 24 && text.find_first_not_of("01") == std::string::npos;
    return bits ? decode_pauli_bits(text) : PauliString::from_sparse(text, 12, 6);
}

json records_json(const std::vector<ExperimentRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr;
}

// ---------------------------------------------------------------- synth

int cmd_synth(RunDir& out, const std::string& what, size_t graph_index, uint64_t seed, const std::string& config) {
    if (what == "pair-table") {
        PairTableParams params;
        if (!config.empty()) {
            out.input(config);
            json j = read_json(config);
            params.num_ions = j.value("num_ions", params.num_ions);
            params.target_small = j.value("target_small", params.target_small);
            params.target_wide = j.value("target_wide", params.target_wide);
            params.ion_sigma = j.value("ion_sigma", params.ion_sigma);
            params.pair_sigma = j.value("pair_sigma", params.pair_sigma);
            params.distance_weight = j.value("distance_weight", params.distance_weight);
        }
        auto fit = synth_pair_table(seed, params);
        out.seed("synth_seed", seed);
        out.write("pair_table.csv", fit.table.to_csv());
        out.write_json("pair_table_fit.json", {{"spread", fit.spread},
                                               {"small_mean", fit.small_mean},
                                               {"wide_mean", fit.wide_mean},
                                               {"table_mean", fit.table.mean()},
                                               {"num_ions", fit.table.num_ions()}});
        return 0;
    }
    Circuit c;
    if (what == "trotter") {
        c = physical_trotter_circuit();
    } else if (what == "prep") {
        c = gse::prep_circuit();
    } else if (what == "block") {
        c = trotter_block();
    } else if (what == "naive-resource") {
        c = naive_resource_circuit(block_resource());
    } else if (what == "graph-resource") {
        const auto& pool = block_resource_compilations();
        if (graph_index >= pool.size()) throw std::invalid_argument("graph index out of range");
        c = emit_graph_circuit(pool[graph_index]);
    } else {
        throw std::invalid_argument("unknown synth target '" + what + "'");
    }
    out.write("circuit.stim", export_stim(c));
    json meta = circuit_metadata(c);
    meta["target"] = what;
    meta["native"] = circuit_metadata(lower_to_native(c));
    out.write_json("circuit.json", meta);
    return 0;
}

// ---------------------------------------------------------------- lower / export

int cmd_lower(RunDir& out, const std::string& input) {
    out.input(input);
    Circuit c = parse_stim(read_file(input));
    Circuit native = lower_to_native(c);
    out.write("native.stim", export_stim(native));
    out.write_json("native.json", {{"input", circuit_metadata(c)}, {"native", circuit_metadata(native)}});
    return 0;
}

int cmd_export(RunDir& out, const std::string& config) {
    out.input(config);
    auto cfg = load_experiment(config);
    out.config_hash(cfg.name, config_fingerprint(cfg));
    auto built = build_experiment(cfg);
    out.write("logical.stim", export_stim(built.logical));
    out.write("native.stim", export_stim(built.native));
    out.write("noisy.stim", export_stim(built.noisy));
    json meta = {{"config", to_json(cfg)},
                 {"fingerprint", config_fingerprint(cfg)},
                 {"stats", stats_json(built.stats)},
                 {"mapping", built.mapping.ion},
                 {"logical", circuit_metadata(built.logical)},
                 {"native", circuit_metadata(built.native)}};
    if (built.layout) {
        json checks = json::array();
        for (const auto& ch : built.layout->checks) {
            checks.push_back({{"ancilla_records", ch.ancilla},
                              {"cat_flag_records", ch.cat_flag},
                              {"expected_parity", ch.expected},
                              {"schedule", schedule_name(ch.schedule)}});
        }
        meta["layout"] = {{"data_records", built.layout->data_records},
                          {"first_records", built.layout->first_records},
                          {"output_records", built.layout->output_records},
                          {"checks", checks}};
    }
    out.write_json("circuit.json", meta);
    return 0;
}

// ---------------------------------------------------------------- resource

int cmd_resource(RunDir& out, size_t max_weight) {
    const auto& spec = block_resource();
    auto all = enumerate_stabilizers(spec.generators);
    std::ostringstream csv;
    csv << "index,sign,sparse,weight\n";
    size_t listed = 0;
    for (size_t i = 0; i < all.size(); i++) {
        const auto& s = all[i];
        if (s.weight() >= max_weight) continue;
        PauliString letters = s;
        letters.set_phase(0);
        csv << i << ',' << (s.phase() == 2 ? '-' : '+') << ",\"" << letters.sparse_str(spec.n) << "\"," << s.weight()
            << "\n";
        listed++;
    }
    out.write("stabilizers.csv", csv.str());
    Circuit naive = naive_resource_circuit(spec);
    out.write("naive_resource.stim", export_stim(naive));

    json gens = json::array();
    for (const auto& g : spec.generators) gens.push_back(g.str());
    json pairs = json::array();
    for (const auto& p : reference_pairs()) {
        auto a = parse_check(p.first, Schedule::MCM, spec, spec.n);
        auto b = parse_check(p.second, Schedule::ECM, spec, spec.n);
        pairs.push_back({{"label", p.label},
                         {"first", p.first},
                         {"first_sign", a.stabilizer.sign()},
                         {"second", p.second},
                         {"second_sign", b.stabilizer.sign()}});
    }
    size_t n = all.size();
    out.write_json("resource.json", {{"n", spec.n},
                                     {"qubits", 2 * spec.n},
                                     {"generators", gens},
                                     {"nonidentity_stabilizers", n},
                                     {"unordered_pairs", n * (n - 1) / 2},
                                     {"listed_below_weight", max_weight},
                                     {"listed", listed},
                                     {"naive", circuit_metadata(naive)},
                                     {"naive_native", circuit_metadata(lower_to_native(naive))},
                                     {"reference_pairs", pairs}});
    return 0;
}

// ---------------------------------------------------------------- compile-graph

int cmd_compile_graph(RunDir& out, const std::string& config, const std::string& target, SearchOptions opts) {
    std::string tgt = target;
    if (!config.empty()) {
        out.input(config);
        json j = read_json(config);
        opts.iterations = j.value("iterations", opts.iterations);
        opts.restarts = j.value("restarts", opts.restarts);
        opts.keep = j.value("keep", opts.keep);
        opts.seed = j.value("seed", opts.seed);
        tgt = j.value("target", tgt);
    }
    std::vector<PauliString> gens;
    if (tgt == "resource") gens = block_resource().generators;
    else if (tgt == "prep") gens = gse::prep_generators();
    else throw std::invalid_argument("compile-graph target must be resource or prep");
    out.seed("search_seed", opts.seed);
    out.note("search", {{"target", tgt},
                        {"iterations", opts.iterations},
                        {"restarts", opts.restarts},
                        {"keep", opts.keep}});

    auto found = search_compilations(gens, opts);
    Tableau target_state = Tableau::from_stabilizers(gens);
    json arr = json::array();
    std::ostringstream csv;
    csv << "index,edges,zz,native,round_trip,adjacency\n";
    for (size_t i = 0; i < found.size(); i++) {
        Circuit c = emit_graph_circuit(found[i]);
        bool ok = run_noiseless(c).same_state(target_state);
        arr.push_back(to_json(found[i]));
        csv << i << ',' << found[i].cost.edges << ',' << found[i].cost.zz << ',' << found[i].cost.native << ','
            << (ok ? 1 : 0) << ',' << found[i].graph.adjacency_bits() << "\n";
        out.write("compilation_" + std::to_string(i) + ".stim", export_stim(c));
    }
    out.write_json("compilations.json", arr);
    out.write("compilations.csv", csv.str());
    return 0;
}

// ---------------------------------------------------------------- run

int run_pair(RunDir& out, const json& pair) {
    GraphCompilation gc;
    if (pair.contains("compilation")) {
        gc = compilation_from_json(pair.at("compilation"));
    } else if (pair.contains("compilation_file")) {
        auto path = pair.at("compilation_file").get<std::string>();
        out.input(path);
        json j = read_json(path);
        size_t index = pair.value("compilation_index", size_t{0});
        if (j.is_array()) {
            if (index >= j.size()) throw std::invalid_argument("compilation_index out of range");
            j = j.at(index);
        }
        gc = compilation_from_json(j);
    } else {
        const auto& pool = block_resource_compilations();
        size_t index = pair.value("graph_index", size_t{0});
        if (index >= pool.size()) throw std::invalid_argument("graph_index out of range");
        gc = pool[index];
    }
    auto p1 = parse_check_text(pair.at("pauli1").get<std::string>());
    auto p2 = parse_check_text(pair.at("pauli2").get<std::string>());
    double level = pair.value("noise_level", 1e-3);
    size_t shots = pair.value("shots", size_t{10000});
    uint64_t seed = pair.value("seed", uint64_t{1});
    out.seed("pair", seed);
    out.config_hash("pair", fnv1a_hex(pair.dump()));
    DatasetRow row = evaluate_pair(gc, p1, p2, level, shots, seed);
    row.graph_id = pair.value("graph_id", size_t{0});
    out.write_json("row.json", to_json(row));
    out.write("row.csv", dataset_csv_header() + dataset_csv_row(row));
    return 0;
}

int cmd_run(RunDir& out, const std::string& config) {
    out.input(config);
    json j = read_json(config);
    if (j.is_object() && j.contains("pair")) {
        if (j.size() != 1) throw std::invalid_argument("a pair run config holds only the 'pair' object");
        return run_pair(out, j.at("pair"));
    }
    auto cfg = config_from_json(j);
    out.seed(cfg.name, cfg.seed);
    out.config_hash(cfg.name, config_fingerprint(cfg));
    auto record = run_experiment(cfg);
    std::vector<ExperimentRecord> rs{record};
    out.write_json("config.json", to_json(cfg));
    out.write_json("record.json", to_json(record));
    out.write("records.csv", records_csv(rs));
    return 0;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(RunDir& out, const std::string& config, std::string suite) {
    json j = json::object();
    if (!config.empty()) {
        out.input(config);
        j = read_json(config);
    }
    ExperimentConfig base = j.contains("base") ? config_from_json(j.at("base")) : ExperimentConfig{};
    if (suite.empty()) suite = j.value("suite", std::string("pairs"));
    std::vector<ExperimentConfig> configs;
    if (suite == "pairs") {
        configs = reference_pair_configs(base);
    } else if (suite == "schedules") {
        configs = schedule_configs(base);
    } else if (suite == "random") {
        json r = j.value("random", json::object());
        size_t max_checks = r.value("max_checks", size_t{5});
        size_t per_r = r.value("per_r", size_t{4});
        size_t max_weight = r.value("max_weight", size_t{8});
        Schedule sched = parse_schedule(r.value("schedule", std::string("MCM")));
        uint64_t seed = r.value("seed", uint64_t{7});
        out.seed("plan_sampling", seed);
        ExperimentConfig direct = base;
        direct.name = "direct";
        direct.variant = Variant::Direct;
        direct.checks.clear();
        configs.push_back(direct);
        auto drawn = random_plan_configs(base, max_checks, per_r, max_weight, sched, seed);
        configs.insert(configs.end(), drawn.begin(), drawn.end());
        for (size_t i = 0; i < configs.size(); i++) configs[i].seed = base.seed + i;
    } else if (suite == "list") {
        if (!j.contains("configs")) throw std::invalid_argument("suite 'list' needs a configs array");
        for (const auto& c : j.at("configs")) configs.push_back(config_from_json(c, base));
    } else {
        throw std::invalid_argument("unknown sweep suite '" + suite + "'");
    }
    json cfgs = json::array();
    for (const auto& c : configs) {
        out.seed(c.name, c.seed);
        out.config_hash(c.name, config_fingerprint(c));
        cfgs.push_back(to_json(c));
    }
    out.note("suite", suite);
    auto records = sweep(configs);
    out.write_json("configs.json", cfgs);
    out.write_json("sweep.json", records_json(records));
    out.write("sweep.csv", records_csv(records));
    return 0;
}

// ---------------------------------------------------------------- dataset

int cmd_dataset(RunDir& out, const std::string& config, const std::string& compilations, DatasetOptions opts) {
    if (!config.empty()) {
        out.input(config);
        json j = read_json(config);
        static const std::set<std::string> known{"graphs", "pairs_per_graph", "shots", "noise_level",
                                                 "band",   "max_weight",      "seed"};
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!known.count(it.key())) throw std::invalid_argument("unknown dataset key '" + it.key() + "'");
        }
        opts.graphs = j.value("graphs", opts.graphs);
        opts.pairs_per_graph = j.value("pairs_per_graph", opts.pairs_per_graph);
        opts.shots = j.value("shots", opts.shots);
        opts.noise_level = j.value("noise_level", opts.noise_level);
        opts.band = j.value("band", opts.band);
        opts.max_weight = j.value("max_weight", opts.max_weight);
        opts.seed = j.value("seed", opts.seed);
    }
    std::vector<GraphCompilation> pool;
    if (!compilations.empty()) {
        out.input(compilations);
        for (const auto& c : read_json(compilations)) pool.push_back(compilation_from_json(c));
    } else {
        pool = block_resource_compilations();
    }
    json used = json::array();
    for (size_t i = 0; i < std::min(opts.graphs, pool.size()); i++) used.push_back(to_json(pool[i]));
    json settings = {{"graphs", opts.graphs},        {"pairs_per_graph", opts.pairs_per_graph},
                     {"shots", opts.shots},          {"noise_level", opts.noise_level},
                     {"band", opts.band},            {"max_weight", opts.max_weight},
                     {"seed", opts.seed}};
    out.seed("dataset", opts.seed);
    out.config_hash("dataset", fnv1a_hex(settings.dump()));
    out.note("dataset", settings);

    std::string csv = dataset_csv_header();
    size_t rows = 0;
    export_dataset(pool, opts, [&](const DatasetRow& r) {
        csv += dataset_csv_row(r);
        if (++rows % 100 == 0) std::cerr << "dataset: " << rows << " rows\n";
    });
    out.write("dataset.csv", csv);
    json schema = dataset_schema();
    schema["settings"] = settings;
    schema["rows"] = rows;
    out.write_json("dataset_schema.json", schema);
    out.write_json("compilations.json", used);
    return 0;
}

// ---------------------------------------------------------------- report

int cmd_report(RunDir& out, const std::vector<std::string>& inputs) {
    json records = json::array();
    std::vector<std::string> rows;
    std::string header;
    for (const auto& dir : inputs) {
        for (const char* name : {"sweep.csv", "records.csv"}) {
            fs::path p = fs::path(dir) / name;
            if (!fs::exists(p)) continue;
            out.input(p.string());
            std::istringstream in(read_file(p.string()));
            std::string line;
            std::getline(in, header);
            while (std::getline(in, line)) {
                if (!line.empty()) rows.push_back(line);
            }
        }
        for (const char* name : {"sweep.json", "record.json"}) {
            fs::path p = fs::path(dir) / name;
            if (!fs::exists(p)) continue;
            json j = read_json(p.string());
            if (j.is_array()) {
                for (auto& r : j) records.push_back(r);
            } else {
                records.push_back(j);
            }
        }
    }

    // Circuit statistics of the direct run and of naive and graph CliNR.
    json table = json::array();
    auto row = [&](const std::string& label, ExperimentConfig cfg) {
        cfg.noiseless = true;
        auto b = build_experiment(cfg);
        table.push_back({{"label", label}, {"stats", stats_json(b.stats)}});
    };
    ExperimentConfig direct;
    row("physical_trotter", direct);
    ExperimentConfig naive;
    naive.variant = Variant::Clinr;
    naive.checks = reference_plan(reference_pairs()[0]);
    row("clinr_naive_S1", naive);
    for (size_t i = 0; i < std::min<size_t>(3, block_resource_compilations().size()); i++) {
        ExperimentConfig g = naive;
        g.graph_resource = true;
        g.graph_index = i;
        row("clinr_graph" + std::to_string(i) + "_S1", g);
    }

    out.write_json("report.json",
                   {{"records", records}, {"circuits", table}, {"hardware_reference", hardware_reference()}});
    std::string csv = header.empty() ? std::string() : header + "\n";
    for (const auto& r : rows) csv += r + "\n";
    out.write("report.csv", csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clinr-lab: CliNR / GSE stabilizer-circuit laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CLINR_LAB_VERSION);
    std::string out_dir;
    auto add_out = [&](CLI::App* sub, const std::string& name) {
        out_dir = "runs/" + name;
        sub->add_option("-o,--out", out_dir, "run directory")->capture_default_str();
    };

    std::string what = "trotter", config, input, target = "resource", suite;
    size_t graph_index = 0, max_weight = 13;
    uint64_t seed = 2026;
    SearchOptions search{3000, 8, 64, 7};
    DatasetOptions dopts;
    std::string compilations;
    std::vector<std::string> inputs;

    auto* synth = app.add_subcommand("synth", "emit a circuit (trotter, prep, block, naive-resource, "
                                              "graph-resource) or a synthetic pair table (pair-table)");
    synth->add_option("what", what, "target")->capture_default_str();
    synth->add_option("--graph-index", graph_index, "graph-resource compilation rank");
    synth->add_option("--seed", seed, "pair-table seed")->capture_default_str();
    synth->add_option("-c,--config", config, "pair-table parameters (JSON)");

    auto* lower = app.add_subcommand("lower", "lower a Stim-format circuit to the native gate set");
    lower->add_option("input", input, "Stim file")->required();

    auto* exp = app.add_subcommand("export", "build an experiment and export its logical, native and noisy circuits");
    exp->add_option("-c,--config", config, "experiment config (JSON)")->required();

    auto* res = app.add_subcommand("resource", "resource state generators, stabilizers and reference pairs");
    res->add_option("--max-weight", max_weight, "list stabilizers below this weight")->capture_default_str();

    auto* cg = app.add_subcommand("compile-graph", "search LC-equivalent graph compilations");
    cg->add_option("-c,--config", config, "search settings (JSON)");
    cg->add_option("--target", target, "resource or prep")->capture_default_str();
    cg->add_option("--iterations", search.iterations)->capture_default_str();
    cg->add_option("--restarts", search.restarts)->capture_default_str();
    cg->add_option("--keep", search.keep)->capture_default_str();
    cg->add_option("--seed", search.seed)->capture_default_str();

    auto* run = app.add_subcommand("run", "run one experiment, or one dataset check pair ({\"pair\": {...}})");
    run->add_option("-c,--config", config, "config (JSON)")->required();

    auto* sw = app.add_subcommand("sweep", "run a suite of experiments (pairs, schedules, random, list)");
    sw->add_option("-c,--config", config, "sweep config (JSON)");
    sw->add_option("--suite", suite, "overrides the config suite");

    auto* ds = app.add_subcommand("dataset", "export the check-pair training dataset");
    ds->add_option("-c,--config", config, "dataset settings (JSON)");
    ds->add_option("--compilations", compilations, "compilations.json from compile-graph");
    ds->add_option("--graphs", dopts.graphs)->capture_default_str();
    ds->add_option("--pairs", dopts.pairs_per_graph)->capture_default_str();
    ds->add_option("--shots", dopts.shots)->capture_default_str();
    ds->add_option("--noise", dopts.noise_level)->capture_default_str();
    ds->add_option("--seed", dopts.seed)->capture_default_str();

    auto* rep = app.add_subcommand("report", "collect run directories into a report");
    rep->add_option("inputs", inputs, "run directories")->required();

    for (auto* sub : {synth, lower, exp, res, cg, run, sw, ds, rep}) add_out(sub, sub->get_name());

    CLI11_PARSE(app, argc, argv);
    try {
        auto* sub = app.get_subcommands().front();
        std::vector<std::string> args(argv + 1, argv + argc);
        RunDir dir(sub->get_name(), out_dir, args);
        int rc = 0;
        if (sub == synth) rc = cmd_synth(dir, what, graph_index, seed, config);
        else if (sub == lower) rc = cmd_lower(dir, input);
        else if (sub == exp) rc = cmd_export(dir, config);
        else if (sub == res) rc = cmd_resource(dir, max_weight);
        else if (sub == cg) rc = cmd_compile_graph(dir, config, target, search);
        else if (sub == run) rc = cmd_run(dir, config);
        else if (sub == sw) rc = cmd_sweep(dir, config, suite);
        else if (sub == ds) rc = cmd_dataset(dir, config, compilations, dopts);
        else if (sub == rep) rc = cmd_report(dir, inputs);
        dir.finish();
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
