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


#include "clinr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clinr/gse.hpp"
#include "clinr/trotter.hpp"

namespace clinr {

using nlohmann::json;

TvdBreakdown tvd(const OccupationCounts& counts) {
    size_t total = 0;
    for (const auto& s : gse::even_states()) {
        auto it = counts.find(s);
        if (it != counts.end()) total += it->second;
    }
    if (total == 0) throw std::invalid_argument("tvd of an empty histogram");
    auto p = [&](const char* key) {
        auto it = counts.find(key);
        return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    };
    TvdBreakdown b;
    b.incorrect = p("000") + p("101");
    b.tvd = 0.5 * (std::abs(p("110") - 0.5) + std::abs(p("011") - 0.5) + b.incorrect);
    b.bias = std::max(0.0, b.tvd - b.incorrect);
    return b;
}

double tvd(const std::map<std::string, double>& p, const std::map<std::string, double>& q) {
    std::set<std::string> keys;
    for (const auto& [k, v] : p) keys.insert(k);
    for (const auto& [k, v] : q) keys.insert(k);
    double s = 0.0;
    for (const auto& k : keys) {
        auto a = p.find(k), b = q.find(k);
        s += std::abs((a == p.end() ? 0.0 : a->second) - (b == q.end() ? 0.0 : b->second));
    }
    return 0.5 * s;
}

double bias_significance(size_t n110, size_t n011) {
    size_t n = n110 + n011;
    if (n == 0) throw std::invalid_argument("bias_significance needs at least one count");
    size_t k = std::min(n110, n011);
    // log P(X <= k), X ~ Bin(n, 1/2), by log-sum-exp over exact log pmfs.
    long double ln2 = std::log(2.0L);
    long double lgn = std::lgamma(static_cast<long double>(n) + 1);
    auto log_pmf = [&](size_t i) {
        return lgn - std::lgamma(static_cast<long double>(i) + 1) - std::lgamma(static_cast<long double>(n - i) + 1) -
               static_cast<long double>(n) * ln2;
    };
    long double top = log_pmf(k);  // the pmf increases up to n/2
    long double sum = 0.0L;
    for (size_t i = 0; i <= k; i++) sum += std::exp(log_pmf(i) - top);
    long double log_tail = top + std::log(sum);
    long double p_value = std::min(1.0L, 2.0L * std::exp(log_tail));
    return static_cast<double>(1.0L - p_value);
}

StandardErrors bootstrap_errors(const OccupationCounts& counts, size_t resamples, uint64_t seed) {
    const auto& states = gse::even_states();
    std::vector<double> prob;
    size_t total = 0;
    for (const auto& s : states) {
        auto it = counts.find(s);
        prob.push_back(it == counts.end() ? 0.0 : static_cast<double>(it->second));
        total += it == counts.end() ? 0 : it->second;
    }
    if (total == 0 || resamples < 2) return {};
    for (auto& v : prob) v /= static_cast<double>(total);

    std::mt19937_64 rng(seed);
    std::vector<double> t(resamples), inc(resamples);
    for (size_t r = 0; r < resamples; r++) {
        // Sequential binomials give an exact multinomial draw.
        OccupationCounts sample;
        size_t left = total;
        double mass = 1.0;
        for (size_t i = 0; i < states.size(); i++) {
            size_t c = left;
            if (i + 1 < states.size()) {
                double q = mass > 0 ? std::clamp(prob[i] / mass, 0.0, 1.0) : 0.0;
                c = std::binomial_distribution<size_t>(left, q)(rng);
            }
            sample[states[i]] = c;
            left -= c;
            mass -= prob[i];
        }
        auto b = tvd(sample);
        t[r] = b.tvd;
        inc[r] = b.incorrect;
    }
    auto stddev = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(v.size());
        double s = 0.0;
        for (double x : v) s += (x - m) * (x - m);
        return std::sqrt(s / static_cast<double>(v.size() - 1));
    };
    return {stddev(t), stddev(inc)};
}

// ---------------------------------------------------------------------------
// Configuration.

namespace {

std::string variant_name(Variant v) { return v == Variant::Direct ? "direct" : "clinr"; }

Variant parse_variant(const std::string& s) {
    if (s == "direct") return Variant::Direct;
    if (s == "clinr") return Variant::Clinr;
    throw std::invalid_argument("unknown variant '" + s + "' (expected direct or clinr)");
}

std::string mapping_name(MappingPolicy m) { return m == MappingPolicy::Identity ? "identity" : "optimized"; }

MappingPolicy parse_mapping(const std::string& s) {
    if (s == "identity") return MappingPolicy::Identity;
    if (s == "optimized") return MappingPolicy::Optimized;
    throw std::invalid_argument("unknown mapping policy '" + s + "'");
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ExperimentConfig config_from_json(const json& j, const ExperimentConfig& defaults) {
    if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
    static const std::set<std::string> known{"name",      "variant", "resource", "graph_index", "checks",
                                             "qubit_offset", "verify_cat", "noiseless", "noise", "mapping",
                                             "shots",     "seed",    "threads"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");
    }
    ExperimentConfig cfg = defaults;
    read_opt(j, "name", cfg.name);
    if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("resource")) {
        auto r = j.at("resource").get<std::string>();
        if (r != "naive" && r != "graph") throw std::invalid_argument("resource must be naive or graph");
        cfg.graph_resource = r == "graph";
    }
    read_opt(j, "graph_index", cfg.graph_index);
    if (j.contains("checks")) {
        cfg.checks.clear();
        for (const auto& c : j.at("checks")) {
            CheckSpec spec;
            spec.pauli = c.at("pauli").get<std::string>();
            if (c.contains("schedule")) spec.schedule = parse_schedule(c.at("schedule").get<std::string>());
            cfg.checks.push_back(spec);
        }
    }
    read_opt(j, "qubit_offset", cfg.qubit_offset);
    read_opt(j, "verify_cat", cfg.verify_cat);
    read_opt(j, "noiseless", cfg.noiseless);
    if (j.contains("noise")) {
        const auto& n = j.at("noise");
        auto& m = cfg.noise;
        read_opt(n, "p1q_z", m.p1q_z);
        read_opt(n, "t2_star", m.t2_star);
        read_opt(n, "p_spam", m.p_spam);
        read_opt(n, "scale", m.scale);
        if (n.contains("durations")) {
            const auto& d = n.at("durations");
            read_opt(d, "single", m.durations.single);
            read_opt(d, "two", m.durations.two);
            read_opt(d, "measure", m.durations.measure);
        }
        if (n.contains("channels")) {
            const auto& ch = n.at("channels");
            read_opt(ch, "single_qubit", m.single_qubit);
            read_opt(ch, "two_qubit", m.two_qubit);
            read_opt(ch, "idle", m.idle);
            read_opt(ch, "readout", m.readout);
        }
        if (n.contains("pair_table")) {
            const auto& pt = n.at("pair_table");
            cfg.pair_table = {};
            if (pt.contains("uniform")) cfg.pair_table.uniform = pt.at("uniform").get<double>();
            if (pt.contains("synth_seed")) cfg.pair_table.synth_seed = pt.at("synth_seed").get<uint64_t>();
            read_opt(pt, "csv", cfg.pair_table.csv_path);
            int sources = cfg.pair_table.uniform.has_value() + cfg.pair_table.synth_seed.has_value() +
                          !cfg.pair_table.csv_path.empty();
            if (sources != 1) throw std::invalid_argument("pair_table needs exactly one of uniform, synth_seed, csv");
        }
    }
    if (j.contains("mapping")) cfg.mapping = parse_mapping(j.at("mapping").get<std::string>());
    read_opt(j, "shots", cfg.shots);
    read_opt(j, "seed", cfg.seed);
    read_opt(j, "threads", cfg.threads);
    if (cfg.shots == 0) throw std::invalid_argument("shots must be at least 1");
    if (cfg.variant == Variant::Direct && (!cfg.checks.empty() || cfg.graph_resource)) {
        throw std::invalid_argument("checks and resource only apply to the clinr variant");
    }
    cfg.noise.validate();
    return cfg;
}

json to_json(const ExperimentConfig& cfg) {
    json checks = json::array();
    for (const auto& c : cfg.checks) checks.push_back({{"pauli", c.pauli}, {"schedule", schedule_name(c.schedule)}});
    json pt = json::object();
    if (cfg.pair_table.uniform) pt["uniform"] = *cfg.pair_table.uniform;
    if (cfg.pair_table.synth_seed) pt["synth_seed"] = *cfg.pair_table.synth_seed;
    if (!cfg.pair_table.csv_path.empty()) pt["csv"] = cfg.pair_table.csv_path;
    const auto& m = cfg.noise;
    return {
        {"name", cfg.name},
        {"variant", variant_name(cfg.variant)},
        {"resource", cfg.graph_resource ? "graph" : "naive"},
        {"graph_index", cfg.graph_index},
        {"checks", checks},
        {"qubit_offset", cfg.qubit_offset},
        {"verify_cat", cfg.verify_cat},
        {"noiseless", cfg.noiseless},
        {"noise",
         {{"p1q_z", m.p1q_z},
          {"t2_star", m.t2_star},
          {"p_spam", m.p_spam},
          {"scale", m.scale},
          {"durations", {{"single", m.durations.single}, {"two", m.durations.two}, {"measure", m.durations.measure}}},
          {"channels",
           {{"single_qubit", m.single_qubit}, {"two_qubit", m.two_qubit}, {"idle", m.idle}, {"readout", m.readout}}},
          {"pair_table", pt}}},
        {"mapping", mapping_name(cfg.mapping)},
        {"shots", cfg.shots},
        {"seed", cfg.seed},
    };
}

std::string config_fingerprint(const ExperimentConfig& cfg) {
    json j = to_json(cfg);
    j.erase("name");
    std::string text = j.dump();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

NoiseModel resolve_noise(const ExperimentConfig& cfg) {
    NoiseModel m = cfg.noise;
    const auto& src = cfg.pair_table;
    if (src.uniform) {
        m.pair_table = PairErrorTable::uniform(m.pair_table.num_ions(), *src.uniform);
    } else if (src.synth_seed) {
        static std::mutex mu;
        static std::map<uint64_t, PairErrorTable> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(*src.synth_seed);
        if (it == cache.end()) it = cache.emplace(*src.synth_seed, synth_pair_table(*src.synth_seed).table).first;
        m.pair_table = it->second;
    } else if (!src.csv_path.empty()) {
        m.pair_table = PairErrorTable::from_csv(read_file(src.csv_path));
    }
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------
// Experiments.

const ResourceSpec& block_resource() {
    static const ResourceSpec spec = bell_clifford_resource(trotter_block());
    return spec;
}

const std::vector<GraphCompilation>& block_resource_compilations() {
    static const std::vector<GraphCompilation> pool = [] {
        SearchOptions options;
        options.iterations = 3000;
        options.restarts = 8;
        options.keep = 64;
        options.seed = 7;
        return search_compilations(block_resource().generators, options);
    }();
    return pool;
}

BuiltExperiment build_experiment(const ExperimentConfig& cfg) {
    BuiltExperiment b;
    if (cfg.variant == Variant::Direct) {
        b.logical = physical_trotter_circuit();
    } else {
        const auto& spec = block_resource();
        VerificationPlan plan;
        for (const auto& c : cfg.checks) plan.checks.push_back(parse_check(c.pauli, c.schedule, spec, cfg.qubit_offset));
        Circuit resource;
        if (cfg.graph_resource) {
            const auto& pool = block_resource_compilations();
            if (cfg.graph_index >= pool.size()) {
                throw std::invalid_argument("graph_index " + std::to_string(cfg.graph_index) + " out of range (" +
                                            std::to_string(pool.size()) + " compilations)");
            }
            resource = emit_graph_circuit(pool[cfg.graph_index]);
        } else {
            resource = naive_resource_circuit(spec);
        }
        ClinrOptions options;
        options.verify_cat = cfg.verify_cat;
        auto built = clinr_circuit(gse::prep_circuit(), spec, plan, &resource, options);
        b.logical = std::move(built.circuit);
        b.layout = std::move(built.layout);
    }
    b.native = lower_to_native(b.logical);
    NoiseModel model = resolve_noise(cfg);
    LayeredCircuit lc = schedule_layers(b.native, model.durations);
    b.mapping = cfg.mapping == MappingPolicy::Optimized ? optimize_mapping(b.native, model.pair_table)
                                                        : QubitMapping::identity(b.native.num_qubits());
    b.noisy = cfg.noiseless ? lc.flatten() : attach_noise(lc, model, b.mapping);

    auto counts = count_gates(b.native);
    b.stats.qubits = b.native.num_qubits();
    b.stats.zz = counts.zz;
    b.stats.native_gates = counts.total_gates();
    b.stats.layers = lc.layers.size();
    b.stats.duration = lc.total_duration();
    b.stats.noise_instructions = count_gates(b.noisy).noise;
    b.stats.mean_pair_rate = usage_weighted_mean(interactions(b.native), model.pair_table, b.mapping);
    return b;
}

ExperimentRecord evaluate_batch(const BuiltExperiment& built, const ShotBatch& batch) {
    ExperimentRecord r;
    r.shots = batch.shots();
    r.seed = batch.seed();
    for (const auto& s : gse::even_states()) r.counts[s] = 0;
    if (built.layout) r.check_rejections.assign(built.layout->checks.size(), 0);
    for (size_t s = 0; s < batch.shots(); s++) {
        auto rec = batch.shot(s);
        gse::DecodedShot d;
        if (built.layout) {
            auto shot = interpret_shot(rec, *built.layout);
            for (size_t k = 0; k < shot.check_parity.size(); k++) r.check_rejections[k] += shot.check_parity[k];
            if (!shot.accepted) {
                r.rejected_checks++;
                continue;
            }
            d = gse::decode(shot.output);
        } else {
            d = gse::decode(rec.subspan(0, gse::kQubits));
        }
        if (d.odd_parity) {
            r.rejected_parity++;
            continue;
        }
        r.counts[d.key()]++;
        r.accepted++;
    }
    r.acceptance_rate = static_cast<double>(r.accepted) / static_cast<double>(r.shots);
    r.stats = built.stats;
    if (r.accepted == 0) {
        r.empty = true;
        double nan = std::numeric_limits<double>::quiet_NaN();
        r.metrics = {nan, nan, nan};
        r.bias_significance = nan;
        r.se = {nan, nan};
        return r;
    }
    r.metrics = tvd(r.counts);
    r.bias_significance = bias_significance(r.counts["110"], r.counts["011"]);
    r.se = bootstrap_errors(r.counts, 200, batch.seed() ^ 0x5eed5eedULL);
    return r;
}

ExperimentRecord run_experiment(const ExperimentConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    BuiltExperiment built = build_experiment(cfg);
    RunOptions options;
    options.threads = cfg.threads;
    ShotBatch batch = run_batch(built.noisy, cfg.shots, cfg.seed, options);
    ExperimentRecord r = evaluate_batch(built, batch);
    r.name = cfg.name;
    r.fingerprint = config_fingerprint(cfg);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

}  // namespace

json to_json(const ExperimentRecord& r) {
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    return {
        {"name", r.name},
        {"fingerprint", r.fingerprint},
        {"seed", r.seed},
        {"shots", r.shots},
        {"counts", counts},
        {"rejected_checks", r.rejected_checks},
        {"rejected_parity", r.rejected_parity},
        {"check_rejections", r.check_rejections},
        {"accepted", r.accepted},
        {"acceptance_rate", r.acceptance_rate},
        {"empty", r.empty},
        {"tvd", number_or_null(r.metrics.tvd)},
        {"tvd_se", number_or_null(r.se.tvd)},
        {"bias_component", number_or_null(r.metrics.bias)},
        {"incorrect_component", number_or_null(r.metrics.incorrect)},
        {"incorrect_se", number_or_null(r.se.incorrect)},
        {"bias_significance", number_or_null(r.bias_significance)},
        {"circuit",
         {{"qubits", r.stats.qubits},
          {"zz", r.stats.zz},
          {"native_gates", r.stats.native_gates},
          {"layers", r.stats.layers},
          {"duration_s", r.stats.duration},
          {"noise_instructions", r.stats.noise_instructions},
          {"mean_pair_rate", r.stats.mean_pair_rate}}},
        {"wall_seconds", r.wall_seconds},
    };
}

std::string records_csv(std::span<const ExperimentRecord> records) {
    std::ostringstream out;
    out << "name,fingerprint,seed,shots,n000,n110,n101,n011,rejected_checks,rejected_parity,accepted,"
           "acceptance_rate,tvd,tvd_se,bias_component,incorrect_component,incorrect_se,bias_significance,"
           "qubits,zz,native_gates\n";
    auto num = [](double v) {
        if (std::isnan(v)) return std::string();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        return std::string(buf);
    };
    for (const auto& r : records) {
        auto count = [&](const char* k) {
            auto it = r.counts.find(k);
            return it == r.counts.end() ? size_t{0} : it->second;
        };
        out << r.name << ',' << r.fingerprint << ',' << r.seed << ',' << r.shots << ',' << count("000") << ','
            << count("110") << ',' << count("101") << ',' << count("011") << ',' << r.rejected_checks << ','
            << r.rejected_parity << ',' << r.accepted << ',' << num(r.acceptance_rate) << ',' << num(r.metrics.tvd)
            << ',' << num(r.se.tvd) << ',' << num(r.metrics.bias) << ',' << num(r.metrics.incorrect) << ','
            << num(r.se.incorrect) << ',' << num(r.bias_significance) << ',' << r.stats.qubits << ',' << r.stats.zz
            << ',' << r.stats.native_gates << '\n';
    }
    return out.str();
}

std::vector<ExperimentRecord> sweep(std::span<const ExperimentConfig> configs) {
    if (configs.empty()) throw std::invalid_argument("sweep needs at least one config");
    std::vector<ExperimentRecord> out;
    out.reserve(configs.size());
    for (const auto& cfg : configs) out.push_back(run_experiment(cfg));
    return out;
}

std::vector<ExperimentConfig> random_plan_configs(const ExperimentConfig& base, size_t max_checks, size_t per_r,
                                                  size_t max_weight, Schedule schedule, uint64_t seed) {
    auto pool = stabilizers_below_weight(block_resource().generators, max_weight);
    if (pool.size() < max_checks) throw std::invalid_argument("not enough low-weight stabilizers");
    std::mt19937_64 rng(seed);
    std::vector<ExperimentConfig> out;
    for (size_t r = 1; r <= max_checks; r++) {
        for (size_t k = 0; k < per_r; k++) {
            std::vector<size_t> idx(pool.size());
            for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
            // Partial Fisher-Yates: r distinct picks.
            for (size_t i = 0; i < r; i++) {
                size_t j = i + static_cast<size_t>(rng() % (idx.size() - i));
                std::swap(idx[i], idx[j]);
            }
            ExperimentConfig cfg = base;
            cfg.variant = Variant::Clinr;
            cfg.name = "random_r" + std::to_string(r) + "_" + std::to_string(k);
            cfg.checks.clear();
            for (size_t i = 0; i < r; i++) {
                PauliString letters = pool[idx[i]];
                letters.set_phase(0);
                cfg.checks.push_back({letters.sparse_str(base.qubit_offset), schedule});
            }
            out.push_back(std::move(cfg));
        }
    }
    return out;
}

const std::vector<ReferencePair>& reference_pairs() {
    static const std::vector<ReferencePair> pairs{
        {"S1", "X6 Y8 Z12 Z13 Y15 Z16 Y17", "Z6 X9 Z12 X15"},
        {"S2", "Y10 Z11 Y16 Z17", "Z6 Z8 Z10 Z12 Z14 Z16"},
        {"S3", "Y10 Z11 Y16 Z17", "Z6 Z7 Z11 Z12 Z13 Z17"},
        {"S4", "Z8 Y10 Z14 Y16", "Y6 X8 Y9 Z13 Z14 Z16 Y17"},
        {"S5", "Y6 Y8 Y9 Y10 Z13 X16 Y17", "X6 Y9 Z12 Z13 Y14 Z16 Y17"},
        {"S6", "Z6 X7 Z10 Z12 X13 Z16", "Z6 Z8 Y11 Z12 Z14 Y17"},
    };
    return pairs;
}

std::vector<CheckSpec> reference_plan(const ReferencePair& pair) {
    return {{pair.first, Schedule::MCM}, {pair.second, Schedule::ECM}};
}

std::vector<ExperimentConfig> reference_pair_configs(const ExperimentConfig& base) {
    std::vector<ExperimentConfig> out;
    ExperimentConfig direct = base;
    direct.name = "direct";
    direct.variant = Variant::Direct;
    direct.checks.clear();
    out.push_back(direct);
    for (const auto& pair : reference_pairs()) {
        ExperimentConfig cfg = base;
        cfg.name = pair.label;
        cfg.variant = Variant::Clinr;
        cfg.checks = reference_plan(pair);
        out.push_back(std::move(cfg));
    }
    for (size_t i = 0; i < out.size(); i++) out[i].seed = base.seed + i;
    return out;
}

std::vector<ExperimentConfig> schedule_configs(const ExperimentConfig& base) {
    std::vector<ExperimentConfig> out;
    ExperimentConfig none = base;
    none.name = "none";
    none.variant = Variant::Direct;
    none.checks.clear();
    out.push_back(none);
    for (const auto& pair : reference_pairs()) {
        for (const char* mode : {"MCM", "ECM", "1+1"}) {
            ExperimentConfig cfg = base;
            cfg.name = pair.label + "_" + mode;
            cfg.variant = Variant::Clinr;
            cfg.checks = reference_plan(pair);
            if (std::string_view(mode) != "1+1") {
                for (auto& c : cfg.checks) c.schedule = parse_schedule(mode);
            }
            out.push_back(std::move(cfg));
        }
    }
    for (size_t i = 0; i < out.size(); i++) out[i].seed = base.seed + i;
    return out;
}

json hardware_reference() {
    json rows = json::array();
    rows.push_back({{"label", "physical"}, {"tvd", 0.0125}, {"bias_significance", 0.99999}, {"incorrect", 0.0091}});
    const double sig[] = {0.9580, 0.9785, 0.9959, 0.8665, 0.3381, 0.2530};
    const double inc[] = {0.0065, 0.0064, 0.0066, 0.0070, 0.0067, 0.0053};
    for (size_t i = 0; i < 6; i++) {
        json row = {{"label", reference_pairs()[i].label}, {"bias_significance", sig[i]}, {"incorrect", inc[i]}};
        row["tvd"] = i == 5 ? json(0.0059) : json(nullptr);
        rows.push_back(row);
    }
    return {{"source", "hardware"}, {"rows", rows}};
}

}  // namespace clinr
