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


#include "clinr/dataset.hpp"

#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>

#include "clinr/clinr.hpp"
#include "clinr/gse.hpp"
#include "clinr/harness.hpp"
#include "clinr/simulator.hpp"
#include "clinr/tableau.hpp"

namespace clinr {

std::string encode_pauli_bits(const PauliString& p) {
    size_t n = p.num_qubits();
    std::string s(2 * n, '0');
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) s[q] = '1';
        if (p.z(q)) s[n + q] = '1';
    }
    return s;
}

PauliString decode_pauli_bits(std::string_view bits) {
    if (bits.size() % 2) throw std::invalid_argument("Pauli bit encoding must have even length");
    size_t n = bits.size() / 2;
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        for (char ch : {bits[q], bits[n + q]}) {
            if (ch != '0' && ch != '1') throw std::invalid_argument("Pauli bit encoding must be 0/1 text");
        }
        p.set(q, bits[q] == '1', bits[n + q] == '1');
    }
    return p;
}

Circuit attach_depolarizing(const Circuit& native, double p1q) {
    if (!(p1q >= 0.0) || 10 * p1q > 1.0) throw std::invalid_argument("depolarizing level out of range");
    Circuit out(native.num_qubits(), native.clifford());
    for (const auto& g : native.ops()) {
        out.append(g);
        if (p1q == 0.0 || is_virtual(g)) continue;
        const auto& t = traits(g.kind);
        if (t.unitary && !t.two_qubit) {
            out.depolarize1(g.targets[0], p1q);
        } else if (t.two_qubit) {
            out.depolarize2(g.targets[0], g.targets[1], 10 * p1q);
        } else if (g.kind == GateKind::MEASURE_Z) {
            out.flip_record(static_cast<uint32_t>(g.record), p1q);
        }
    }
    return out;
}

DatasetRow evaluate_pair(const GraphCompilation& compilation, const PauliString& first, const PauliString& second,
                         double p1q, size_t shots, uint64_t seed, size_t threads) {
    if (shots == 0) throw std::invalid_argument("dataset rows need at least one shot");
    const auto& spec = block_resource();
    if (compilation.graph.num_vertices() != 2 * spec.n) throw std::invalid_argument("compilation is not on 12 qubits");
    auto resolve = [&](const PauliString& letters) {
        PauliString bare = letters;
        bare.set_phase(0);
        auto signed_check = group_element(spec.generators, bare);
        if (!signed_check || bare.is_identity()) {
            throw std::invalid_argument(bare.str() + " is not a nonidentity resource stabilizer");
        }
        return std::make_pair(bare, *signed_check);
    };
    auto [l1, c1] = resolve(first);
    auto [l2, c2] = resolve(second);
    if (l1 == l2) throw std::invalid_argument("a check pair needs two distinct stabilizers");

    Tableau target = spec.tableau();
    Circuit resource = emit_graph_circuit(compilation);
    if (!run_noiseless(resource).same_state(target)) {
        throw std::invalid_argument("compilation does not prepare the block resource");
    }
    VerificationPlan plan;
    plan.checks = {{c1, Schedule::MCM}, {c2, Schedule::ECM}};
    auto built = clinr_circuit(gse::prep_circuit(), spec, plan, &resource);
    Circuit noisy = attach_depolarizing(lower_to_native(built.circuit), p1q);
    BuiltExperiment be;
    be.layout = built.layout;
    RunOptions run;
    run.threads = threads;
    auto rec = evaluate_batch(be, run_batch(noisy, shots, seed, run));

    DatasetRow row;
    row.adjacency = compilation.graph.adjacency_bits();
    row.pauli1 = encode_pauli_bits(l1);
    row.pauli2 = encode_pauli_bits(l2);
    row.sparse1 = l1.sparse_str(spec.n);
    row.sparse2 = l2.sparse_str(spec.n);
    row.noise_level = p1q;
    row.p_fail = rec.empty ? 1.0 : rec.metrics.incorrect;
    row.accepted = rec.accepted;
    row.shots = shots;
    row.seed = seed;
    return row;
}

void export_dataset(const std::vector<GraphCompilation>& pool, const DatasetOptions& options,
                    const std::function<void(const DatasetRow&)>& sink) {
    if (options.shots == 0) throw std::invalid_argument("dataset rows need at least one shot");
    if (options.band < 0 || options.band >= 1) throw std::invalid_argument("noise band must lie in [0, 1)");
    const auto& spec = block_resource();
    auto checks = stabilizers_below_weight(spec.generators, options.max_weight);
    size_t m = checks.size();
    size_t max_pairs = m * (m - 1) / 2;
    if (options.pairs_per_graph > max_pairs) throw std::invalid_argument("more pairs requested than exist");
    size_t graphs = std::min(options.graphs, pool.size());

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> level(1.0 - options.band, 1.0 + options.band);
    for (size_t gi = 0; gi < graphs; gi++) {
        std::set<std::pair<size_t, size_t>> seen;
        while (seen.size() < options.pairs_per_graph) {
            size_t a = static_cast<size_t>(rng() % m), b = static_cast<size_t>(rng() % m);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) continue;

            double p = options.noise_level * level(rng);
            uint64_t seed = rng();
            DatasetRow row = evaluate_pair(pool[gi], checks[a], checks[b], p, options.shots, seed, options.threads);
            row.graph_id = gi;
            sink(row);
        }
    }
}

std::string dataset_csv_header() {
    return "graph_id,adjacency,pauli1,pauli2,sparse1,sparse2,noise_level,p_fail,accepted,shots,seed\n";
}

std::string dataset_csv_row(const DatasetRow& r) {
    char level[32], fail[32];
    std::snprintf(level, sizeof(level), "%.17g", r.noise_level);
    std::snprintf(fail, sizeof(fail), "%.17g", r.p_fail);
    return std::to_string(r.graph_id) + "," + r.adjacency + "," + r.pauli1 + "," + r.pauli2 + ",\"" + r.sparse1 +
           "\",\"" + r.sparse2 + "\"," + level + "," + fail + "," + std::to_string(r.accepted) + "," +
           std::to_string(r.shots) + "," + std::to_string(r.seed) + "\n";
}

DatasetRow parse_dataset_csv_row(std::string_view line) {
    // Fields are comma separated; the two sparse columns are quoted.
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\n' && ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 11) throw std::invalid_argument("dataset row needs 11 fields");
    DatasetRow r;
    try {
        r.graph_id = std::stoul(fields[0]);
        r.adjacency = fields[1];
        r.pauli1 = fields[2];
        r.pauli2 = fields[3];
        r.sparse1 = fields[4];
        r.sparse2 = fields[5];
        r.noise_level = std::stod(fields[6]);
        r.p_fail = std::stod(fields[7]);
        r.accepted = std::stoul(fields[8]);
        r.shots = std::stoul(fields[9]);
        r.seed = std::stoull(fields[10]);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed number in dataset row");
    }
    return r;
}

nlohmann::json to_json(const DatasetRow& r) {
    return {{"graph_id", r.graph_id}, {"adjacency", r.adjacency}, {"pauli1", r.pauli1},   {"pauli2", r.pauli2},
            {"sparse1", r.sparse1},   {"sparse2", r.sparse2},     {"noise_level", r.noise_level},
            {"p_fail", r.p_fail},     {"accepted", r.accepted},   {"shots", r.shots},     {"seed", r.seed}};
}

nlohmann::json to_json(const GraphCompilation& gc) {
    nlohmann::json locals = nlohmann::json::array();
    for (const auto& l : gc.locals) locals.push_back({{"x", l.x_image(0).str()}, {"z", l.z_image(0).str()}});
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : gc.graph.edges()) edges.push_back({u, v});
    return {{"vertices", gc.graph.num_vertices()},
            {"adjacency", gc.graph.adjacency_bits()},
            {"edges", edges},
            {"locals", locals},
            {"cost", {{"edges", gc.cost.edges}, {"zz", gc.cost.zz}, {"native", gc.cost.native}}}};
}

GraphCompilation compilation_from_json(const nlohmann::json& j) {
    try {
        size_t m = j.at("vertices").get<size_t>();
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
        GraphCompilation gc;
        gc.graph = Graph::from_edges(m, edges);
        const auto& locals = j.at("locals");
        if (locals.size() != m) throw std::invalid_argument("compilation needs one local Clifford per vertex");
        for (const auto& l : locals) {
            LocalClifford c({PauliString::from_str(l.at("x").get<std::string>())},
                            {PauliString::from_str(l.at("z").get<std::string>())});
            if (c.num_qubits() != 1) throw std::invalid_argument("invalid local Clifford");
            gc.locals.push_back(std::move(c));
        }
        update_cost(gc);
        return gc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed compilation JSON: ") + e.what());
    }
}

nlohmann::json dataset_schema() {
    using nlohmann::json;
    auto col = [](const char* name, const char* type, const char* doc) {
        return json{{"name", name}, {"type", type}, {"description", doc}};
    };
    return {
        {"format", "csv"},
        {"columns",
         json::array({
             col("graph_id", "int", "index of the graph compilation in the pool"),
             col("adjacency", "bits", "row-major 12x12 adjacency matrix of the resource graph"),
             col("pauli1", "bits", "first check: x bits of resource qubits 0..11, then z bits"),
             col("pauli2", "bits", "second check, same encoding"),
             col("sparse1", "string", "first check in sparse text, qubits 6..17"),
             col("sparse2", "string", "second check in sparse text, qubits 6..17"),
             col("noise_level", "float", "single-qubit depolarizing rate; two-qubit is 10x, readout 1x"),
             col("p_fail", "float", "P(000) + P(101) among accepted even-parity shots (1 if none accepted)"),
             col("accepted", "int", "accepted even-parity shots"),
             col("shots", "int", "simulated shots"),
             col("seed", "uint64", "simulation seed of the row"),
         })},
        {"check_schedules", {"MCM", "ECM"}},
    };
}

}  // namespace clinr
