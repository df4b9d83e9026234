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

#include "clinr/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace clinr {

namespace {

constexpr double kPi = std::numbers::pi;

CliffordMap single_gate_map(GateKind kind, double angle = 0.0) {
    Circuit c(1, true);
    Gate g;
    g.kind = kind;
    g.args[0] = angle;
    c.append(g);
    return clifford_map(c);
}

std::string local_key(const LocalClifford& c) { return c.x_image(0).str() + "|" + c.z_image(0).str(); }

struct WordTable {
    std::map<std::string, std::vector<Gate>> words;

    WordTable() {
        std::vector<Gate> alphabet;
        for (GateKind k : {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z}) {
            Gate g;
            g.kind = k;
            alphabet.push_back(g);
        }
        for (double a : {kPi / 2, -kPi / 2}) {
            Gate g;
            g.kind = GateKind::RX;
            g.args[0] = a;
            alphabet.push_back(g);
        }
        auto pulses = [](const std::vector<Gate>& w) {
            size_t p = 0;
            for (const auto& g : w) {
                if (g.kind != GateKind::S && g.kind != GateKind::S_DAG && g.kind != GateKind::Z) p++;
            }
            return p;
        };
        std::map<std::string, std::pair<size_t, size_t>> best;
        std::vector<std::vector<Gate>> frontier{{}};
        for (size_t len = 0; len <= 3; len++) {
            std::vector<std::vector<Gate>> next;
            for (const auto& w : frontier) {
                Circuit c(1, true);
                for (const auto& g : w) c.append(g);
                std::string key = local_key(clifford_map(c));
                std::pair<size_t, size_t> cost{pulses(w), w.size()};
                auto it = best.find(key);
                if (it == best.end() || cost < it->second) {
                    best[key] = cost;
                    words[key] = w;
                }
                if (len < 3) {
                    for (const auto& g : alphabet) {
                        auto longer = w;
                        longer.push_back(g);
                        next.push_back(std::move(longer));
                    }
                }
            }
            frontier = std::move(next);
        }
        if (words.size() != 24) throw std::logic_error("single-qubit Clifford table incomplete");
    }
};

const WordTable& word_table() {
    static const WordTable table;
    return table;
}

void check_size(size_t m) {
    if (m > Graph::kMaxVertices) throw std::invalid_argument("graphs are limited to 64 vertices");
}

}  // namespace

Graph::Graph(size_t num_vertices) : adj_(num_vertices, 0) { check_size(num_vertices); }

Graph Graph::from_edges(size_t num_vertices, std::span<const std::pair<uint32_t, uint32_t>> edges) {
    Graph g(num_vertices);
    for (auto [u, v] : edges) {
        if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        g.toggle_edge(u, v);
    }
    return g;
}

void Graph::toggle_edge(size_t u, size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] ^= uint64_t{1} << v;
    adj_[v] ^= uint64_t{1} << u;
}

size_t Graph::degree(size_t v) const { return static_cast<size_t>(std::popcount(adj_[v])); }

size_t Graph::edge_count() const {
    size_t s = 0;
    for (auto row : adj_) s += static_cast<size_t>(std::popcount(row));
    return s / 2;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t u = 0; u < adj_.size(); u++) {
        for (uint32_t v = u + 1; v < adj_.size(); v++) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::adjacency_bits() const {
    std::string s;
    for (size_t u = 0; u < adj_.size(); u++) {
        for (size_t v = 0; v < adj_.size(); v++) s += has_edge(u, v) ? '1' : '0';
    }
    return s;
}

Graph local_complement(const Graph& g, size_t v) {
    if (v >= g.num_vertices()) throw std::out_of_range("local complement vertex out of range");
    Graph out = g;
    uint64_t nb = g.neighbors(v);
    for (size_t a = 0; a < g.num_vertices(); a++) {
        if (!((nb >> a) & 1)) continue;
        for (size_t b = a + 1; b < g.num_vertices(); b++) {
            if ((nb >> b) & 1) out.toggle_edge(a, b);
        }
    }
    return out;
}

std::vector<Gate> local_clifford_gates(const LocalClifford& c, uint32_t qubit) {
    if (c.num_qubits() != 1) throw std::invalid_argument("local Clifford must act on one qubit");
    const auto& words = word_table().words;
    auto it = words.find(local_key(c));
    if (it == words.end()) throw std::invalid_argument("not a single-qubit Clifford");
    std::vector<Gate> out = it->second;
    for (auto& g : out) g.targets[0] = qubit;
    return out;
}

GraphCompilation extract_graph(std::span<const PauliString> generators) {
    size_t m = generators.size();
    check_size(m);
    std::vector<PauliString> rows(generators.begin(), generators.end());
    for (const auto& r : rows) {
        if (r.num_qubits() != m) throw std::invalid_argument("extract_graph needs one generator per qubit");
    }

    // Row-reduce the X block; leftover rows are Z-only.
    size_t rank = 0;
    std::vector<char> pivot_col(m, 0);
    for (size_t col = 0; col < m && rank < m; col++) {
        size_t p = rank;
        while (p < m && !rows[p].x(col)) p++;
        if (p == m) continue;
        std::swap(rows[p], rows[rank]);
        for (size_t i = 0; i < m; i++) {
            if (i != rank && rows[i].x(col)) rows[i] *= rows[rank];
        }
        pivot_col[col] = 1;
        rank++;
    }
    // Eliminate the Z-only rows on the non-pivot columns; their pivots get H.
    std::vector<char> hadamard(m, 0);
    {
        std::vector<PauliString> zrows(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
        size_t r = 0;
        for (size_t col = 0; col < m && r < zrows.size(); col++) {
            if (pivot_col[col]) continue;
            size_t p = r;
            while (p < zrows.size() && !zrows[p].z(col)) p++;
            if (p == zrows.size()) continue;
            std::swap(zrows[p], zrows[r]);
            for (size_t i = 0; i < zrows.size(); i++) {
                if (i != r && zrows[i].z(col)) zrows[i] *= zrows[r];
            }
            hadamard[col] = 1;
            r++;
        }
        if (r != zrows.size()) throw std::invalid_argument("generators are not independent");
    }
    for (size_t q = 0; q < m; q++) {
        if (hadamard[q]) {
            for (auto& r : rows) r.apply_h(q);
        }
    }

    // Gauss-Jordan to an identity X block.
    for (size_t col = 0; col < m; col++) {
        size_t p = col;
        while (p < m && !rows[p].x(col)) p++;
        if (p == m) throw std::logic_error("X block not invertible after local Hadamards");
        std::swap(rows[p], rows[col]);
        for (size_t i = 0; i < m; i++) {
            if (i != col && rows[i].x(col)) rows[i] *= rows[col];
        }
    }
    std::vector<char> s_dag(m, 0), z_fix(m, 0);
    for (size_t v = 0; v < m; v++) {
        if (rows[v].z(v)) {
            s_dag[v] = 1;
            for (auto& r : rows) r.apply_s_dag(v);
        }
    }
    for (size_t v = 0; v < m; v++) {
        if (rows[v].phase() == 2) {
            z_fix[v] = 1;
            for (auto& r : rows) r.apply_z(v);
        } else if (rows[v].phase() != 0) {
            throw std::invalid_argument("generators are not Hermitian");
        }
    }

    GraphCompilation gc;
    gc.graph = Graph(m);
    for (size_t u = 0; u < m; u++) {
        for (size_t v = u + 1; v < m; v++) {
            if (rows[u].z(v) != rows[v].z(u)) throw std::invalid_argument("generators do not commute");
            if (rows[u].z(v)) gc.graph.toggle_edge(u, v);
        }
    }
    // Locals undo U = Z^f S_dag^s H^h, in that time order: Z, S, H.
    for (size_t v = 0; v < m; v++) {
        LocalClifford l(1);
        if (z_fix[v]) l.apply_z(0);
        if (s_dag[v]) l.apply_s(0);
        if (hadamard[v]) l.apply_h(0);
        gc.locals.push_back(std::move(l));
    }
    update_cost(gc);
    return gc;
}

GraphCompilation extract_graph(const Tableau& t) {
    auto gens = t.stabilizers();
    return extract_graph(gens);
}

GraphCompilation local_complement(const GraphCompilation& gc, size_t v) {
    GraphCompilation out;
    out.graph = local_complement(gc.graph, v);
    out.locals = gc.locals;
    // |tau_v(G)> = exp(-i pi/4 X_v) prod_{u in N(v)} exp(i pi/4 Z_u) |G>, so
    // the old locals absorb the inverse: RX(-pi/2) before L_v, S before L_u.
    static const CliffordMap rx_minus = single_gate_map(GateKind::RX, -kPi / 2);
    static const CliffordMap s_gate = single_gate_map(GateKind::S);
    out.locals[v] = rx_minus.then(gc.locals[v]);
    uint64_t nb = gc.graph.neighbors(v);
    for (size_t u = 0; u < gc.graph.num_vertices(); u++) {
        if ((nb >> u) & 1) out.locals[u] = s_gate.then(gc.locals[u]);
    }
    update_cost(out);
    return out;
}

Circuit emit_graph_circuit(const GraphCompilation& gc) {
    size_t m = gc.graph.num_vertices();
    Circuit c(m, true);
    for (uint32_t v = 0; v < m; v++) c.h(v);
    for (auto [u, v] : gc.graph.edges()) c.cz(u, v);
    for (uint32_t v = 0; v < m; v++) {
        for (const auto& g : local_clifford_gates(gc.locals[v], v)) c.append(g);
    }
    return c;
}

void update_cost(GraphCompilation& gc) {
    auto counts = count_gates(lower_to_native(emit_graph_circuit(gc)));
    gc.cost.edges = gc.graph.edge_count();
    gc.cost.zz = counts.zz;
    gc.cost.native = counts.single_qubit + counts.two_qubit;
}

void fix_signs(GraphCompilation& gc, std::span<const PauliString> generators) {
    Tableau t = run_noiseless(emit_graph_circuit(gc));
    std::vector<bool> flip(generators.size(), false);
    bool any = false;
    for (size_t i = 0; i < generators.size(); i++) {
        int e = t.expectation(generators[i]);
        if (e == 0) throw std::invalid_argument("compilation does not represent the target state");
        flip[i] = e < 0;
        any = any || flip[i];
    }
    if (!any) return;
    PauliString p = pauli_with_commutation(generators, flip);
    for (size_t v = 0; v < gc.locals.size(); v++) {
        char letter = p.letter(v);
        if (letter == 'I') continue;
        CliffordMap pm(1);
        if (letter == 'X') pm.apply_x(0);
        else if (letter == 'Y') pm.apply_y(0);
        else pm.apply_z(0);
        gc.locals[v] = gc.locals[v].then(pm);
    }
    update_cost(gc);
}

std::vector<GraphCompilation> search_compilations(std::span<const PauliString> generators,
                                                  const SearchOptions& options) {
    if (options.iterations == 0) throw std::invalid_argument("search needs at least one iteration");
    GraphCompilation start = extract_graph(generators);
    fix_signs(start, generators);
    size_t m = start.graph.num_vertices();
    std::map<Graph, GraphCompilation> pool;
    pool.emplace(start.graph, start);
    if (m == 0) return {start};

    std::mt19937_64 rng(options.seed);
    auto vertex = [&] { return static_cast<size_t>(rng() % m); };
    // Locals are only needed for pooled candidates, so the walk runs on
    // graphs plus the move history and replays moves when pooling.
    for (size_t r = 0; r < std::max<size_t>(1, options.restarts); r++) {
        GraphCompilation cur = start;
        if (r > 0) {
            for (size_t k = 0; k < m; k++) cur = local_complement(cur, vertex());
        }
        for (size_t it = 0; it < options.iterations; it++) {
            size_t v = vertex();
            Graph cand = local_complement(cur.graph, v);
            if (cand.edge_count() > cur.graph.edge_count()) continue;
            cur = local_complement(cur, v);
            if (!pool.count(cur.graph)) pool.emplace(cur.graph, cur);
        }
    }

    std::vector<GraphCompilation> all;
    all.reserve(pool.size());
    for (auto& [g, gc] : pool) all.push_back(gc);
    std::stable_sort(all.begin(), all.end(), [](const GraphCompilation& a, const GraphCompilation& b) {
        return a.graph.edge_count() < b.graph.edge_count();
    });
    size_t shortlist = std::min(all.size(), std::max<size_t>(options.keep * 4, 16));
    all.resize(shortlist);
    for (auto& gc : all) fix_signs(gc, generators);
    std::sort(all.begin(), all.end(), [](const GraphCompilation& a, const GraphCompilation& b) {
        if (a.cost.zz != b.cost.zz) return a.cost.zz < b.cost.zz;
        if (a.cost.native != b.cost.native) return a.cost.native < b.cost.native;
        return a.graph < b.graph;
    });
    if (all.size() > options.keep) all.resize(options.keep);
    return all;
}

}  // namespace clinr
