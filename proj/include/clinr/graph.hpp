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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"
#include "clinr/tableau.hpp"

namespace clinr {

/// Simple undirected graph on at most 64 vertices.
class Graph {
   public:
    static constexpr size_t kMaxVertices = 64;

    Graph() = default;
    explicit Graph(size_t num_vertices);
    static Graph from_edges(size_t num_vertices, std::span<const std::pair<uint32_t, uint32_t>> edges);

    size_t num_vertices() const { return adj_.size(); }
    bool has_edge(size_t u, size_t v) const { return (adj_[u] >> v) & 1; }
    void toggle_edge(size_t u, size_t v);
    uint64_t neighbors(size_t v) const { return adj_[v]; }
    size_t degree(size_t v) const;
    size_t edge_count() const;
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;

    /// Row-major adjacency bits, m * m characters of '0'/'1'.
    std::string adjacency_bits() const;

    bool operator==(const Graph&) const = default;
    bool operator<(const Graph& other) const { return adj_ < other.adj_; }

   private:
    std::vector<uint64_t> adj_;
};

/// Toggles every edge inside the neighborhood of v.
Graph local_complement(const Graph& g, size_t v);

/// Single-qubit Clifford as its conjugation action (a 1-qubit CliffordMap).
using LocalClifford = CliffordMap;

/// Shortest gate word (time order) realizing `c` up to global phase, over
/// H, S, S_DAG, X, Y, Z and RX(+-pi/2), preferring the fewest physical
/// native pulses after lowering.
std::vector<Gate> local_clifford_gates(const LocalClifford& c, uint32_t qubit);

struct CompilationCost {
    size_t edges = 0;
    size_t zz = 0;      // lowered ZZ count of the emitted circuit
    size_t native = 0;  // lowered physical native gates (ZZ included)
    bool operator==(const CompilationCost&) const = default;
};

/// The state (L_0 (x) ... (x) L_{m-1}) |G>.
struct GraphCompilation {
    Graph graph;
    std::vector<LocalClifford> locals;
    CompilationCost cost;
};

/// LC-equivalent graph form of the stabilizer state generated by
/// `generators` (m independent commuting Hermitian Paulis on m qubits).
GraphCompilation extract_graph(std::span<const PauliString> generators);
GraphCompilation extract_graph(const Tableau& t);

/// Local complementation at v with the locals updated so the represented
/// state is unchanged.
GraphCompilation local_complement(const GraphCompilation& gc, size_t v);

/// H on every vertex, one CZ per edge in lexicographic order, then the locals.
Circuit emit_graph_circuit(const GraphCompilation& gc);

/// Recomputes `gc.cost` from the emitted circuit.
void update_cost(GraphCompilation& gc);

/// Absorbs a Pauli correction into the locals so that every generator has
/// expectation +1. Throws if the state is not the target up to signs.
void fix_signs(GraphCompilation& gc, std::span<const PauliString> generators);

struct SearchOptions {
    size_t iterations = 2000;  // LC moves per restart
    size_t restarts = 8;
    size_t keep = 10;
    uint64_t seed = 0;
};

/// Randomized LC walk with greedy acceptance on edge count and random
/// restarts. Returns up to `keep` distinct graphs sorted by
/// (zz, native, adjacency), each sign-fixed against `generators`.
std::vector<GraphCompilation> search_compilations(std::span<const PauliString> generators,
                                                  const SearchOptions& options = {});

}  // namespace clinr
