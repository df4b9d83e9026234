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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/graph.hpp"
#include "clinr/pauli.hpp"
#include "json.hpp"

namespace clinr {

/// x bits of qubits 0..n-1 followed by their z bits, as '0'/'1' text.
std::string encode_pauli_bits(const PauliString& p);
PauliString decode_pauli_bits(std::string_view bits);

/// Symmetric depolarizing noise on a native circuit: DEPOLARIZE1(p) after
/// each physical single-qubit gate, DEPOLARIZE2(10 p) after each ZZ, and a
/// p readout flip. No idle noise.
Circuit attach_depolarizing(const Circuit& native, double p1q);

struct DatasetOptions {
    size_t graphs = 10;
    size_t pairs_per_graph = 200;
    size_t shots = 10000;
    double noise_level = 1e-3;  // operating point of p1q
    double band = 0.1;          // p1q drawn uniformly in [1 - band, 1 + band] * noise_level
    size_t max_weight = 8;      // checks have weight below this
    uint64_t seed = 1;
    size_t threads = 0;
};

struct DatasetRow {
    size_t graph_id = 0;
    std::string adjacency;  // row-major m*m bits
    std::string pauli1;     // 2m bits
    std::string pauli2;
    std::string sparse1;  // resource qubit indices offset by the data width
    std::string sparse2;
    double noise_level = 0.0;
    double p_fail = 0.0;  // P(000) + P(101) among accepted shots
    size_t accepted = 0;
    size_t shots = 0;
    uint64_t seed = 0;
};

/// One row for a single check pair on the encoded block: `first` is
/// measured mid-circuit, `second` at the end. Only the letters of the checks
/// matter; signs are resolved against the resource. graph_id is left 0.
DatasetRow evaluate_pair(const GraphCompilation& compilation, const PauliString& first, const PauliString& second,
                         double p1q, size_t shots, uint64_t seed, size_t threads = 0);

/// Streams rows to `sink`: for each of the first `graphs` compilations,
/// `pairs_per_graph` distinct unordered check pairs (first MCM, second
/// ECM), each simulated under its own sampled noise level.
void export_dataset(const std::vector<GraphCompilation>& pool, const DatasetOptions& options,
                    const std::function<void(const DatasetRow&)>& sink);

std::string dataset_csv_header();
/// Inverse of dataset_csv_row for one line (no trailing newline needed).
DatasetRow parse_dataset_csv_row(std::string_view line);
std::string dataset_csv_row(const DatasetRow& row);
nlohmann::json dataset_schema();
nlohmann::json to_json(const DatasetRow& row);

/// Graph, locals (as x/z images) and cost of a compilation.
nlohmann::json to_json(const GraphCompilation& gc);
/// Rebuilds a compilation and recomputes its cost. Throws on malformed input.
GraphCompilation compilation_from_json(const nlohmann::json& j);

}  // namespace clinr
