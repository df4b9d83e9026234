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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/clinr.hpp"
#include "clinr/graph.hpp"
#include "clinr/noise.hpp"
#include "clinr/simulator.hpp"
#include "json.hpp"

namespace clinr {

/// Counts over the even-parity occupations ("000", "110", "101", "011").
using OccupationCounts = std::map<std::string, size_t>;

/// tvd against the ideal (|110> + i|011>)/sqrt 2 readout distribution.
/// incorrect = P(000) + P(101) and bias = tvd - incorrect, which is the
/// part of the distance left inside the correct sector.
struct TvdBreakdown {
    double tvd = 0.0;
    double bias = 0.0;
    double incorrect = 0.0;
};

TvdBreakdown tvd(const OccupationCounts& counts);

/// Half the L1 distance between two distributions over string keys.
double tvd(const std::map<std::string, double>& p, const std::map<std::string, double>& q);

/// 1 minus the exact two-sided binomial p-value of n110 vs n011 at p = 1/2.
double bias_significance(size_t n110, size_t n011);

struct StandardErrors {
    double tvd = 0.0;
    double incorrect = 0.0;
};

/// Multinomial bootstrap over the four occupations; deterministic per seed.
StandardErrors bootstrap_errors(const OccupationCounts& counts, size_t resamples, uint64_t seed);

enum class Variant : uint8_t { Direct, Clinr };
enum class MappingPolicy : uint8_t { Identity, Optimized };

struct CheckSpec {
    std::string pauli;  // sparse text over resource qubits, e.g. "Z6 X7 Z10"
    Schedule schedule = Schedule::MCM;
};

/// Where the per-pair two-qubit table comes from.
struct PairTableSource {
    std::optional<double> uniform;      // one DRB rate for every pair
    std::optional<uint64_t> synth_seed;  // synthesized spread table
    std::string csv_path;               // explicit "ion_i,ion_j,drb_pptt" file
};

struct ExperimentConfig {
    std::string name = "experiment";
    Variant variant = Variant::Direct;
    bool graph_resource = false;  // graph-state resource instead of the naive one
    size_t graph_index = 0;       // rank in the compilation search
    std::vector<CheckSpec> checks;
    size_t qubit_offset = 6;  // index of resource qubit 0 in check text
    bool verify_cat = false;
    bool noiseless = false;
    NoiseModel noise;
    PairTableSource pair_table{std::nullopt, uint64_t{2026}, ""};
    MappingPolicy mapping = MappingPolicy::Optimized;
    size_t shots = 100000;
    uint64_t seed = 1;
    size_t threads = 0;
};

ExperimentConfig config_from_json(const nlohmann::json& j, const ExperimentConfig& defaults = {});
nlohmann::json to_json(const ExperimentConfig& cfg);
/// FNV-1a of the canonical config JSON, hex.
std::string config_fingerprint(const ExperimentConfig& cfg);

/// Resolves the pair table source into a concrete noise model.
NoiseModel resolve_noise(const ExperimentConfig& cfg);

struct CircuitStats {
    size_t qubits = 0;
    size_t zz = 0;
    size_t native_gates = 0;  // physical natives, ZZ included
    size_t layers = 0;
    double duration = 0.0;
    size_t noise_instructions = 0;
    double mean_pair_rate = 0.0;  // usage-weighted DRB rate under the mapping
};

struct BuiltExperiment {
    Circuit logical;
    Circuit native;
    Circuit noisy;
    std::optional<ClinrLayout> layout;
    QubitMapping mapping;
    CircuitStats stats;
};

BuiltExperiment build_experiment(const ExperimentConfig& cfg);

/// Search results for the resource of the encoded block, cached per process.
const std::vector<GraphCompilation>& block_resource_compilations();
const ResourceSpec& block_resource();

struct ExperimentRecord {
    std::string name;
    std::string fingerprint;
    uint64_t seed = 0;
    size_t shots = 0;
    OccupationCounts counts;
    size_t rejected_checks = 0;  // failed at least one verification check
    size_t rejected_parity = 0;  // passed the checks, odd sector parity
    std::vector<size_t> check_rejections;  // per check, shots where it fired
    size_t accepted = 0;
    double acceptance_rate = 0.0;
    bool empty = false;  // nothing accepted; metrics are NaN
    TvdBreakdown metrics;
    double bias_significance = 0.0;
    StandardErrors se;
    CircuitStats stats;
    double wall_seconds = 0.0;
};

/// Post-selection, decoding and metrics for a finished batch.
ExperimentRecord evaluate_batch(const BuiltExperiment& built, const ShotBatch& batch);

/// build -> lower -> schedule -> map -> noise -> sample -> postselect -> decode.
ExperimentRecord run_experiment(const ExperimentConfig& cfg);

nlohmann::json to_json(const ExperimentRecord& r);
std::string records_csv(std::span<const ExperimentRecord> records);

std::vector<ExperimentRecord> sweep(std::span<const ExperimentConfig> configs);

/// Plans of r = 1..max_checks random resource stabilizers of weight below
/// `max_weight`, `per_r` plans each, drawn without replacement per plan.
std::vector<ExperimentConfig> random_plan_configs(const ExperimentConfig& base, size_t max_checks, size_t per_r,
                                                  size_t max_weight, Schedule schedule, uint64_t seed);

struct ReferencePair {
    std::string label;
    std::string first;   // measured mid-circuit
    std::string second;  // readout deferred
};

/// The six hardware-tested check pairs, over resource qubits 6..17.
const std::vector<ReferencePair>& reference_pairs();
/// Plan for one reference pair: first check MCM, second ECM.
std::vector<CheckSpec> reference_plan(const ReferencePair& pair);

/// Direct baseline, then one CliNR run per reference pair. Seeds are
/// base.seed + position.
std::vector<ExperimentConfig> reference_pair_configs(const ExperimentConfig& base);

/// Direct baseline ("none"), then per reference pair both checks MCM, both
/// ECM and the mixed plan ("1+1": first MCM, second ECM).
std::vector<ExperimentConfig> schedule_configs(const ExperimentConfig& base);

/// Hardware figures reported for the same circuits, kept for side-by-side
/// reports only.
nlohmann::json hardware_reference();

}  // namespace clinr
