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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clinr/circuit.hpp"

namespace clinr {

/// Symmetric two-qubit error rates (probabilities) between ions of a chain.
class PairErrorTable {
   public:
    PairErrorTable() = default;
    explicit PairErrorTable(size_t num_ions, double rate = 0.0);
    static PairErrorTable uniform(size_t num_ions, double rate) { return PairErrorTable(num_ions, rate); }

    size_t num_ions() const { return n_; }
    size_t num_pairs() const { return n_ * (n_ - 1) / 2; }
    double rate(size_t i, size_t j) const;
    void set(size_t i, size_t j, double rate);
    double mean() const;

    /// "ion_i,ion_j,drb_pptt" rows for i < j.
    std::string to_csv() const;
    static PairErrorTable from_csv(std::string_view text);

   private:
    size_t n_ = 0;
    std::vector<double> rates_;  // n x n, symmetric
};

/// Logical qubit q runs on ion `ion[q]`.
struct QubitMapping {
    std::vector<uint32_t> ion;

    static QubitMapping identity(size_t num_qubits);
    /// Throws unless injective and inside a chain of `num_ions`.
    void validate(size_t num_ions) const;
    bool operator==(const QubitMapping&) const = default;
};

struct NoiseModel {
    double p1q_z = 2.55e-4;
    double t2_star = 1.5;  // seconds
    double p_spam = 1.2e-3;
    LayerDurations durations;
    PairErrorTable pair_table = PairErrorTable::uniform(40, 41e-4);
    bool single_qubit = true;
    bool two_qubit = true;
    bool idle = true;
    bool readout = true;
    double scale = 1.0;  // multiplies every channel probability

    void validate() const;
};

/// (1 - exp(-dt / T2)) / 2.
double idle_dephasing_prob(double dt, double t2);

/// Inlines the dephasing model into a scheduled circuit: Z after each
/// physical single-qubit gate, half the pair rate as Z on both operands of
/// each two-qubit gate, a record flip after each measurement and layer-time
/// dephasing on idle qubits. Idle noise stops after a qubit's last
/// physical instruction. Virtual GZ gates stay noiseless.
Circuit attach_noise(const LayeredCircuit& lc, const NoiseModel& model, const QubitMapping& mapping);

/// Two-qubit interactions of `c` as an (a, b) multiset with a < b.
std::vector<std::pair<uint32_t, uint32_t>> interactions(const Circuit& c);

/// Usage-weighted mean pair rate of `pairs` under `mapping`.
double usage_weighted_mean(std::span<const std::pair<uint32_t, uint32_t>> pairs, const PairErrorTable& table,
                           const QubitMapping& mapping);

/// Greedy seeding from several start ions, then move/swap descent. Never
/// worse than the identity mapping, which is returned on ties.
QubitMapping optimize_mapping(std::span<const std::pair<uint32_t, uint32_t>> pairs, size_t num_qubits,
                              const PairErrorTable& table);
QubitMapping optimize_mapping(const Circuit& c, const PairErrorTable& table);

/// All pairs among `width` qubits, each used once: the usage profile of a
/// densely connected register.
std::vector<std::pair<uint32_t, uint32_t>> complete_usage(size_t width);

/// Generator settings for a synthetic pair table. Per-pair log rates are
///   u_ij = eta_i + eta_j + eps_ij + distance_weight * |i - j| / num_ions
/// with eta ~ N(0, ion_sigma) and eps ~ N(0, pair_sigma); rates are
/// A exp(B u_ij), a log-normal family whose spread B and level A are fitted
/// so the optimized small- and wide-register means hit their targets.
struct PairTableParams {
    size_t num_ions = 40;
    double target_small = 41e-4;
    double target_wide = 59e-4;
    std::vector<std::pair<uint32_t, uint32_t>> small_usage = complete_usage(6);
    size_t small_width = 6;
    std::vector<std::pair<uint32_t, uint32_t>> wide_usage = complete_usage(26);
    size_t wide_width = 26;
    double ion_sigma = 1.0;
    double pair_sigma = 0.5;
    double distance_weight = 1.0;
};

struct PairTableFit {
    PairErrorTable table;
    double spread = 0.0;  // fitted B
    double small_mean = 0.0;
    double wide_mean = 0.0;
};

/// Deterministic per seed. Throws std::invalid_argument when the targets
/// cannot be met (target_small > target_wide, or non-positive targets).
PairTableFit synth_pair_table(uint64_t seed, const PairTableParams& params = {});

}  // namespace clinr
