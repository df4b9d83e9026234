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
#include <string_view>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"
#include "clinr/tableau.hpp"

namespace clinr {

/// (I (x) C) applied to n Bell pairs. Resource qubit i < n is the first
/// half of pair i, qubit n + i the second half that C acts on.
struct ResourceSpec {
    size_t n = 0;
    Circuit clifford;
    CliffordMap map;
    /// X_i (x) C X_i C^dagger and Z_i (x) C Z_i C^dagger for i < n.
    std::vector<PauliString> generators;

    Tableau tableau() const { return Tableau::from_stabilizers(generators); }
};

ResourceSpec bell_clifford_resource(const Circuit& clifford);

/// H and CNOT per Bell pair, then C on the second half.
Circuit naive_resource_circuit(const ResourceSpec& spec);

/// Signed group element whose letters are `letters`, or nullopt when the
/// letters are not (up to sign) in the group generated by `generators`.
std::optional<PauliString> group_element(std::span<const PauliString> generators, const PauliString& letters);

/// Every non-identity element of the stabilizer group, with signs, in
/// binary-counting order of generator subsets. Limited to 20 generators.
std::vector<PauliString> enumerate_stabilizers(std::span<const PauliString> generators);

/// Non-identity stabilizers of `generators` with weight below `max_weight`.
std::vector<PauliString> stabilizers_below_weight(std::span<const PauliString> generators, size_t max_weight);

enum class Schedule : uint8_t { MCM, ECM };
std::string_view schedule_name(Schedule s);
Schedule parse_schedule(std::string_view text);

struct StabilizerCheck {
    PauliString stabilizer;  // over the 2n resource qubits, sign included
    Schedule schedule = Schedule::MCM;
};

struct VerificationPlan {
    std::vector<StabilizerCheck> checks;
};

/// Builds a check from sparse text such as "Z6 X7 Z10". Indices are shifted
/// down by `offset`; the sign is resolved from group membership.
StabilizerCheck parse_check(std::string_view sparse, Schedule schedule, const ResourceSpec& spec, size_t offset);

struct ClinrOptions {
    /// Measure the output register. The oracle test turns this off to read
    /// the teleported state.
    bool measure_output = true;
    /// Adds a parity flag qubit comparing the first and last cat qubits.
    bool verify_cat = false;
};

struct CheckRecords {
    std::vector<uint32_t> ancilla;  // X-basis readout of the cat qubits
    std::vector<uint32_t> cat_flag;  // present when verify_cat is on
    uint8_t expected = 0;            // expected ancilla parity
    Schedule schedule = Schedule::MCM;
};

struct ClinrLayout {
    size_t n = 0;
    size_t num_qubits = 0;
    std::vector<uint32_t> data_records;      // Bell-basis Z readout of the data
    std::vector<uint32_t> first_records;     // Z readout of the first resource half
    std::vector<uint32_t> output_records;    // raw output before the frame
    std::vector<CheckRecords> checks;
    /// Output bits to flip when data (first n) or first-half (last n) bit k is set.
    std::vector<std::vector<uint8_t>> flip_masks;
};

struct ClinrBuild {
    Circuit circuit;
    ClinrLayout layout;
};

/// Data on qubits [0, n), resource halves on [n, 2n) and [2n, 3n), cat
/// ancillas from 3n. MCM ancillas go back to the pool after reset; ECM
/// ancillas are held until the final measurement layer.
ClinrBuild clinr_circuit(const Circuit& data_prep, const ResourceSpec& spec, const VerificationPlan& plan,
                         const Circuit* resource_prep = nullptr, const ClinrOptions& options = {});

/// Q = C X^{m_first} Z^{m_data} C^dagger for the 2n Bell outcomes (data
/// bits first), phase dropped.
PauliString feedforward_frame(std::span<const uint8_t> outcomes, const CliffordMap& clifford);

struct ClinrShot {
    bool accepted = true;
    std::vector<uint8_t> check_parity;  // 1 where the check fired
    std::vector<uint8_t> output;        // frame-corrected output bits
};

ClinrShot interpret_shot(std::span<const uint8_t> records, const ClinrLayout& layout);

}  // namespace clinr
