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

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clinr/pauli.hpp"

namespace clinr {

enum class GateKind : uint8_t {
    H,
    S,
    S_DAG,
    X,
    Y,
    Z,
    CNOT,
    CZ,
    RX,    // exp(-i angle X / 2)
    RZ,    // exp(-i angle Z / 2)
    GPI,   // [[0, e^-i phase], [e^i phase, 0]]
    GPI2,  // [[1, -i e^-i phase], [-i e^i phase, 1]] / sqrt 2
    GZ,    // virtual exp(-i angle Z / 2)
    ZZ,    // exp(-i angle Z (x) Z)
    MEASURE_Z,
    RESET,
    X_ERROR,
    Y_ERROR,
    Z_ERROR,
    PAULI_CHANNEL_1,
    DEPOLARIZE1,
    DEPOLARIZE2,
    FLIP_RECORD,
    BARRIER,  // scheduling fence (Stim TICK): later gates start after every earlier layer
};

std::string_view gate_name(GateKind kind);

struct GateTraits {
    uint8_t arity;       // qubit operands
    bool unitary;        // a (possibly non-Clifford) unitary gate
    bool two_qubit;      // two-qubit unitary
    bool noise;          // stochastic Pauli channel or record flip
    bool has_angle;      // carries an angle or phase argument
    bool native;         // trapped-ion native set (GPI, GPI2, GZ, ZZ, measure, reset)
};
const GateTraits& traits(GateKind kind);

/// One circuit instruction. `args` holds the angle (radians) for rotations,
/// the probability for noise channels, and (px, py, pz) for
/// PAULI_CHANNEL_1. `record` is the classical bit written by MEASURE_Z or
/// flipped by FLIP_RECORD.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<uint32_t, 2> targets{0, 0};
    std::array<double, 3> args{0.0, 0.0, 0.0};
    int32_t record = -1;

    std::span<const uint32_t> qubits() const { return {targets.data(), traits(kind).arity}; }
    double angle() const { return args[0]; }
    double probability() const { return args[0]; }
    bool operator==(const Gate&) const = default;
};

/// A gate list over fixed qubit and classical-bit registers. Builders
/// append; records are assigned in measurement order.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits = 0, bool clifford = true) : num_qubits_(num_qubits), clifford_(clifford) {}

    size_t num_qubits() const { return num_qubits_; }
    size_t num_records() const { return num_records_; }
    bool clifford() const { return clifford_; }
    const std::vector<Gate>& ops() const { return ops_; }
    bool empty() const { return ops_.empty(); }

    /// Appends after validation. MEASURE_Z gets the next record index when
    /// `g.record < 0`; an explicit record must not be in use yet.
    void append(Gate g);
    void append_circuit(const Circuit& other, std::span<const uint32_t> qubit_map = {});

    Circuit& h(uint32_t q) { return unary(GateKind::H, q); }
    Circuit& s(uint32_t q) { return unary(GateKind::S, q); }
    Circuit& s_dag(uint32_t q) { return unary(GateKind::S_DAG, q); }
    Circuit& x(uint32_t q) { return unary(GateKind::X, q); }
    Circuit& y(uint32_t q) { return unary(GateKind::Y, q); }
    Circuit& z(uint32_t q) { return unary(GateKind::Z, q); }
    Circuit& cx(uint32_t c, uint32_t t) { return binary(GateKind::CNOT, c, t); }
    Circuit& cz(uint32_t a, uint32_t b) { return binary(GateKind::CZ, a, b); }
    Circuit& rx(uint32_t q, double angle) { return unary(GateKind::RX, q, angle); }
    Circuit& rz(uint32_t q, double angle) { return unary(GateKind::RZ, q, angle); }
    Circuit& gpi(uint32_t q, double phase) { return unary(GateKind::GPI, q, phase); }
    Circuit& gpi2(uint32_t q, double phase) { return unary(GateKind::GPI2, q, phase); }
    Circuit& gz(uint32_t q, double angle) { return unary(GateKind::GZ, q, angle); }
    Circuit& zz(uint32_t a, uint32_t b, double angle) { return binary(GateKind::ZZ, a, b, angle); }
    Circuit& reset(uint32_t q) { return unary(GateKind::RESET, q); }
    Circuit& x_error(uint32_t q, double p) { return unary(GateKind::X_ERROR, q, p); }
    Circuit& y_error(uint32_t q, double p) { return unary(GateKind::Y_ERROR, q, p); }
    Circuit& z_error(uint32_t q, double p) { return unary(GateKind::Z_ERROR, q, p); }
    Circuit& depolarize1(uint32_t q, double p) { return unary(GateKind::DEPOLARIZE1, q, p); }
    Circuit& depolarize2(uint32_t a, uint32_t b, double p) { return binary(GateKind::DEPOLARIZE2, a, b, p); }
    Circuit& pauli_channel_1(uint32_t q, double px, double py, double pz);
    Circuit& flip_record(uint32_t record, double p);
    Circuit& barrier();
    /// Z-basis measurement; returns the record index.
    uint32_t measure(uint32_t q);

    bool operator==(const Circuit&) const = default;

   private:
    Circuit& unary(GateKind k, uint32_t q, double arg = 0.0);
    Circuit& binary(GateKind k, uint32_t a, uint32_t b, double arg = 0.0);

    size_t num_qubits_ = 0;
    size_t num_records_ = 0;
    bool clifford_ = true;
    std::vector<bool> record_used_;
    std::vector<Gate> ops_;
};

/// Primitive Clifford gates every Clifford instruction decomposes into.
enum class Prim : uint8_t { H, S, S_DAG, X, Y, Z, CX, CZ };
struct PrimOp {
    Prim kind;
    uint32_t a;
    uint32_t b;
};

/// Number of quarter turns of `angle`; throws if not a multiple of pi/2.
int quarter_turns(double angle);

/// Clifford unitary as primitives in time order, equal to the gate up to a
/// global phase. Throws std::invalid_argument for non-Clifford angles and
/// non-unitary instructions.
std::vector<PrimOp> clifford_decomposition(const Gate& g);

/// Conjugation action of the unitary part of `c` (measurements rejected).
CliffordMap clifford_map(const Circuit& c);

/// Conjugates `p` by every unitary gate of `c` in order.
void conjugate_by_circuit(PauliString& p, const Circuit& c);

enum class LayerKind : uint8_t { Single, Two, Measure };

struct LayerDurations {
    double single = 130e-6;
    double two = 950e-6;
    double measure = 400e-6;
    double of(LayerKind k) const;
};

struct Layer {
    LayerKind kind = LayerKind::Single;
    double duration = 0.0;
    std::vector<Gate> gates;
    std::vector<uint32_t> idle;  // qubits without a (non-virtual) gate in this layer
};

struct LayeredCircuit {
    size_t num_qubits = 0;
    size_t num_records = 0;
    bool clifford = true;
    std::vector<Layer> layers;

    Circuit flatten() const;
    double total_duration() const;
    /// Layer index of each qubit's last non-virtual instruction (-1 if none).
    std::vector<int> last_active_layer() const;
};

/// Virtual operations occupy no layer time: GZ, noise channels and record
/// flips. Barriers are consumed by the scheduler and do not reach layers.
bool is_virtual(const Gate& g);

/// Greedy ASAP packing into homogeneous layers (single, two-qubit, measure).
LayeredCircuit schedule_layers(const Circuit& c, const LayerDurations& durations = {});

/// Rewrites a Clifford circuit over the logical gate set into GPI, GPI2,
/// GZ, ZZ, MEASURE_Z and RESET. Deterministic, no optimization.
Circuit lower_to_native(const Circuit& c);

struct GateCounts {
    size_t single_qubit = 0;  // physical single-qubit gates (virtual GZ excluded)
    size_t two_qubit = 0;
    size_t zz = 0;
    size_t virtual_z = 0;
    size_t measurements = 0;
    size_t resets = 0;
    size_t noise = 0;
    size_t total_gates() const { return single_qubit + two_qubit; }
    bool operator==(const GateCounts&) const = default;
};
GateCounts count_gates(const Circuit& c);

/// Stim text for the supported subset: H, S, S_DAG, X, Y, Z, CX, CZ, M, R,
/// X_ERROR, Y_ERROR, Z_ERROR, PAULI_CHANNEL_1, DEPOLARIZE1, DEPOLARIZE2 and
/// TICK (for BARRIER).
/// A FLIP_RECORD directly after its measurement is written as M(p). Native
/// rotations at Clifford angles are translated through their primitive
/// decomposition (semantics preserved, structure not).
std::string export_stim(const Circuit& c);

/// Parses the same subset, skipping comments. Throws
/// std::invalid_argument naming the line and instruction on anything else.
Circuit parse_stim(std::string_view text);

}  // namespace clinr
