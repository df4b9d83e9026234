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

#include "clinr/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clinr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-9;

constexpr GateTraits kTraits[] = {
    // arity unitary two noise angle native
    {1, true, false, false, false, false},   // H
    {1, true, false, false, false, false},   // S
    {1, true, false, false, false, false},   // S_DAG
    {1, true, false, false, false, false},   // X
    {1, true, false, false, false, false},   // Y
    {1, true, false, false, false, false},   // Z
    {2, true, true, false, false, false},    // CNOT
    {2, true, true, false, false, false},    // CZ
    {1, true, false, false, true, false},    // RX
    {1, true, false, false, true, false},    // RZ
    {1, true, false, false, true, true},     // GPI
    {1, true, false, false, true, true},     // GPI2
    {1, true, false, false, true, true},     // GZ
    {2, true, true, false, true, true},      // ZZ
    {1, false, false, false, false, true},   // MEASURE_Z
    {1, false, false, false, false, true},   // RESET
    {1, false, false, true, false, false},   // X_ERROR
    {1, false, false, true, false, false},   // Y_ERROR
    {1, false, false, true, false, false},   // Z_ERROR
    {1, false, false, true, false, false},   // PAULI_CHANNEL_1
    {1, false, false, true, false, false},   // DEPOLARIZE1
    {2, false, false, true, false, false},   // DEPOLARIZE2
    {0, false, false, true, false, false},   // FLIP_RECORD
    {0, false, false, false, false, false},  // BARRIER
};

constexpr std::string_view kNames[] = {
    "H",  "S",    "S_DAG", "X",         "Y",     "Z",       "CNOT",    "CZ",
    "RX", "RZ",   "GPI",   "GPI2",      "GZ",    "ZZ",      "MEASURE_Z", "RESET",
    "X_ERROR", "Y_ERROR", "Z_ERROR", "PAULI_CHANNEL_1", "DEPOLARIZE1", "DEPOLARIZE2", "FLIP_RECORD", "BARRIER",
};

/// Multiples of pi/4 in [0, 8).
int eighth_turns(double angle) {
    double k = angle / (kPi / 4);
    double r = std::round(k);
    if (std::abs(k - r) > kAngleTol) {
        throw std::invalid_argument("angle " + std::to_string(angle) + " is not a multiple of pi/4");
    }
    return static_cast<int>(((static_cast<long long>(r) % 8) + 8) % 8);
}

bool is_quarter_turn(double angle) {
    double k = angle / (kPi / 2);
    return std::abs(k - std::round(k)) <= kAngleTol;
}

/// Representative of `angle` in (-pi, pi].
double wrap_angle(double angle) {
    double a = std::remainder(angle, 2 * kPi);
    if (a <= -kPi + kAngleTol) a += 2 * kPi;
    return a;
}

/// Representative of `phase` in [0, 2 pi).
double wrap_phase(double phase) {
    double a = std::fmod(phase, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    if (a > 2 * kPi - kAngleTol) a = 0;
    return a;
}

void check_clifford_angle(const Gate& g) {
    switch (g.kind) {
        case GateKind::RX:
        case GateKind::RZ:
        case GateKind::GZ:
        case GateKind::GPI:
        case GateKind::GPI2:
            if (!is_quarter_turn(g.angle())) {
                throw std::invalid_argument(std::string(gate_name(g.kind)) + " angle " + std::to_string(g.angle()) +
                                            " is not Clifford");
            }
            break;
        case GateKind::ZZ: {
            int m = eighth_turns(g.angle());
            if (m != 1 && m != 7) {
                throw std::invalid_argument("ZZ angle " + std::to_string(g.angle()) +
                                            " is not +-pi/4 in a Clifford circuit");
            }
            break;
        }
        default:
            break;
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<size_t>(kind)]; }

const GateTraits& traits(GateKind kind) { return kTraits[static_cast<size_t>(kind)]; }

void Circuit::append(Gate g) {
    const auto& t = traits(g.kind);
    for (size_t k = 0; k < t.arity; k++) {
        if (g.targets[k] >= num_qubits_) {
            throw std::out_of_range(std::string(gate_name(g.kind)) + " on qubit " + std::to_string(g.targets[k]) +
                                    " of a " + std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    if (t.arity == 2 && g.targets[0] == g.targets[1]) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " needs two distinct qubits");
    }
    for (size_t k = t.arity; k < 2; k++) g.targets[k] = 0;
    if (t.noise) {
        double total = 0.0;
        size_t nargs = g.kind == GateKind::PAULI_CHANNEL_1 ? 3 : 1;
        for (size_t k = 0; k < nargs; k++) {
            if (!(g.args[k] >= 0.0 && g.args[k] <= 1.0)) {
                throw std::invalid_argument(std::string(gate_name(g.kind)) + " probability out of [0, 1]");
            }
            total += g.args[k];
        }
        if (total > 1.0 + 1e-12) throw std::invalid_argument("PAULI_CHANNEL_1 probabilities sum above 1");
    }
    if (clifford_) check_clifford_angle(g);
    if (g.kind == GateKind::MEASURE_Z) {
        if (g.record < 0) g.record = static_cast<int32_t>(num_records_);
        size_t r = static_cast<size_t>(g.record);
        if (r < record_used_.size() && record_used_[r]) {
            throw std::invalid_argument("measurement record " + std::to_string(r) + " already written");
        }
        if (r >= record_used_.size()) record_used_.resize(r + 1, false);
        record_used_[r] = true;
        num_records_ = std::max(num_records_, r + 1);
    } else if (g.kind == GateKind::FLIP_RECORD) {
        if (g.record < 0 || static_cast<size_t>(g.record) >= num_records_ || !record_used_[g.record]) {
            throw std::out_of_range("FLIP_RECORD of unassigned record " + std::to_string(g.record));
        }
    } else {
        g.record = -1;
    }
    ops_.push_back(g);
}

void Circuit::append_circuit(const Circuit& other, std::span<const uint32_t> qubit_map) {
    if (!qubit_map.empty() && qubit_map.size() != other.num_qubits()) {
        throw std::invalid_argument("qubit map size does not match appended circuit");
    }
    int32_t record_base = static_cast<int32_t>(num_records_);
    for (Gate g : other.ops()) {
        for (size_t k = 0; k < traits(g.kind).arity; k++) {
            if (!qubit_map.empty()) g.targets[k] = qubit_map[g.targets[k]];
        }
        if (g.kind == GateKind::MEASURE_Z || g.kind == GateKind::FLIP_RECORD) g.record += record_base;
        append(g);
    }
}

Circuit& Circuit::unary(GateKind k, uint32_t q, double arg) {
    Gate g;
    g.kind = k;
    g.targets = {q, 0};
    g.args[0] = arg;
    append(g);
    return *this;
}

Circuit& Circuit::binary(GateKind k, uint32_t a, uint32_t b, double arg) {
    Gate g;
    g.kind = k;
    g.targets = {a, b};
    g.args[0] = arg;
    append(g);
    return *this;
}

Circuit& Circuit::pauli_channel_1(uint32_t q, double px, double py, double pz) {
    Gate g;
    g.kind = GateKind::PAULI_CHANNEL_1;
    g.targets = {q, 0};
    g.args = {px, py, pz};
    append(g);
    return *this;
}

Circuit& Circuit::flip_record(uint32_t record, double p) {
    Gate g;
    g.kind = GateKind::FLIP_RECORD;
    g.record = static_cast<int32_t>(record);
    g.args[0] = p;
    append(g);
    return *this;
}

Circuit& Circuit::barrier() {
    Gate g;
    g.kind = GateKind::BARRIER;
    append(g);
    return *this;
}

uint32_t Circuit::measure(uint32_t q) {
    unary(GateKind::MEASURE_Z, q);
    return static_cast<uint32_t>(num_records_ - 1);
}

int quarter_turns(double angle) {
    int m = eighth_turns(angle);
    if (m & 1) throw std::invalid_argument("angle " + std::to_string(angle) + " is not a multiple of pi/2");
    return m / 2;
}

std::vector<PrimOp> clifford_decomposition(const Gate& g) {
    uint32_t a = g.targets[0], b = g.targets[1];
    auto z_rotation = [&](int k) -> std::vector<PrimOp> {
        switch (k) {
            case 1: return {{Prim::S, a, 0}};
            case 2: return {{Prim::Z, a, 0}};
            case 3: return {{Prim::S_DAG, a, 0}};
            default: return {};
        }
    };
    switch (g.kind) {
        case GateKind::H: return {{Prim::H, a, 0}};
        case GateKind::S: return {{Prim::S, a, 0}};
        case GateKind::S_DAG: return {{Prim::S_DAG, a, 0}};
        case GateKind::X: return {{Prim::X, a, 0}};
        case GateKind::Y: return {{Prim::Y, a, 0}};
        case GateKind::Z: return {{Prim::Z, a, 0}};
        case GateKind::CNOT: return {{Prim::CX, a, b}};
        case GateKind::CZ: return {{Prim::CZ, a, b}};
        case GateKind::RZ:
        case GateKind::GZ: return z_rotation(quarter_turns(g.angle()));
        case GateKind::RX:
            switch (quarter_turns(g.angle())) {
                case 1: return {{Prim::H, a, 0}, {Prim::S, a, 0}, {Prim::H, a, 0}};
                case 2: return {{Prim::X, a, 0}};
                case 3: return {{Prim::H, a, 0}, {Prim::S_DAG, a, 0}, {Prim::H, a, 0}};
                default: return {};
            }
        case GateKind::GPI2:
            // Rotation by pi/2 about cos(phase) X + sin(phase) Y.
            switch (quarter_turns(g.angle())) {
                case 0: return {{Prim::H, a, 0}, {Prim::S, a, 0}, {Prim::H, a, 0}};
                case 1: return {{Prim::Z, a, 0}, {Prim::H, a, 0}};
                case 2: return {{Prim::H, a, 0}, {Prim::S_DAG, a, 0}, {Prim::H, a, 0}};
                default: return {{Prim::H, a, 0}, {Prim::Z, a, 0}};
            }
        case GateKind::GPI:
            return (quarter_turns(g.angle()) & 1) ? std::vector<PrimOp>{{Prim::Y, a, 0}}
                                                  : std::vector<PrimOp>{{Prim::X, a, 0}};
        case GateKind::ZZ:
            switch (eighth_turns(g.angle())) {
                // exp(-i pi/4 ZZ) ~ CZ (S (x) S), and ZZ(pi) ~ I.
                case 1:
                case 5: return {{Prim::S, a, 0}, {Prim::S, b, 0}, {Prim::CZ, a, b}};
                case 3:
                case 7:
                    return {{Prim::S_DAG, a, 0}, {Prim::S_DAG, b, 0}, {Prim::CZ, a, b}};
                case 2:
                case 6: return {{Prim::Z, a, 0}, {Prim::Z, b, 0}};
                case 4:
                case 0:
                default: return {};
            }
        default:
            throw std::invalid_argument(std::string(gate_name(g.kind)) + " has no Clifford unitary decomposition");
    }
}

namespace {

template <typename T>
void apply_prims(T& target, const std::vector<PrimOp>& prims) {
    for (const auto& p : prims) {
        switch (p.kind) {
            case Prim::H: target.apply_h(p.a); break;
            case Prim::S: target.apply_s(p.a); break;
            case Prim::S_DAG: target.apply_s_dag(p.a); break;
            case Prim::X: target.apply_x(p.a); break;
            case Prim::Y: target.apply_y(p.a); break;
            case Prim::Z: target.apply_z(p.a); break;
            case Prim::CX: target.apply_cx(p.a, p.b); break;
            case Prim::CZ: target.apply_cz(p.a, p.b); break;
        }
    }
}

}  // namespace

CliffordMap clifford_map(const Circuit& c) {
    CliffordMap m(c.num_qubits());
    for (const auto& g : c.ops()) {
        const auto& t = traits(g.kind);
        if (t.noise || g.kind == GateKind::BARRIER) continue;
        if (!t.unitary) throw std::invalid_argument("clifford_map: circuit contains " + std::string(gate_name(g.kind)));
        apply_prims(m, clifford_decomposition(g));
    }
    return m;
}

void conjugate_by_circuit(PauliString& p, const Circuit& c) {
    for (const auto& g : c.ops()) {
        const auto& t = traits(g.kind);
        if (t.noise || g.kind == GateKind::BARRIER) continue;
        if (!t.unitary) throw std::invalid_argument("conjugate_by_circuit: circuit contains " + std::string(gate_name(g.kind)));
        apply_prims(p, clifford_decomposition(g));
    }
}

double LayerDurations::of(LayerKind k) const {
    switch (k) {
        case LayerKind::Single: return single;
        case LayerKind::Two: return two;
        case LayerKind::Measure: return measure;
    }
    return 0.0;
}

bool is_virtual(const Gate& g) { return g.kind == GateKind::GZ || traits(g.kind).noise; }

Circuit LayeredCircuit::flatten() const {
    Circuit out(num_qubits, clifford);
    for (const auto& layer : layers) {
        for (const auto& g : layer.gates) out.append(g);
    }
    if (out.num_records() != num_records) throw std::logic_error("record count changed by flattening");
    return out;
}

double LayeredCircuit::total_duration() const {
    double t = 0.0;
    for (const auto& layer : layers) t += layer.duration;
    return t;
}

std::vector<int> LayeredCircuit::last_active_layer() const {
    std::vector<int> last(num_qubits, -1);
    for (size_t l = 0; l < layers.size(); l++) {
        for (const auto& g : layers[l].gates) {
            if (is_virtual(g)) continue;
            for (auto q : g.qubits()) last[q] = static_cast<int>(l);
        }
    }
    return last;
}

LayeredCircuit schedule_layers(const Circuit& c, const LayerDurations& durations) {
    size_t n = c.num_qubits();
    LayeredCircuit out;
    out.num_qubits = n;
    out.num_records = c.num_records();
    out.clifford = c.clifford();

    std::vector<std::vector<char>> busy;
    std::vector<int> ready(n, 0);
    std::vector<int> last_layer(n, -1);
    std::vector<GateKind> last_kind(n, GateKind::H);
    std::vector<int> record_layer(c.num_records(), -1);
    std::vector<Gate> prologue;

    auto new_layer = [&](LayerKind kind) {
        Layer layer;
        layer.kind = kind;
        layer.duration = durations.of(kind);
        out.layers.push_back(std::move(layer));
        busy.emplace_back(n, 0);
        return static_cast<int>(out.layers.size()) - 1;
    };

    for (const auto& g : c.ops()) {
        if (g.kind == GateKind::BARRIER) {
            std::fill(ready.begin(), ready.end(), static_cast<int>(out.layers.size()));
            continue;
        }
        if (g.kind == GateKind::FLIP_RECORD) {
            int l = record_layer[g.record];
            if (l < 0) throw std::logic_error("record flipped before measurement");
            out.layers[l].gates.push_back(g);
            continue;
        }
        auto qs = g.qubits();
        if (is_virtual(g)) {
            int l = -1;
            for (auto q : qs) l = std::max(l, last_layer[q]);
            if (l < 0) {
                // No physical history on any operand yet: runs before layer 0.
                prologue.push_back(g);
                continue;
            }
            out.layers[l].gates.push_back(g);
            for (auto q : qs) ready[q] = std::max(ready[q], l + 1);
            continue;
        }

        LayerKind kind = traits(g.kind).two_qubit ? LayerKind::Two
                         : (g.kind == GateKind::MEASURE_Z || g.kind == GateKind::RESET) ? LayerKind::Measure
                                                                                        : LayerKind::Single;
        int chosen = -1;
        if (g.kind == GateKind::RESET && last_layer[qs[0]] >= 0 && last_kind[qs[0]] == GateKind::MEASURE_Z &&
            ready[qs[0]] == last_layer[qs[0]] + 1) {
            chosen = last_layer[qs[0]];
        } else {
            int start = 0;
            for (auto q : qs) start = std::max(start, ready[q]);
            for (int l = start; l < static_cast<int>(out.layers.size()); l++) {
                if (out.layers[l].kind != kind) continue;
                bool free = true;
                for (auto q : qs) free = free && !busy[l][q];
                if (free) {
                    chosen = l;
                    break;
                }
            }
            if (chosen < 0) chosen = new_layer(kind);
        }
        out.layers[chosen].gates.push_back(g);
        for (auto q : qs) {
            busy[chosen][q] = 1;
            ready[q] = chosen + 1;
            last_layer[q] = chosen;
            last_kind[q] = g.kind;
        }
        if (g.kind == GateKind::MEASURE_Z) record_layer[g.record] = chosen;
    }

    if (!prologue.empty()) {
        // Virtual-only prefix: attach to the front of the first layer, or to
        // an otherwise empty single-qubit layer when nothing physical exists.
        if (out.layers.empty()) new_layer(LayerKind::Single);
        auto& first = out.layers.front().gates;
        first.insert(first.begin(), prologue.begin(), prologue.end());
    }
    for (size_t l = 0; l < out.layers.size(); l++) {
        for (uint32_t q = 0; q < n; q++) {
            if (!busy[l][q]) out.layers[l].idle.push_back(q);
        }
    }
    return out;
}

Circuit lower_to_native(const Circuit& c) {
    if (!c.clifford()) throw std::invalid_argument("lower_to_native requires a Clifford-flagged circuit");
    Circuit out(c.num_qubits(), true);
    auto gz = [&](uint32_t q, double angle) {
        double a = wrap_angle(angle);
        if (std::abs(a) > kAngleTol) out.gz(q, a);
    };
    for (const auto& g : c.ops()) {
        uint32_t a = g.targets[0], b = g.targets[1];
        switch (g.kind) {
            case GateKind::H:
                out.gz(a, kPi);
                out.gpi2(a, kPi / 2);
                break;
            case GateKind::S: out.gz(a, kPi / 2); break;
            case GateKind::S_DAG: out.gz(a, -kPi / 2); break;
            case GateKind::Z: out.gz(a, kPi); break;
            case GateKind::RZ: gz(a, g.angle()); break;
            case GateKind::X: out.gpi(a, 0.0); break;
            case GateKind::Y: out.gpi(a, kPi / 2); break;
            case GateKind::RX:
                switch (quarter_turns(g.angle())) {
                    case 1: out.gpi2(a, 0.0); break;
                    case 2: out.gpi(a, 0.0); break;
                    case 3: out.gpi2(a, kPi); break;
                    default: break;
                }
                break;
            case GateKind::CZ:
                out.zz(a, b, kPi / 4);
                out.gz(a, -kPi / 2);
                out.gz(b, -kPi / 2);
                break;
            case GateKind::CNOT:
                out.gpi2(b, 3 * kPi / 2);
                out.zz(a, b, kPi / 4);
                out.gz(a, -kPi / 2);
                out.gz(b, -kPi / 2);
                out.gpi2(b, kPi / 2);
                break;
            case GateKind::GPI: out.gpi(a, wrap_phase(g.angle())); break;
            case GateKind::GPI2: out.gpi2(a, wrap_phase(g.angle())); break;
            case GateKind::GZ: gz(a, g.angle()); break;
            case GateKind::ZZ: out.zz(a, b, g.angle()); break;
            default: out.append(g); break;
        }
    }
    return out;
}

GateCounts count_gates(const Circuit& c) {
    GateCounts counts;
    for (const auto& g : c.ops()) {
        const auto& t = traits(g.kind);
        if (g.kind == GateKind::BARRIER) {
            continue;
        } else if (t.noise) {
            counts.noise++;
        } else if (g.kind == GateKind::GZ) {
            counts.virtual_z++;
        } else if (g.kind == GateKind::MEASURE_Z) {
            counts.measurements++;
        } else if (g.kind == GateKind::RESET) {
            counts.resets++;
        } else if (t.two_qubit) {
            counts.two_qubit++;
            if (g.kind == GateKind::ZZ) counts.zz++;
        } else {
            counts.single_qubit++;
        }
    }
    return counts;
}

}  // namespace clinr
