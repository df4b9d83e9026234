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

#include <numbers>
#include <random>

#include "clinr/statevector.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace clinr;

namespace {

constexpr double kPi = std::numbers::pi;

/// Applies every unitary of `c` to `sv`.
StateVector evolve(StateVector sv, const Circuit& c) {
    for (const auto& g : c.ops()) sv.apply(g);
    return sv;
}

/// Same unitary up to a state-independent global phase, checked on random
/// stabilizer states and their superpositions through a fixed reference.
bool same_unitary(const Circuit& a, const Circuit& b, std::mt19937_64& rng) {
    size_t n = a.num_qubits();
    StateVector ref = test::random_state(n, rng);
    Complex phase = evolve(ref, b).inner(evolve(ref, a));
    if (std::abs(std::abs(phase) - 1.0) > 1e-9) return false;
    for (int k = 0; k < 4; k++) {
        StateVector psi = test::random_state(n, rng);
        if (std::abs(evolve(psi, b).inner(evolve(psi, a)) - phase) > 1e-9) return false;
    }
    return true;
}

}  // namespace

TEST(circuit, append_validation) {
    Circuit c(3);
    ASSERT_THROW(c.h(3), std::out_of_range);
    ASSERT_THROW(c.cx(1, 1), std::invalid_argument);
    ASSERT_THROW(c.z_error(0, 1.5), std::invalid_argument);
    ASSERT_THROW(c.z_error(0, -0.1), std::invalid_argument);
    ASSERT_THROW(c.pauli_channel_1(0, 0.5, 0.4, 0.2), std::invalid_argument);
    ASSERT_THROW(c.flip_record(0, 0.1), std::out_of_range);
    ASSERT_THROW(c.rx(0, 0.3), std::invalid_argument);  // Clifford circuit
    ASSERT_EQ(c.measure(2), 0u);
    ASSERT_EQ(c.measure(0), 1u);
    ASSERT_EQ(c.num_records(), 2u);
    Gate m;
    m.kind = GateKind::MEASURE_Z;
    m.record = 1;
    ASSERT_THROW(c.append(m), std::invalid_argument);
    c.flip_record(1, 0.2);

    Circuit free_angles(1, false);
    free_angles.rx(0, 0.3);
    ASSERT_EQ(free_angles.ops().size(), 1u);
}

TEST(circuit, explicit_records_out_of_order) {
    Circuit c(2);
    Gate m;
    m.kind = GateKind::MEASURE_Z;
    m.targets[0] = 1;
    m.record = 1;
    c.append(m);
    m.targets[0] = 0;
    m.record = 0;
    c.append(m);
    ASSERT_EQ(c.num_records(), 2u);
}

TEST(circuit, append_circuit_remaps_qubits_and_records) {
    Circuit inner(2);
    inner.cx(0, 1);
    inner.measure(1);
    inner.flip_record(0, 0.1);
    Circuit outer(4);
    outer.measure(3);
    std::vector<uint32_t> map{2, 0};
    outer.append_circuit(inner, map);
    ASSERT_EQ(outer.ops()[1].targets[0], 2u);
    ASSERT_EQ(outer.ops()[1].targets[1], 0u);
    ASSERT_EQ(outer.ops()[2].targets[0], 0u);
    ASSERT_EQ(outer.ops()[2].record, 1);
    ASSERT_EQ(outer.ops()[3].record, 1);
}

TEST(circuit, decomposition_matches_matrices) {
    std::mt19937_64 rng(41);
    std::vector<GateKind> one{GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y,
                              GateKind::Z, GateKind::RX, GateKind::RZ, GateKind::GPI, GateKind::GPI2,
                              GateKind::GZ};
    for (auto kind : one) {
        for (int k = -4; k <= 4; k++) {
            Gate g;
            g.kind = kind;
            g.targets = {1, 0};
            g.args[0] = traits(kind).has_angle ? k * kPi / 2 : 0.0;
            Circuit direct(2);
            direct.append(g);
            Circuit prims(2);
            for (const auto& p : clifford_decomposition(g)) {
                Gate q;
                q.targets = {p.a, p.b};
                q.kind = std::array{GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X,
                                    GateKind::Y, GateKind::Z, GateKind::CNOT, GateKind::CZ}[static_cast<int>(p.kind)];
                prims.append(q);
            }
            ASSERT_TRUE(same_unitary(direct, prims, rng)) << gate_name(kind) << " k=" << k;
        }
    }
    for (int m = -8; m <= 8; m++) {
        Circuit direct(2, false);
        direct.zz(0, 1, m * kPi / 4);
        Circuit prims(2);
        for (const auto& p : clifford_decomposition(direct.ops()[0])) {
            if (p.kind == Prim::CZ) prims.cz(p.a, p.b);
            else if (p.kind == Prim::S) prims.s(p.a);
            else if (p.kind == Prim::S_DAG) prims.s_dag(p.a);
            else if (p.kind == Prim::Z) prims.z(p.a);
            else FAIL() << "unexpected primitive";
        }
        ASSERT_TRUE(same_unitary(direct, prims, rng)) << "ZZ m=" << m;
    }
}

TEST(circuit, clifford_map_matches_statevector) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; trial++) {
        auto c = test::random_native_circuit(3, 25, rng);
        auto m = clifford_map(c);
        auto p = test::random_pauli(3, rng);
        auto psi = test::random_state(3, rng);
        auto lhs = psi;
        lhs.apply_pauli(p);
        lhs = evolve(lhs, c);
        auto rhs = evolve(psi, c);
        rhs.apply_pauli(m.conjugate(p));
        ASSERT_NEAR(std::abs(lhs.inner(rhs) - 1.0), 0.0, 1e-9);
    }
}

TEST(circuit, lowering_preserves_unitary) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; trial++) {
        Circuit c = trial % 2 ? test::random_clifford_circuit(3, 30, rng) : test::random_native_circuit(3, 30, rng);
        Circuit low = lower_to_native(c);
        for (const auto& g : low.ops()) ASSERT_TRUE(traits(g.kind).native) << gate_name(g.kind);
        ASSERT_TRUE(same_unitary(c, low, rng));
    }
}

TEST(circuit, lowering_counts) {
    Circuit c(2);
    c.cx(0, 1);
    auto counts = count_gates(lower_to_native(c));
    ASSERT_EQ(counts.zz, 1u);
    ASSERT_EQ(counts.single_qubit, 2u);
    ASSERT_EQ(counts.virtual_z, 2u);

    Circuit h(1);
    h.h(0);
    h.s(0);
    h.z(0);
    counts = count_gates(lower_to_native(h));
    ASSERT_EQ(counts.single_qubit, 1u);
    ASSERT_EQ(counts.virtual_z, 3u);

    Circuit rz(1);
    rz.rz(0, 0.0);
    ASSERT_TRUE(lower_to_native(rz).empty());
    ASSERT_THROW(lower_to_native(Circuit(1, false)), std::invalid_argument);
}

TEST(circuit, schedule_layers_properties) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = lower_to_native(test::random_clifford_circuit(4, 40, rng));
        c.measure(0);
        c.reset(0);
        c.z_error(1, 0.01);
        c.measure(1);
        LayeredCircuit lc = schedule_layers(c);
        double total = 0.0;
        for (const auto& layer : lc.layers) {
            std::vector<int> used(4, 0);
            for (const auto& g : layer.gates) {
                if (is_virtual(g)) continue;
                bool two = traits(g.kind).two_qubit;
                bool meas = g.kind == GateKind::MEASURE_Z || g.kind == GateKind::RESET;
                LayerKind want = two ? LayerKind::Two : meas ? LayerKind::Measure : LayerKind::Single;
                ASSERT_EQ(layer.kind, want);
                for (auto q : g.qubits()) used[q]++;
            }
            for (size_t q = 0; q < 4; q++) {
                bool idle = std::find(layer.idle.begin(), layer.idle.end(), q) != layer.idle.end();
                // A measure-then-reset pair shares a layer.
                ASSERT_LE(used[q], 2);
                ASSERT_EQ(idle, used[q] == 0);
            }
            total += layer.duration;
        }
        ASSERT_DOUBLE_EQ(total, lc.total_duration());
        Circuit flat = lc.flatten();
        ASSERT_EQ(flat.num_records(), c.num_records());
        ASSERT_EQ(count_gates(flat), count_gates(c));
        std::vector<Circuit> unitary(2, Circuit(4));
        for (const auto& g : c.ops()) {
            if (traits(g.kind).unitary) unitary[0].append(g);
        }
        for (const auto& g : flat.ops()) {
            if (traits(g.kind).unitary) unitary[1].append(g);
        }
        ASSERT_EQ(clifford_map(unitary[0]), clifford_map(unitary[1]));
    }
}

TEST(circuit, schedule_layers_durations_and_barrier) {
    Circuit c(2);
    c.gpi2(0, 0.0);
    c.gz(1, kPi / 2);  // virtual prologue
    c.zz(0, 1, kPi / 4);
    c.gpi(1, 0.0);
    c.barrier();
    c.gpi(0, 0.0);
    c.measure(0);
    auto lc = schedule_layers(c);
    ASSERT_EQ(lc.layers.size(), 5u);
    ASSERT_EQ(lc.layers[0].kind, LayerKind::Single);
    ASSERT_EQ(lc.layers[0].gates.front().kind, GateKind::GZ);
    ASSERT_EQ(lc.layers[1].kind, LayerKind::Two);
    ASSERT_EQ(lc.layers[2].kind, LayerKind::Single);
    // The barrier keeps GPI(q0) out of layer 2 even though q0 is free there.
    ASSERT_EQ(lc.layers[3].kind, LayerKind::Single);
    ASSERT_EQ(lc.layers[4].kind, LayerKind::Measure);
    ASSERT_NEAR(lc.total_duration(), 3 * 130e-6 + 950e-6 + 400e-6, 1e-15);
    ASSERT_EQ(lc.last_active_layer(), (std::vector<int>{4, 2}));
}

TEST(circuit, stim_round_trip) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = test::random_clifford_circuit(4, 30, rng);
        c.x_error(0, 0.125);
        c.depolarize2(1, 2, 0.01);
        c.pauli_channel_1(3, 0.1, 0.2, 0.05);
        uint32_t r = c.measure(1);
        c.flip_record(r, 0.002);
        c.reset(1);
        c.barrier();
        c.measure(2);
        std::string text = export_stim(c);
        Circuit back = parse_stim(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(export_stim(back), text);
    }
}

TEST(circuit, stim_export_of_natives_is_equivalent) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c = test::random_native_circuit(3, 20, rng);
        Circuit back = parse_stim(export_stim(c));
        ASSERT_EQ(clifford_map(back), clifford_map(c));
    }
}

TEST(circuit, stim_parse) {
    Circuit c = parse_stim("# comment\nH 0 1\nCNOT 0 1 2 3\nM(0.01) 0\nMZ 3\nR 2\nTICK\nZ_ERROR(0.5) 1\n");
    ASSERT_EQ(c.num_qubits(), 4u);
    ASSERT_EQ(c.num_records(), 2u);
    auto counts = count_gates(c);
    ASSERT_EQ(counts.measurements, 2u);
    ASSERT_EQ(counts.noise, 2u);  // the M(p) flip and the Z_ERROR
    ASSERT_EQ(counts.resets, 1u);
    try {
        parse_stim("H 0\nFOO 1\n");
        FAIL();
    } catch (const std::invalid_argument& e) {
        ASSERT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    ASSERT_THROW(parse_stim("CX 0\n"), std::invalid_argument);
    ASSERT_THROW(parse_stim("X_ERROR(2) 0\n"), std::invalid_argument);
}
