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


#include "clinr/statevector.hpp"

#include <numbers>

#include "gtest/gtest.h"

using namespace clinr;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector run(const Circuit& c) { return oracle_state(c); }

}  // namespace

TEST(statevector, native_gate_identities) {
    // GPI2(0) = RX(pi/2), GPI(0) = X and GZ = RZ exactly.
    for (auto [native, reference] : std::vector<std::pair<Circuit, Circuit>>{
             {Circuit(1).gpi2(0, 0.0), Circuit(1).rx(0, kPi / 2)},
             {Circuit(1).gpi(0, 0.0), Circuit(1).x(0)},
             {Circuit(1).gpi(0, kPi / 2), Circuit(1).y(0)},
             {Circuit(1).gz(0, kPi / 2), Circuit(1).rz(0, kPi / 2)},
         }) {
        Circuit a(1), b(1);
        a.h(0);
        a.s(0);
        a.append_circuit(native);
        b.h(0);
        b.s(0);
        b.append_circuit(reference);
        ASSERT_TRUE(run(a).equal_up_to_phase(run(b)));
    }
    // ZZ(pi/4) = CZ up to S_dag on both qubits.
    Circuit zz(2), cz(2);
    for (Circuit* c : {&zz, &cz}) {
        c->h(0);
        c->h(1);
    }
    zz.zz(0, 1, kPi / 4);
    cz.cz(0, 1);
    cz.s(0);
    cz.s(1);
    ASSERT_TRUE(run(zz).equal_up_to_phase(run(cz)));
}

TEST(statevector, pauli_phase) {
    StateVector a(1);
    a.apply_pauli(PauliString::from_str("Y"));  // Y|0> = i|1>
    ASSERT_NEAR(std::abs(a.amplitude(1) - Complex(0, 1)), 0.0, 1e-12);
    StateVector b(1);
    b.apply_pauli(PauliString::from_str("-iX"));
    ASSERT_NEAR(std::abs(b.amplitude(1) - Complex(0, -1)), 0.0, 1e-12);
}

TEST(statevector, projection_and_forced_outcomes) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    c.measure(0);
    c.reset(1);
    uint8_t forced[] = {1, 1};
    StateVector sv = oracle_state(c, forced);
    ASSERT_NEAR(sv.probability(0, true), 1.0, 1e-12);
    ASSERT_NEAR(sv.probability(1, false), 1.0, 1e-12);
    uint8_t impossible[] = {1, 0};
    ASSERT_THROW(oracle_state(c, impossible), std::invalid_argument);
    ASSERT_THROW(oracle_state(c), std::invalid_argument);
}

TEST(statevector, size_limit) {
    ASSERT_THROW(StateVector(13), std::invalid_argument);
    ASSERT_EQ(StateVector(12).amplitudes().size(), 4096u);
}
