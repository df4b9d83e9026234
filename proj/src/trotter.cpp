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


#include "clinr/trotter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clinr/gse.hpp"

namespace clinr {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

bool is_clifford_angle(double theta) {
    double k = theta / kHalfPi;
    return std::abs(k - std::round(k)) < 1e-9;
}

}  // namespace

Circuit pauli_exp_ladder(const PauliRotation& r) {
    const PauliString& p = r.pauli;
    if (p.is_identity()) throw std::invalid_argument("cannot exponentiate the identity");
    if (p.phase() != 0) throw std::invalid_argument("rotation axis must be an unsigned Pauli string");
    auto support = p.support();
    Circuit c(p.num_qubits(), is_clifford_angle(r.theta));

    auto basis_change = [&](bool undo) {
        for (auto q : support) {
            uint32_t t = static_cast<uint32_t>(q);
            char l = p.letter(q);
            if (l == 'X') c.h(t);
            else if (l == 'Y') c.rx(t, undo ? -kHalfPi : kHalfPi);
        }
    };
    basis_change(false);
    for (size_t i = 0; i + 1 < support.size(); i++) {
        c.cx(static_cast<uint32_t>(support[i]), static_cast<uint32_t>(support[i + 1]));
    }
    c.rz(static_cast<uint32_t>(support.back()), r.theta);
    for (size_t i = support.size() - 1; i > 0; i--) {
        c.cx(static_cast<uint32_t>(support[i - 1]), static_cast<uint32_t>(support[i]));
    }
    basis_change(true);
    return c;
}

Circuit trotter_block() { return pauli_exp_ladder({gse::block_operator(), -kHalfPi}); }

Circuit physical_trotter_circuit() {
    Circuit c(gse::kQubits, true);
    c.append_circuit(gse::prep_circuit());
    c.append_circuit(trotter_block());
    for (uint32_t q = 0; q < gse::kQubits; q++) c.measure(q);
    return c;
}

}  // namespace clinr
