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

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"

namespace clinr {

struct PauliRotation {
    PauliString pauli;  // Hermitian, not the identity
    double theta = 0.0;
};

/// exp(-i theta/2 P) as a CNOT ladder: RX(pi/2) on Y positions and H on X
/// positions, a CNOT chain up the ascending support, RZ(theta) on the last
/// support qubit, then the mirror image.
Circuit pauli_exp_ladder(const PauliRotation& r);

/// The Trotter block exp(+i pi/4 YZYYZY), i.e. the ladder at theta = -pi/2.
Circuit trotter_block();

/// Encoded (1,1,0) preparation, the Trotter block, then MEASURE_Z on all
/// six qubits (records 0..5).
Circuit physical_trotter_circuit();

}  // namespace clinr
