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

#include <random>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"
#include "clinr/statevector.hpp"

namespace clinr::test {

inline PauliString random_pauli(size_t n, std::mt19937_64& rng, bool hermitian = true) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) p.set(q, rng() & 1, rng() & 1);
    p.set_phase(hermitian ? static_cast<uint8_t>(2 * (rng() & 1)) : static_cast<uint8_t>(rng() & 3));
    return p;
}

/// Random circuit over {H, S, S_DAG, X, Y, Z, CNOT, CZ}.
inline Circuit random_clifford_circuit(size_t n, size_t depth, std::mt19937_64& rng) {
    Circuit c(n, true);
    for (size_t i = 0; i < depth; i++) {
        uint32_t a = static_cast<uint32_t>(rng() % n);
        uint32_t k = static_cast<uint32_t>(rng() % (n > 1 ? 8 : 6));
        uint32_t b = static_cast<uint32_t>((a + 1 + rng() % (n > 1 ? n - 1 : 1)) % n);
        switch (k) {
            case 0: c.h(a); break;
            case 1: c.s(a); break;
            case 2: c.s_dag(a); break;
            case 3: c.x(a); break;
            case 4: c.y(a); break;
            case 5: c.z(a); break;
            case 6: c.cx(a, b); break;
            default: c.cz(a, b); break;
        }
    }
    return c;
}

/// Random circuit mixing the native and rotation gates at Clifford angles (ZZ at +-pi/4).
inline Circuit random_native_circuit(size_t n, size_t depth, std::mt19937_64& rng) {
    constexpr double kQ = 1.5707963267948966;
    Circuit c(n, true);
    for (size_t i = 0; i < depth; i++) {
        uint32_t a = static_cast<uint32_t>(rng() % n);
        uint32_t b = static_cast<uint32_t>((a + 1 + rng() % (n > 1 ? n - 1 : 1)) % n);
        double quarter = kQ * static_cast<double>(static_cast<int>(rng() % 8) - 4);
        switch (rng() % (n > 1 ? 7 : 5)) {
            case 0: c.rx(a, quarter); break;
            case 1: c.rz(a, quarter); break;
            case 2: c.gpi(a, quarter); break;
            case 3: c.gpi2(a, quarter); break;
            case 4: c.gz(a, quarter); break;
            case 5: c.zz(a, b, (rng() & 1 ? kQ : -kQ) / 2); break;
            default: c.cx(a, b); break;
        }
    }
    return c;
}

inline StateVector random_state(size_t n, std::mt19937_64& rng) {
    return oracle_state(random_clifford_circuit(n, 6 * n + 4, rng));
}

}  // namespace clinr::test
