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
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"

/// The [[6,3,2]] generalized superfast encoding of three fermionic modes.
namespace clinr::gse {

inline constexpr size_t kQubits = 6;
inline constexpr size_t kModes = 3;

/// XYIIII, YXXYII, IIYXXY, IIIIYX. Their product is +Z^6.
std::vector<PauliString> stabilizers();

/// B_i = Z_{2i} Z_{2i+1}; eigenvalue 1 - 2 n_i.
std::vector<PauliString> occupation_operators();

/// YZYYZY, the operator of the single Trotter block.
PauliString block_operator();

/// Code stabilizers plus -B0 and -B1: the encoded occupation (1,1,0).
std::vector<PauliString> prep_generators();

/// Graph-state synthesis of the (1,1,0) state with the fewest lowered ZZ
/// gates found by a seeded local-complementation search.
Circuit prep_circuit();

struct DecodedShot {
    std::array<uint8_t, kModes> occupation{};
    bool odd_parity = false;

    /// Occupation as text, mode 0 first (e.g. "110").
    std::string key() const;
};

/// n_i = m_{2i} xor m_{2i+1}.
DecodedShot decode(std::span<const uint8_t> bits);

/// The even-parity sector in a fixed order: 000, 110, 101, 011.
const std::vector<std::string>& even_states();

/// {110: 0.5, 011: 0.5}.
std::map<std::string, double> ideal_distribution();

}  // namespace clinr::gse
