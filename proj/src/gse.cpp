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


#include "clinr/gse.hpp"

#include <stdexcept>

#include "clinr/graph.hpp"

namespace clinr::gse {

std::vector<PauliString> stabilizers() {
    return {PauliString::from_str("XYIIII"), PauliString::from_str("YXXYII"), PauliString::from_str("IIYXXY"),
            PauliString::from_str("IIIIYX")};
}

std::vector<PauliString> occupation_operators() {
    return {PauliString::from_str("ZZIIII"), PauliString::from_str("IIZZII"), PauliString::from_str("IIIIZZ")};
}

PauliString block_operator() { return PauliString::from_str("YZYYZY"); }

std::vector<PauliString> prep_generators() {
    auto gens = stabilizers();
    gens.push_back(PauliString::from_str("-ZZIIII"));
    gens.push_back(PauliString::from_str("-IIZZII"));
    return gens;
}

Circuit prep_circuit() {
    static const Circuit cached = [] {
        auto gens = prep_generators();
        SearchOptions options;
        options.iterations = 500;
        options.restarts = 4;
        options.keep = 1;
        auto best = search_compilations(gens, options);
        return emit_graph_circuit(best.front());
    }();
    return cached;
}

std::string DecodedShot::key() const {
    std::string s(kModes, '0');
    for (size_t i = 0; i < kModes; i++) s[i] = occupation[i] ? '1' : '0';
    return s;
}

DecodedShot decode(std::span<const uint8_t> bits) {
    if (bits.size() != kQubits) throw std::invalid_argument("decode expects 6 measurement bits");
    DecodedShot d;
    uint8_t parity = 0;
    for (size_t i = 0; i < kModes; i++) {
        d.occupation[i] = (bits[2 * i] ^ bits[2 * i + 1]) & 1;
        parity ^= d.occupation[i];
    }
    d.odd_parity = parity != 0;
    return d;
}

const std::vector<std::string>& even_states() {
    static const std::vector<std::string> states{"000", "110", "101", "011"};
    return states;
}

std::map<std::string, double> ideal_distribution() { return {{"110", 0.5}, {"011", 0.5}}; }

}  // namespace clinr::gse
