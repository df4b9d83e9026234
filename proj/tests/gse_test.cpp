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

#include "clinr/circuit.hpp"
#include "clinr/statevector.hpp"
#include "clinr/tableau.hpp"
#include "clinr/trotter.hpp"
#include "gtest/gtest.h"

using namespace clinr;

TEST(gse, code_structure) {
    auto s = gse::stabilizers();
    ASSERT_EQ(s.size(), 4u);
    PauliString prod(6);
    for (const auto& a : s) {
        prod *= a;
        for (const auto& b : s) ASSERT_TRUE(a.commutes(b));
        for (const auto& b : gse::occupation_operators()) ASSERT_TRUE(a.commutes(b)) << a.str() << " " << b.str();
        ASSERT_TRUE(a.commutes(gse::block_operator()));
    }
    ASSERT_EQ(prod, PauliString::from_str("ZZZZZZ"));
    ASSERT_EQ(gse::block_operator(), PauliString::from_str("YZYYZY"));
    // The block hops a pair of modes: it flips two occupation operators.
    size_t flipped = 0;
    for (const auto& b : gse::occupation_operators()) flipped += !b.commutes(gse::block_operator());
    ASSERT_EQ(flipped, 2u);
}

TEST(gse, prep_circuit_prepares_the_encoded_state) {
    Circuit prep = gse::prep_circuit();
    auto gens = gse::prep_generators();
    ASSERT_EQ(gens.size(), 6u);
    Tableau t = run_noiseless(prep);
    StateVector sv = oracle_state(prep);
    for (const auto& g : gens) {
        ASSERT_EQ(t.expectation(g), 1) << g.str();
        ASSERT_NEAR(sv.expectation(g).real(), 1.0, 1e-9) << g.str();
    }
    // Occupation (1, 1, 0) gives B eigenvalues (-1, -1, +1).
    auto occ = gse::occupation_operators();
    ASSERT_EQ(t.expectation(occ[0]), -1);
    ASSERT_EQ(t.expectation(occ[1]), -1);
    ASSERT_EQ(t.expectation(occ[2]), 1);
    ASSERT_EQ(count_gates(lower_to_native(prep)).zz, 3u);
}

TEST(gse, block_output_distribution) {
    // Dense oracle: exp(i pi/4 P) = (I + i P) / sqrt 2 applied to the
    // prepared state, read out in the computational basis.
    StateVector prep = oracle_state(gse::prep_circuit());
    StateVector hop = prep;
    hop.apply_pauli(gse::block_operator());
    std::vector<Complex> expected(prep.amplitudes().size());
    for (size_t i = 0; i < expected.size(); i++) {
        expected[i] = (prep.amplitude(i) + Complex(0, 1) * hop.amplitude(i)) / std::sqrt(2.0);
    }
    Circuit body = gse::prep_circuit();
    body.append_circuit(trotter_block());
    StateVector got = oracle_state(body);
    Complex overlap = 0;
    for (size_t i = 0; i < expected.size(); i++) overlap += std::conj(expected[i]) * got.amplitude(i);
    ASSERT_NEAR(std::abs(overlap), 1.0, 1e-9);

    std::map<std::string, double> dist;
    for (size_t i = 0; i < expected.size(); i++) {
        double p = std::norm(got.amplitude(i));
        if (p < 1e-12) continue;
        std::vector<uint8_t> bits(6);
        for (size_t q = 0; q < 6; q++) bits[q] = (i >> q) & 1;
        auto d = gse::decode(bits);
        ASSERT_FALSE(d.odd_parity);
        dist[d.key()] += p;
    }
    ASSERT_NEAR(dist["110"], 0.5, 1e-9);
    ASSERT_NEAR(dist["011"], 0.5, 1e-9);
    ASSERT_EQ(gse::ideal_distribution(), (std::map<std::string, double>{{"110", 0.5}, {"011", 0.5}}));
}

TEST(gse, decode) {
    std::vector<uint8_t> bits{1, 0, 0, 1, 0, 0};
    auto d = gse::decode(bits);
    ASSERT_EQ(d.key(), "110");
    ASSERT_FALSE(d.odd_parity);
    bits = {1, 0, 0, 0, 0, 0};
    d = gse::decode(bits);
    ASSERT_EQ(d.key(), "100");
    ASSERT_TRUE(d.odd_parity);
    bits = {1, 1, 1, 1, 1, 1};
    ASSERT_EQ(gse::decode(bits).key(), "000");
    std::vector<uint8_t> short_bits{1, 0, 1};
    ASSERT_THROW(gse::decode(short_bits), std::invalid_argument);
    ASSERT_EQ(gse::even_states(), (std::vector<std::string>{"000", "110", "101", "011"}));
}
