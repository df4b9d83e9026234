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


#include "clinr/tableau.hpp"

#include <random>

#include "clinr/statevector.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace clinr;

TEST(tableau, bell_state) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    Tableau t = run_noiseless(c);
    ASSERT_EQ(t.expectation(PauliString::from_str("XX")), 1);
    ASSERT_EQ(t.expectation(PauliString::from_str("ZZ")), 1);
    ASSERT_EQ(t.expectation(PauliString::from_str("YY")), -1);
    ASSERT_EQ(t.expectation(PauliString::from_str("ZI")), 0);
    ASSERT_TRUE(t.check_invariants());
}

TEST(tableau, stabilizers_match_statevector) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng() % 6;
        Circuit c = trial % 2 ? test::random_clifford_circuit(n, 40, rng) : test::random_native_circuit(n, 40, rng);
        Tableau t = run_noiseless(c);
        ASSERT_TRUE(t.check_invariants());
        StateVector sv = oracle_state(c);
        for (size_t i = 0; i < n; i++) {
            ASSERT_NEAR(std::abs(sv.expectation(t.stabilizer(i)) - 1.0), 0.0, 1e-9) << t.stabilizer(i).str();
        }
        // Random Paulis: expectation agrees with the dense oracle.
        for (int k = 0; k < 10; k++) {
            auto p = test::random_pauli(n, rng);
            ASSERT_NEAR(sv.expectation(p).real(), t.expectation(p), 1e-9) << p.str();
        }
    }
}

TEST(tableau, measurement_matches_statevector) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 2 + rng() % 4;
        Circuit c = test::random_clifford_circuit(n, 30, rng);
        Tableau t = run_noiseless(c);
        StateVector sv = oracle_state(c);
        for (size_t q = 0; q < n; q++) {
            bool pick = rng() & 1;
            double p1 = sv.probability(q, true);
            auto r = t.measure(q, pick);
            if (r.random) {
                ASSERT_NEAR(p1, 0.5, 1e-9);
                ASSERT_EQ(r.value, pick);
            } else {
                ASSERT_NEAR(p1, r.value ? 1.0 : 0.0, 1e-9);
            }
            sv.project(q, r.value);
            ASSERT_FALSE(t.measure(q).random);
            ASSERT_TRUE(t.check_invariants());
        }
    }
}

TEST(tableau, reset_returns_to_zero) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    c.reset(0);
    Tableau t = run_noiseless(c);
    ASSERT_EQ(t.expectation(PauliString::from_str("ZI")), 1);
    ASSERT_EQ(t.expectation(PauliString::from_str("IZ")), 1);
}

TEST(tableau, from_stabilizers) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 8;
        Tableau t = run_noiseless(test::random_clifford_circuit(n, 50, rng));
        auto gens = t.stabilizers();
        Tableau u = Tableau::from_stabilizers(gens);
        ASSERT_TRUE(u.check_invariants());
        ASSERT_TRUE(u.same_state(t));
        ASSERT_TRUE(t.same_state(u));
    }
    std::vector<PauliString> bad{PauliString::from_str("XI"), PauliString::from_str("ZI")};
    ASSERT_THROW(Tableau::from_stabilizers(bad), std::invalid_argument);
    std::vector<PauliString> imaginary{PauliString::from_str("iXX"), PauliString::from_str("ZZ")};
    ASSERT_THROW(Tableau::from_stabilizers(imaginary), std::invalid_argument);
}

TEST(tableau, sign_sensitivity) {
    Circuit a(2), b(2);
    a.h(0);
    a.cx(0, 1);
    b.h(0);
    b.cx(0, 1);
    b.z(0);
    ASSERT_FALSE(run_noiseless(a).same_state(run_noiseless(b)));
}
