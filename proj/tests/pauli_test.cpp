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


#include "clinr/pauli.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace clinr;

TEST(pauli_string, str_round_trip) {
    ASSERT_EQ(PauliString::from_str("+IXYZ").str(), "+IXYZ");
    ASSERT_EQ(PauliString::from_str("-XZ").str(), "-XZ");
    ASSERT_EQ(PauliString::from_str("iY").str(), "+iY");
    ASSERT_EQ(PauliString::from_str("-i_X").str(), "-iIX");
    ASSERT_THROW(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST(pauli_string, sparse_text) {
    auto p = PauliString::from_sparse("Z6 X7 Z10 Z12 X13 Z16", 12, 6);
    ASSERT_EQ(p.str(), "+ZXIIZIZXIIZI");
    ASSERT_EQ(p.sparse_str(6), "Z6 X7 Z10 Z12 X13 Z16");
    ASSERT_EQ(PauliString::from_sparse("Z_{10} Y_3", 12).str(), "+IIIYIIIIIIZI");
    ASSERT_THROW(PauliString::from_sparse("Z5", 12, 6), std::out_of_range);
    ASSERT_THROW(PauliString::from_sparse("Z20", 12, 6), std::out_of_range);
    ASSERT_EQ(PauliString::from_sparse("", 12), PauliString(12));
}

TEST(pauli_string, multiply_phases) {
    auto x = PauliString::from_str("X"), y = PauliString::from_str("Y"), z = PauliString::from_str("Z");
    ASSERT_EQ((x * y).str(), "+iZ");
    ASSERT_EQ((y * x).str(), "-iZ");
    ASSERT_EQ((z * x).str(), "+iY");
    ASSERT_EQ((y * z).str(), "+iX");
    ASSERT_EQ((x * x).str(), "+I");
    ASSERT_EQ((PauliString::from_str("XX") * PauliString::from_str("YY")).str(), "-ZZ");
    ASSERT_THROW(PauliString::from_str("X") * PauliString::from_str("XX"), std::invalid_argument);
}

TEST(pauli_string, multiply_matches_statevector) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng() % 4;
        auto p = test::random_pauli(n, rng, false), q = test::random_pauli(n, rng, false);
        auto psi = test::random_state(n, rng);
        auto a = psi, b = psi;
        a.apply_pauli(q);
        a.apply_pauli(p);
        b.apply_pauli(p * q);
        ASSERT_NEAR(std::abs(a.inner(b) - 1.0), 0.0, 1e-9) << p.str() << " " << q.str();
    }
}

TEST(pauli_string, inverse_and_identity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        auto p = test::random_pauli(1 + rng() % 70, rng, false);
        auto id = p * p.inverse();
        ASSERT_TRUE(id.is_identity());
        ASSERT_EQ(id.phase(), 0);
    }
}

TEST(pauli_string, commutes) {
    ASSERT_TRUE(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
    ASSERT_FALSE(commutes(PauliString::from_str("XI"), PauliString::from_str("ZZ")));
    ASSERT_TRUE(commutes(PauliString::from_str("YZYYZY"), PauliString::from_str("XYIIII")));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 130;
        auto p = test::random_pauli(n, rng), q = test::random_pauli(n, rng);
        ASSERT_EQ(p.commutes(q), (p * q) == (q * p));
    }
}

TEST(pauli_string, weight_and_support) {
    auto p = PauliString::from_str("IXIYZI");
    ASSERT_EQ(p.weight(), 3u);
    ASSERT_EQ(p.support(), (std::vector<size_t>{1, 3, 4}));
    ASSERT_EQ(PauliString::from_str("XY").tensor(PauliString::from_str("-Z")).str(), "-XYZ");
    ASSERT_EQ(PauliString::from_str("XY").embedded(4, 1).str(), "+IXYI");
}

TEST(pauli_string, conjugation_matches_statevector) {
    // U P U^dagger U |psi> == U P |psi> for every primitive.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + rng() % 3;
        auto p = test::random_pauli(n, rng);
        auto psi = test::random_state(n, rng);
        size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
        Gate g;
        g.targets = {static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
        auto image = p;
        switch (rng() % 8) {
            case 0: g.kind = GateKind::H; image.apply_h(a); break;
            case 1: g.kind = GateKind::S; image.apply_s(a); break;
            case 2: g.kind = GateKind::S_DAG; image.apply_s_dag(a); break;
            case 3: g.kind = GateKind::X; image.apply_x(a); break;
            case 4: g.kind = GateKind::Y; image.apply_y(a); break;
            case 5: g.kind = GateKind::Z; image.apply_z(a); break;
            case 6: g.kind = GateKind::CNOT; image.apply_cx(a, b); break;
            default: g.kind = GateKind::CZ; image.apply_cz(a, b); break;
        }
        auto lhs = psi, rhs = psi;
        lhs.apply_pauli(p);
        lhs.apply(g);
        rhs.apply(g);
        rhs.apply_pauli(image);
        ASSERT_NEAR(std::abs(lhs.inner(rhs) - 1.0), 0.0, 1e-9) << gate_name(g.kind) << " " << p.str();
    }
}

TEST(clifford_map, conjugate_forward_and_inverse) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 4;
        auto c = test::random_clifford_circuit(n, 20, rng);
        CliffordMap m = clifford_map(c);
        ASSERT_TRUE(m.is_valid());
        auto p = test::random_pauli(n, rng);
        auto image = m.conjugate(p);
        ASSERT_EQ(m.conjugate(image, Direction::Inverse), p);
        ASSERT_EQ(m.inverse().conjugate(image), p);
        // C P C^dagger C|psi> == C P |psi>.
        auto psi = test::random_state(n, rng);
        auto lhs = psi, rhs = psi;
        lhs.apply_pauli(p);
        for (const auto& g : c.ops()) lhs.apply(g);
        for (const auto& g : c.ops()) rhs.apply(g);
        rhs.apply_pauli(image);
        ASSERT_NEAR(std::abs(lhs.inner(rhs) - 1.0), 0.0, 1e-9);
        // Distributes over products.
        auto q = test::random_pauli(n, rng);
        ASSERT_EQ(m.conjugate(p * q), m.conjugate(p) * m.conjugate(q));
    }
}

TEST(clifford_map, composition) {
    std::mt19937_64 rng(29);
    auto a = test::random_clifford_circuit(3, 15, rng);
    auto b = test::random_clifford_circuit(3, 15, rng);
    Circuit ab(3);
    ab.append_circuit(a);
    ab.append_circuit(b);
    ASSERT_EQ(clifford_map(a).then(clifford_map(b)), clifford_map(ab));
    ASSERT_EQ(clifford_map(a).then(clifford_map(a).inverse()), CliffordMap(3));
}

TEST(gf2, express_in_basis_and_commutation_search) {
    std::vector<PauliString> basis{PauliString::from_str("XXI"), PauliString::from_str("IZZ"),
                                   PauliString::from_str("ZZI")};
    auto sel = express_in_basis(basis, PauliString::from_str("YYI"));
    ASSERT_TRUE(sel.has_value());
    ASSERT_TRUE(product_of(basis, *sel).same_letters(PauliString::from_str("YYI")));
    ASSERT_FALSE(express_in_basis(basis, PauliString::from_str("XII")).has_value());

    std::mt19937_64 rng(31);
    std::vector<PauliString> gens{PauliString::from_str("XYIIII"), PauliString::from_str("YXXYII"),
                                  PauliString::from_str("IIYXXY"), PauliString::from_str("IIIIYX"),
                                  PauliString::from_str("ZZIIII"), PauliString::from_str("IIZZII")};
    for (int trial = 0; trial < 20; trial++) {
        std::vector<bool> pattern(gens.size());
        for (size_t k = 0; k < gens.size(); k++) pattern[k] = rng() & 1;
        auto p = pauli_with_commutation(gens, pattern);
        for (size_t k = 0; k < gens.size(); k++) ASSERT_EQ(!p.commutes(gens[k]), pattern[k]);
    }
}
