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


#include "clinr/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace clinr;

namespace {

size_t count_kind(const Circuit& c, GateKind kind) {
    size_t k = 0;
    for (const auto& g : c.ops()) k += g.kind == kind;
    return k;
}

}  // namespace

TEST(noise, idle_dephasing_prob) {
    for (double dt : {130e-6, 950e-6, 400e-6}) {
        ASSERT_NEAR(idle_dephasing_prob(dt, 1.5), (1 - std::exp(-dt / 1.5)) / 2, 1e-16);
    }
    ASSERT_NEAR(idle_dephasing_prob(950e-6, 1.5), 3.16566e-4, 1e-9);
    ASSERT_EQ(idle_dephasing_prob(0.0, 1.5), 0.0);
    ASSERT_NEAR(idle_dephasing_prob(1e6, 1.5), 0.5, 1e-15);
    ASSERT_THROW(idle_dephasing_prob(-1.0, 1.5), std::invalid_argument);
    ASSERT_THROW(idle_dephasing_prob(1.0, 0.0), std::invalid_argument);
}

TEST(noise, attach_noise_channels) {
    const double pi = std::numbers::pi;
    Circuit c(3);
    c.gpi2(0, 0.0);
    c.gz(0, pi / 2);
    c.zz(0, 1, pi / 4);
    c.measure(0);
    c.measure(1);
    LayeredCircuit lc = schedule_layers(c);
    ASSERT_EQ(lc.layers.size(), 3u);

    NoiseModel m;
    m.pair_table = PairErrorTable::uniform(4, 40e-4);
    m.pair_table.set(1, 2, 60e-4);
    QubitMapping map{{2, 1, 0}};
    Circuit noisy = attach_noise(lc, m, map);
    std::vector<uint32_t> z1, z2, idle;
    double flip = 0;
    size_t flips = 0;
    for (const auto& g : noisy.ops()) {
        if (g.kind == GateKind::Z_ERROR) {
            if (g.probability() == m.p1q_z) z1.push_back(g.targets[0]);
            else if (g.probability() == 30e-4) z2.push_back(g.targets[0]);
            else idle.push_back(g.targets[0]);
        }
        if (g.kind == GateKind::FLIP_RECORD) {
            flip = g.probability();
            flips++;
        }
    }
    ASSERT_EQ(z1, (std::vector<uint32_t>{0}));      // GZ is virtual, GPI2 is not
    ASSERT_EQ(z2, (std::vector<uint32_t>{0, 1}));   // ion pair (2, 1) at 60 pptt, halved
    ASSERT_EQ(idle, (std::vector<uint32_t>{1}));    // q1 idles in layer 0; q2 is never active
    ASSERT_EQ(flips, 2u);
    ASSERT_EQ(flip, m.p_spam);

    NoiseModel off = m;
    off.single_qubit = off.two_qubit = off.idle = off.readout = false;
    ASSERT_EQ(count_gates(attach_noise(lc, off, map)).noise, 0u);

    NoiseModel half = m;
    half.scale = 0.5;
    for (const auto& g : attach_noise(lc, half, map).ops()) {
        if (g.kind == GateKind::FLIP_RECORD) ASSERT_DOUBLE_EQ(g.probability(), m.p_spam / 2);
    }
    ASSERT_THROW(attach_noise(lc, m, QubitMapping{{0, 0, 1}}), std::invalid_argument);
    ASSERT_THROW(attach_noise(lc, m, QubitMapping{{0, 1, 9}}), std::invalid_argument);
}

TEST(noise, idle_noise_stops_after_last_activity) {
    Circuit c(2);
    c.gpi(0, 0.0);
    c.gpi(1, 0.0);
    c.measure(1);
    c.gpi(0, 0.0);
    c.gpi(0, 0.0);
    c.measure(0);
    NoiseModel m;
    m.single_qubit = m.two_qubit = m.readout = false;
    Circuit noisy = attach_noise(schedule_layers(c), m, QubitMapping::identity(2));
    ASSERT_EQ(count_kind(noisy, GateKind::Z_ERROR), 1u);  // q0 idles while q1 is measured
}

TEST(noise, pair_table_csv_round_trip) {
    PairErrorTable t(4, 40e-4);
    t.set(0, 3, 55e-4);
    t.set(2, 1, 12.5e-4);
    ASSERT_EQ(t.rate(3, 0), 55e-4);
    auto back = PairErrorTable::from_csv(t.to_csv());
    ASSERT_EQ(back.num_ions(), 4u);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = i + 1; j < 4; j++) ASSERT_NEAR(back.rate(i, j), t.rate(i, j), 1e-15);
    }
    ASSERT_THROW(t.set(1, 1, 1e-3), std::out_of_range);
    ASSERT_THROW(t.set(0, 1, 0.7), std::invalid_argument);
    ASSERT_THROW(PairErrorTable::from_csv("ion_i,ion_j,drb_pptt\n0,1,abc\n"), std::invalid_argument);
    ASSERT_THROW(PairErrorTable::from_csv("ion_i,ion_j,drb_pptt\n0,2,40\n"), std::invalid_argument);
}

TEST(noise, optimize_mapping_matches_brute_force) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; trial++) {
        size_t ions = 6;
        PairErrorTable t(ions);
        for (size_t i = 0; i < ions; i++) {
            for (size_t j = i + 1; j < ions; j++) t.set(i, j, 1e-3 * (1 + static_cast<double>(rng() % 100)));
        }
        std::vector<std::pair<uint32_t, uint32_t>> pairs{{0, 1}, {1, 2}, {1, 2}, {0, 3}, {2, 3}};
        auto best = optimize_mapping(pairs, 4, t);
        best.validate(ions);
        double found = usage_weighted_mean(pairs, t, best);
        double brute = 1e9;
        std::vector<uint32_t> perm{0, 1, 2, 3, 4, 5};
        do {
            QubitMapping m{{perm[0], perm[1], perm[2], perm[3]}};
            brute = std::min(brute, usage_weighted_mean(pairs, t, m));
        } while (std::next_permutation(perm.begin(), perm.end()));
        ASSERT_NEAR(found, brute, 1e-15);
    }
    auto uniform = PairErrorTable::uniform(10, 40e-4);
    std::vector<std::pair<uint32_t, uint32_t>> pairs{{0, 1}, {2, 3}};
    ASSERT_EQ(optimize_mapping(pairs, 4, uniform), QubitMapping::identity(4));
}

TEST(noise, synthesized_table_hits_targets) {
    auto fit = synth_pair_table(2026);
    ASSERT_EQ(fit.table.num_ions(), 40u);
    ASSERT_NEAR(fit.small_mean, 41e-4, 1e-9);
    ASSERT_NEAR(fit.wide_mean / fit.small_mean, 59.0 / 41.0, 1e-3);
    auto again = synth_pair_table(2026);
    ASSERT_EQ(again.table.to_csv(), fit.table.to_csv());
    ASSERT_NE(synth_pair_table(7).table.to_csv(), fit.table.to_csv());
    PairTableParams bad;
    bad.target_small = 60e-4;
    ASSERT_THROW(synth_pair_table(1, bad), std::invalid_argument);
}

TEST(noise, model_validation) {
    NoiseModel m;
    m.validate();
    m.scale = 5000;
    ASSERT_THROW(m.validate(), std::invalid_argument);
    NoiseModel t2;
    t2.t2_star = 0;
    ASSERT_THROW(t2.validate(), std::invalid_argument);
}
