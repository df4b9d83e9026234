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


#include "clinr/simulator.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

#include "clinr/tableau.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace clinr;

namespace {

double rate(const ShotBatch& b, size_t record) {
    size_t ones = 0;
    for (size_t s = 0; s < b.shots(); s++) ones += b.get(s, record);
    return static_cast<double>(ones) / static_cast<double>(b.shots());
}

void expect_rate(const ShotBatch& b, size_t record, double p) {
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(b.shots()));
    EXPECT_NEAR(rate(b, record), p, 5 * sigma + 1e-12) << "record " << record;
}

}  // namespace

TEST(simulator, deterministic_circuit) {
    Circuit c(3);
    c.x(0);
    c.cx(0, 2);
    c.measure(0);
    c.measure(1);
    c.measure(2);
    auto b = run_batch(c, 1000, 7);
    auto counts = b.counts();
    ASSERT_EQ(counts.size(), 1u);
    ASSERT_EQ(counts.begin()->first, "101");
}

TEST(simulator, random_outcomes_are_fair_and_correlated) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    c.measure(0);
    c.measure(1);
    auto b = run_batch(c, 40000, 3);
    expect_rate(b, 0, 0.5);
    for (size_t s = 0; s < b.shots(); s++) ASSERT_EQ(b.get(s, 0), b.get(s, 1));
}

TEST(simulator, channel_rates) {
    Circuit c(6);
    c.x_error(0, 0.1);
    c.depolarize1(1, 0.15);
    c.h(2);
    c.z_error(2, 0.2);
    c.h(2);
    c.depolarize2(3, 4, 0.3);
    c.pauli_channel_1(5, 0.05, 0.1, 0.3);
    for (uint32_t q = 0; q < 6; q++) c.measure(q);
    c.flip_record(0, 0.5);
    auto b = run_batch(c, 100000, 11);
    expect_rate(b, 0, 0.5);  // X_ERROR(0.1) then a fair flip
    expect_rate(b, 1, 0.1);
    expect_rate(b, 2, 0.2);
    expect_rate(b, 3, 0.3 * 8 / 15);
    expect_rate(b, 4, 0.3 * 8 / 15);
    expect_rate(b, 5, 0.15);
}

TEST(simulator, frame_matches_tableau_engine) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 6; trial++) {
        size_t n = 4;
        Circuit c = test::random_clifford_circuit(n, 25, rng);
        c.z_error(0, 0.1);
        c.depolarize2(1, 2, 0.2);
        uint32_t r = c.measure(3);
        c.flip_record(r, 0.05);
        c.reset(3);
        c.append_circuit(test::random_clifford_circuit(n, 15, rng));
        c.y_error(2, 0.1);
        for (uint32_t q = 0; q < n; q++) c.measure(q);
        size_t shots = 20000;
        auto frame = run_batch(c, shots, 5, {Engine::Frame, 1});
        auto tab = run_batch(c, shots, 6, {Engine::Tableau, 1});
        auto cf = frame.counts(), ct = tab.counts();
        std::map<std::string, int> keys;
        for (auto& [k, v] : cf) keys[k] = 1;
        for (auto& [k, v] : ct) keys[k] = 1;
        for (auto& [k, unused] : keys) {
            double a = static_cast<double>(cf[k]) / shots, b = static_cast<double>(ct[k]) / shots;
            double p = (a + b) / 2;
            double sigma = std::sqrt(p * (1 - p) * 2.0 / shots);
            ASSERT_LE(std::abs(a - b), 5 * sigma + 1e-9) << "outcome " << k;
        }
    }
}

TEST(simulator, deterministic_across_thread_counts) {
    std::mt19937_64 rng(17);
    Circuit c = test::random_clifford_circuit(8, 60, rng);
    for (uint32_t q = 0; q < 8; q++) c.z_error(q, 0.05);
    c.append_circuit(test::random_clifford_circuit(8, 60, rng));
    for (uint32_t q = 0; q < 8; q++) c.measure(q);
    auto one = run_batch(c, 5001, 99, {Engine::Frame, 1});
    for (size_t threads : {2, 3, 7}) {
        auto many = run_batch(c, 5001, 99, {Engine::Frame, threads});
        ASSERT_EQ(one.raw(), many.raw()) << threads << " threads";
    }
    ASSERT_NE(one.raw(), run_batch(c, 5001, 100, {Engine::Frame, 1}).raw());
}

TEST(simulator, thread_count_from_environment) {
    setenv("CLINR_THREADS", "3", 1);
    ASSERT_EQ(default_thread_count(), 3u);
    setenv("CLINR_THREADS", "junk", 1);
    ASSERT_GE(default_thread_count(), 1u);
    unsetenv("CLINR_THREADS");
}

TEST(simulator, record_subset_counts) {
    Circuit c(2);
    c.x(1);
    c.measure(0);
    c.measure(1);
    auto b = run_batch(c, 10, 1);
    std::vector<uint32_t> order{1, 0};
    ASSERT_EQ(b.counts(order).at("10"), 10u);
}
