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


#include "clinr/harness.hpp"

#include <cmath>
#include <set>

#include "clinr/gse.hpp"
#include "gtest/gtest.h"

using namespace clinr;

namespace {

ExperimentConfig small_config(Variant v, size_t shots) {
    ExperimentConfig cfg;
    cfg.variant = v;
    cfg.shots = shots;
    cfg.seed = 42;
    if (v == Variant::Clinr) {
        cfg.graph_resource = true;
        cfg.checks = reference_plan(reference_pairs()[0]);
    }
    return cfg;
}

}  // namespace

TEST(harness, tvd_examples) {
    auto ideal = tvd(OccupationCounts{{"110", 50}, {"011", 50}});
    ASSERT_NEAR(ideal.tvd, 0.0, 1e-15);
    auto wrong = tvd(OccupationCounts{{"000", 100}});
    ASSERT_NEAR(wrong.tvd, 1.0, 1e-15);
    ASSERT_NEAR(wrong.incorrect, 1.0, 1e-15);
    ASSERT_NEAR(wrong.bias, 0.0, 1e-15);
    auto biased = tvd(OccupationCounts{{"110", 100}});
    ASSERT_NEAR(biased.tvd, 0.5, 1e-15);
    ASSERT_NEAR(biased.bias, 0.5, 1e-15);
    auto mixed = tvd(OccupationCounts{{"110", 40}, {"011", 50}, {"101", 6}, {"000", 4}});
    // 0.5 * (|0.4 - 0.5| + |0.5 - 0.5| + 0.1) = 0.1
    ASSERT_NEAR(mixed.tvd, 0.1, 1e-12);
    ASSERT_NEAR(mixed.incorrect, 0.1, 1e-12);
    ASSERT_NEAR(mixed.bias + mixed.incorrect, mixed.tvd, 1e-12);
    // Agrees with the generic distance against the ideal distribution.
    std::map<std::string, double> p{{"110", 0.4}, {"011", 0.5}, {"101", 0.06}, {"000", 0.04}};
    ASSERT_NEAR(tvd(p, gse::ideal_distribution()), mixed.tvd, 1e-12);
    ASSERT_NEAR(tvd(p, p), 0.0, 1e-15);
}

TEST(harness, bias_significance_examples) {
    ASSERT_NEAR(bias_significance(50, 50), 0.0, 1e-12);
    // Two-sided exact p-value: 2 * (1 + 10 + 45) / 1024.
    ASSERT_NEAR(bias_significance(8, 2), 1.0 - 112.0 / 1024.0, 1e-12);
    ASSERT_NEAR(bias_significance(2, 8), 1.0 - 112.0 / 1024.0, 1e-12);
    ASSERT_GT(bias_significance(52000, 48000), 0.999999);
    ASSERT_LT(bias_significance(50100, 49900), 0.5);
    ASSERT_THROW(bias_significance(0, 0), std::invalid_argument);
}

TEST(harness, bootstrap_errors_match_binomial) {
    OccupationCounts c{{"110", 47000}, {"011", 47000}, {"000", 3000}, {"101", 3000}};
    auto a = bootstrap_errors(c, 200, 5);
    auto b = bootstrap_errors(c, 200, 5);
    ASSERT_EQ(a.tvd, b.tvd);
    double analytic = std::sqrt(0.06 * 0.94 / 100000);
    ASSERT_NEAR(a.incorrect, analytic, 0.2 * analytic);
    ASSERT_GT(a.tvd, 0.0);
}

TEST(harness, config_json) {
    auto j = nlohmann::json::parse(R"({
        "name": "s1", "variant": "clinr", "resource": "graph",
        "checks": [{"pauli": "X6 X8", "schedule": "ECM"}],
        "noise": {"p1q_z": 3e-4, "pair_table": {"uniform": 40}},
        "shots": 1000, "seed": 3
    })");
    auto cfg = config_from_json(j);
    ASSERT_EQ(cfg.name, "s1");
    ASSERT_EQ(cfg.variant, Variant::Clinr);
    ASSERT_TRUE(cfg.graph_resource);
    ASSERT_EQ(cfg.checks.size(), 1u);
    ASSERT_EQ(cfg.checks[0].schedule, Schedule::ECM);
    ASSERT_EQ(cfg.noise.p1q_z, 3e-4);
    ASSERT_TRUE(cfg.pair_table.uniform.has_value());
    ASSERT_FALSE(cfg.pair_table.synth_seed.has_value());
    ASSERT_EQ(config_fingerprint(config_from_json(to_json(cfg))), config_fingerprint(cfg));

    ASSERT_THROW(config_from_json(nlohmann::json::parse(R"({"shot": 5})")), std::invalid_argument);
    ASSERT_THROW(config_from_json(nlohmann::json::parse(R"({"variant": "other"})")), std::invalid_argument);
    ASSERT_THROW(config_from_json(nlohmann::json::parse(R"({"resource": "fancy"})")), std::invalid_argument);
    ASSERT_THROW(config_from_json(nlohmann::json::parse(R"({"noise": {"pair_table": {"uniform": 40, "synth_seed": 1}}})")),
                 std::invalid_argument);
    ASSERT_THROW(config_from_json(nlohmann::json::parse("[1]")), std::invalid_argument);
}

TEST(harness, fingerprint_ignores_only_the_name) {
    ExperimentConfig a;
    ExperimentConfig b = a;
    b.name = "renamed";
    ASSERT_EQ(config_fingerprint(a), config_fingerprint(b));
    b.shots++;
    ASSERT_NE(config_fingerprint(a), config_fingerprint(b));
    ExperimentConfig c = a;
    c.noise.p_spam *= 2;
    ASSERT_NE(config_fingerprint(a), config_fingerprint(c));
}

TEST(harness, noiseless_direct_is_ideal) {
    auto cfg = small_config(Variant::Direct, 20000);
    cfg.noiseless = true;
    auto r = run_experiment(cfg);
    ASSERT_EQ(r.accepted, cfg.shots);
    ASSERT_EQ(r.counts["000"] + r.counts["101"], 0u);
    ASSERT_NEAR(r.metrics.incorrect, 0.0, 1e-15);
    ASSERT_LT(r.metrics.tvd, 0.02);
}

TEST(harness, runs_are_reproducible) {
    std::vector<ExperimentConfig> cfgs{small_config(Variant::Direct, 3000), small_config(Variant::Clinr, 3000)};
    auto a = sweep(cfgs);
    auto b = sweep(cfgs);
    ASSERT_EQ(records_csv(a), records_csv(b));
    ASSERT_EQ(a[0].stats.qubits, 6u);
    ASSERT_GT(a[1].stats.qubits, 18u);
    ASSERT_LE(a[1].stats.qubits, 26u);
    auto j = to_json(a[1]);
    ASSERT_EQ(j.at("fingerprint"), a[1].fingerprint);
}

TEST(harness, acceptance_falls_with_more_checks) {
    auto direct = run_experiment(small_config(Variant::Direct, 20000));
    auto one = small_config(Variant::Clinr, 20000);
    one.checks.resize(1);
    auto two = small_config(Variant::Clinr, 20000);
    auto r1 = run_experiment(one);
    auto r2 = run_experiment(two);
    ASSERT_GT(direct.acceptance_rate, r1.acceptance_rate);
    ASSERT_GT(r1.acceptance_rate, r2.acceptance_rate);
    ASSERT_EQ(r2.check_rejections.size(), 2u);
    ASSERT_EQ(r2.accepted + r2.rejected_checks + r2.rejected_parity, r2.shots);
}

TEST(harness, all_rejected_batch_is_empty) {
    auto cfg = small_config(Variant::Clinr, 10);
    auto built = build_experiment(cfg);
    ASSERT_TRUE(built.layout.has_value());
    ShotBatch batch(10, built.noisy.num_records(), 0);
    const auto& rec = built.layout->checks[0];
    for (size_t s = 0; s < batch.shots(); s++) batch.shot(s)[rec.ancilla[0]] = !rec.expected;
    auto r = evaluate_batch(built, batch);
    ASSERT_TRUE(r.empty);
    ASSERT_EQ(r.accepted, 0u);
    ASSERT_TRUE(std::isnan(r.metrics.tvd));
    ASSERT_EQ(r.acceptance_rate, 0.0);
}

TEST(harness, random_plans) {
    auto cfgs = random_plan_configs(small_config(Variant::Direct, 100), 3, 2, 8, Schedule::MCM, 7);
    ASSERT_EQ(cfgs.size(), 6u);
    for (size_t i = 0; i < cfgs.size(); i++) {
        ASSERT_EQ(cfgs[i].variant, Variant::Clinr);
        ASSERT_EQ(cfgs[i].checks.size(), i / 2 + 1);
    }
    ASSERT_EQ(reference_pairs().size(), 6u);
    ASSERT_TRUE(hardware_reference().is_object());
}

TEST(harness, suites) {
    ExperimentConfig base;
    base.seed = 10;
    auto pairs = reference_pair_configs(base);
    ASSERT_EQ(pairs.size(), 7u);
    ASSERT_EQ(pairs[0].variant, Variant::Direct);
    ASSERT_EQ(pairs[6].name, "S6");
    ASSERT_EQ(pairs[6].seed, 16u);
    auto sched = schedule_configs(base);
    ASSERT_EQ(sched.size(), 19u);
    ASSERT_EQ(sched[1].name, "S1_MCM");
    ASSERT_EQ(sched[2].checks[0].schedule, Schedule::ECM);
    ASSERT_EQ(sched[3].checks[0].schedule, Schedule::MCM);
    ASSERT_EQ(sched[3].checks[1].schedule, Schedule::ECM);
    std::set<uint64_t> seeds;
    for (const auto& c : sched) seeds.insert(c.seed);
    ASSERT_EQ(seeds.size(), sched.size());
}
