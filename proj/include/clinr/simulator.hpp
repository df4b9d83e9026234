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

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "clinr/circuit.hpp"

namespace clinr {

/// Measurement records of a batch, one byte per record per shot.
class ShotBatch {
   public:
    ShotBatch() = default;
    ShotBatch(size_t shots, size_t num_records, uint64_t seed)
        : shots_(shots), num_records_(num_records), seed_(seed), bits_(shots * num_records, 0) {}

    size_t shots() const { return shots_; }
    size_t num_records() const { return num_records_; }
    uint64_t seed() const { return seed_; }

    bool get(size_t shot, size_t record) const { return bits_[shot * num_records_ + record]; }
    std::span<const uint8_t> shot(size_t s) const { return {bits_.data() + s * num_records_, num_records_}; }
    std::span<uint8_t> shot(size_t s) { return {bits_.data() + s * num_records_, num_records_}; }
    const std::vector<uint8_t>& raw() const { return bits_; }

    /// Histogram keyed by the record bitstring, record 0 first.
    std::map<std::string, size_t> counts() const;
    /// Histogram restricted to the listed records, in the listed order.
    std::map<std::string, size_t> counts(std::span<const uint32_t> records) const;

   private:
    size_t shots_ = 0;
    size_t num_records_ = 0;
    uint64_t seed_ = 0;
    std::vector<uint8_t> bits_;
};

enum class Engine {
    Frame,    // Pauli-frame sampling against one noiseless reference run
    Tableau,  // an independent tableau per shot
};

struct RunOptions {
    Engine engine = Engine::Frame;
    size_t threads = 0;  // 0: CLINR_THREADS or hardware concurrency
};

/// Worker count from the CLINR_THREADS environment variable, falling back
/// to the hardware concurrency.
size_t default_thread_count();

/// Generator for shot `shot` of a batch seeded with `seed`. Each shot owns
/// its stream, so results do not depend on how shots are split across threads.
std::mt19937_64 shot_rng(uint64_t seed, uint64_t shot);

/// Samples `shots` executions of `c`. Deterministic in (c, shots, seed,
/// engine), independent of the thread count.
ShotBatch run_batch(const Circuit& c, size_t shots, uint64_t seed, const RunOptions& options = {});

}  // namespace clinr
