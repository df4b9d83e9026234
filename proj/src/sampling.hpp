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

#include <cmath>
#include <cstdint>
#include <random>

namespace clinr::detail {

/// Integer threshold t with P(u < t) = p for u uniform on 64 bits; p >= 1
/// maps to the maximum and is special-cased by `fires`.
inline uint64_t probability_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return UINT64_MAX;
    return static_cast<uint64_t>(std::ldexp(p, 64));
}

inline bool fires(std::mt19937_64& rng, uint64_t threshold) {
    uint64_t u = rng();
    return threshold == UINT64_MAX || u < threshold;
}

/// Uniform index in [0, k).
inline uint32_t pick(std::mt19937_64& rng, uint32_t k) {
    return static_cast<uint32_t>((static_cast<unsigned __int128>(rng()) * k) >> 64);
}

}  // namespace clinr::detail
