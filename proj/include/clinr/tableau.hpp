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

#include <random>
#include <span>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"

namespace clinr {

struct MeasureResult {
    bool value = false;
    bool random = false;
};

/// Aaronson-Gottesman stabilizer tableau. Row i < n is destabilizer i,
/// row n + i is stabilizer i. Starts in |0...0>.
class Tableau {
   public:
    Tableau() = default;
    explicit Tableau(size_t num_qubits);

    /// State stabilized by `generators` (n independent, commuting,
    /// Hermitian). Destabilizers are completed automatically.
    static Tableau from_stabilizers(std::span<const PauliString> generators);

    size_t num_qubits() const { return n_; }
    const PauliString& destabilizer(size_t i) const { return rows_[i]; }
    const PauliString& stabilizer(size_t i) const { return rows_[n_ + i]; }
    std::vector<PauliString> stabilizers() const;

    void apply_h(size_t q) { for_rows([&](PauliString& r) { r.apply_h(q); }); }
    void apply_s(size_t q) { for_rows([&](PauliString& r) { r.apply_s(q); }); }
    void apply_s_dag(size_t q) { for_rows([&](PauliString& r) { r.apply_s_dag(q); }); }
    void apply_x(size_t q) { for_rows([&](PauliString& r) { r.apply_x(q); }); }
    void apply_y(size_t q) { for_rows([&](PauliString& r) { r.apply_y(q); }); }
    void apply_z(size_t q) { for_rows([&](PauliString& r) { r.apply_z(q); }); }
    void apply_cx(size_t c, size_t t) { for_rows([&](PauliString& r) { r.apply_cx(c, t); }); }
    void apply_cz(size_t a, size_t b) { for_rows([&](PauliString& r) { r.apply_cz(a, b); }); }
    /// Applies a Pauli operator as a gate (its phase is irrelevant).
    void apply_pauli(const PauliString& p);

    /// Clifford unitary gate; throws std::invalid_argument otherwise.
    void apply_unitary(const Gate& g);

    /// Z-basis measurement. A random outcome takes the value `random_bit`.
    MeasureResult measure(size_t q, bool random_bit = false);
    /// Measures and flips to |0>.
    void reset(size_t q, bool random_bit = false);

    /// +1 or -1 if the Hermitian Pauli `p` (or -p) stabilizes the state, else 0.
    int expectation(const PauliString& p) const;

    /// Same stabilizer group including signs.
    bool same_state(const Tableau& other) const;

    /// Canonical commutation pattern and Hermitian stabilizers.
    bool check_invariants() const;

   private:
    template <typename F>
    void for_rows(F&& f) {
        for (auto& r : rows_) f(r);
    }

    size_t n_ = 0;
    std::vector<PauliString> rows_;
};

/// Runs the unitary, measurement and reset instructions of `c` on a fresh
/// tableau. Noise instructions are skipped and random outcomes read 0.
/// Returns the final state; records go to `records` when non-null.
Tableau run_noiseless(const Circuit& c, std::vector<uint8_t>* records = nullptr);

/// One noisy shot: noise sampled and random outcomes drawn from `rng`.
std::vector<uint8_t> run_tableau_shot(const Circuit& c, std::mt19937_64& rng);

}  // namespace clinr
