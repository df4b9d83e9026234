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

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "clinr/circuit.hpp"
#include "clinr/pauli.hpp"

namespace clinr {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;  // row-major

/// Exact single-qubit matrix of a one-qubit unitary gate at any angle.
Matrix2 gate_matrix(const Gate& g);

/// Dense state over at most 12 qubits, verification use only. Basis index
/// bit q is qubit q.
class StateVector {
   public:
    static constexpr size_t kMaxQubits = 12;

    explicit StateVector(size_t num_qubits);

    size_t num_qubits() const { return n_; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    Complex amplitude(size_t basis) const { return amp_[basis]; }
    double norm() const;

    void apply(const Gate& g);
    void apply_matrix(size_t q, const Matrix2& m);
    /// Multiplies by the Pauli operator, including its phase.
    void apply_pauli(const PauliString& p);

    /// Projects qubit q onto `outcome` and renormalizes. Returns the
    /// probability the outcome had; zero-probability projections throw.
    double project(size_t q, bool outcome);

    double probability(size_t q, bool outcome) const;
    /// <psi|P|psi>.
    Complex expectation(const PauliString& p) const;
    Complex inner(const StateVector& other) const;
    /// |<this|other>| == 1 within `tol`.
    bool equal_up_to_phase(const StateVector& other, double tol = 1e-9) const;

   private:
    size_t n_ = 0;
    std::vector<Complex> amp_;
};

/// Runs `c` exactly. Measurements and resets are projected onto the
/// entries of `outcomes`, consumed in program order (a reset consumes the
/// value of its implicit measurement). Noise instructions are ignored.
/// Throws std::invalid_argument if a forced outcome has probability zero.
StateVector oracle_state(const Circuit& c, std::span<const uint8_t> outcomes = {});

}  // namespace clinr
