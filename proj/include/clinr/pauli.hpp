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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clinr {

constexpr size_t words_for_bits(size_t n) { return (n + 63) / 64; }

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each tensor factor is stored symplectically as (x, z) with
/// I = (0,0), X = (1,0), Y = (1,1), Z = (0,1), where the letter Y is the
/// Hermitian Y = iXZ. Qubit 0 is the leftmost character of the text form.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Dense text: optional sign ("+", "-", "+i", "-i", "i") then one of
    /// "IXYZ_" per qubit. Throws std::invalid_argument on bad input.
    static PauliString from_str(std::string_view text);

    /// Sparse text such as "Z6 X7 Z_{10} -Y3" restricted to `num_qubits`
    /// qubits; each index has `offset` subtracted before use.
    static PauliString from_sparse(std::string_view text, size_t num_qubits, size_t offset = 0);

    /// Single-letter factor on qubit q of an n-qubit register.
    static PauliString single(size_t num_qubits, size_t q, char letter);

    std::string str() const;
    std::string sparse_str(size_t offset = 0) const;

    size_t num_qubits() const { return n_; }
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t log_i) { phase_ = log_i & 3; }
    /// Sign of a Hermitian string: +1 or -1. Throws if the phase is imaginary.
    int sign() const;

    bool x(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set(size_t q, bool x_bit, bool z_bit);
    char letter(size_t q) const;
    void set_letter(size_t q, char letter);

    size_t weight() const;
    std::vector<size_t> support() const;
    bool is_identity() const;
    /// Equality of the unsigned operators (phase ignored).
    bool same_letters(const PauliString& other) const;

    std::span<const uint64_t> x_words() const { return x_; }
    std::span<const uint64_t> z_words() const { return z_; }

    PauliString& operator*=(const PauliString& rhs);
    PauliString inverse() const;
    bool commutes(const PauliString& other) const;
    bool operator==(const PauliString&) const = default;

    // In-place conjugation P -> U P U^dagger by a primitive Clifford U.
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_s_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cx(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);

    /// Tensor product: `this` on the low qubits, `other` after it.
    PauliString tensor(const PauliString& other) const;
    /// Copy into a register of `num_qubits` qubits at `offset`.
    PauliString embedded(size_t num_qubits, size_t offset) const;

   private:
    void check_index(size_t q) const;

    size_t n_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    uint8_t phase_ = 0;
};

PauliString operator*(PauliString lhs, const PauliString& rhs);
PauliString multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

/// Finds a subset of `basis` whose product equals `target` up to phase.
/// Returns a selection mask, or nullopt when target is outside the span.
std::optional<std::vector<bool>> express_in_basis(std::span<const PauliString> basis,
                                                  const PauliString& target);

/// Product of the selected basis elements, in index order.
PauliString product_of(std::span<const PauliString> basis, const std::vector<bool>& selection);

/// Finds a Pauli (phase 0) whose commutation with each generator g_k is
/// prescribed: anticommutes iff `anticommute[k]`. Generators must be
/// independent.
PauliString pauli_with_commutation(std::span<const PauliString> generators,
                                   const std::vector<bool>& anticommute);

enum class Direction { Forward, Inverse };

/// A Clifford unitary C stored by its conjugation action on generators:
/// x_image(q) = C X_q C^dagger and z_image(q) = C Z_q C^dagger.
class CliffordMap {
   public:
    CliffordMap() = default;
    explicit CliffordMap(size_t num_qubits);
    CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images);

    size_t num_qubits() const { return x_img_.size(); }
    const PauliString& x_image(size_t q) const { return x_img_[q]; }
    const PauliString& z_image(size_t q) const { return z_img_[q]; }

    /// Forward: C P C^dagger. Inverse: C^dagger P C.
    PauliString conjugate(const PauliString& p, Direction direction = Direction::Forward) const;
    CliffordMap inverse() const;
    /// Composition: (this then `after`), i.e. the map of after * this.
    CliffordMap then(const CliffordMap& after) const;

    bool is_valid() const;
    bool operator==(const CliffordMap&) const = default;

    // Append a primitive gate: C -> U C.
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_s_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cx(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);

   private:
    template <typename F>
    void for_each_image(F&& f) {
        for (auto& p : x_img_) f(p);
        for (auto& p : z_img_) f(p);
    }

    std::vector<PauliString> x_img_;
    std::vector<PauliString> z_img_;
};

}  // namespace clinr
