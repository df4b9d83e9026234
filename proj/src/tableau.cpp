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

#include <stdexcept>

#include "sampling.hpp"

namespace clinr {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    rows_.reserve(2 * n_);
    for (size_t i = 0; i < n_; i++) rows_.push_back(PauliString::single(n_, i, 'X'));
    for (size_t i = 0; i < n_; i++) rows_.push_back(PauliString::single(n_, i, 'Z'));
}

Tableau Tableau::from_stabilizers(std::span<const PauliString> generators) {
    size_t n = generators.size();
    for (const auto& g : generators) {
        if (g.num_qubits() != n) throw std::invalid_argument("need exactly one generator per qubit");
        if (g.phase() & 1) throw std::invalid_argument("stabilizer generator " + g.str() + " is not Hermitian");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!generators[i].commutes(generators[j])) {
                throw std::invalid_argument("generators " + generators[i].str() + " and " + generators[j].str() +
                                            " anticommute");
            }
        }
    }
    Tableau t;
    t.n_ = n;
    std::vector<PauliString> destab;
    for (size_t i = 0; i < n; i++) {
        std::vector<bool> pattern(n, false);
        pattern[i] = true;
        PauliString d = pauli_with_commutation(generators, pattern);
        // Symplectic Gram-Schmidt against earlier destabilizers.
        for (size_t k = 0; k < i; k++) {
            if (!d.commutes(destab[k])) d *= generators[k];
        }
        d.set_phase(0);
        destab.push_back(std::move(d));
    }
    t.rows_ = std::move(destab);
    for (const auto& g : generators) t.rows_.push_back(g);
    return t;
}

std::vector<PauliString> Tableau::stabilizers() const { return {rows_.begin() + n_, rows_.end()}; }

void Tableau::apply_pauli(const PauliString& p) {
    for (auto& r : rows_) {
        if (!r.commutes(p)) r.set_phase(r.phase() + 2);
    }
}

void Tableau::apply_unitary(const Gate& g) {
    if (!traits(g.kind).unitary) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " is not a unitary gate");
    }
    for (const auto& p : clifford_decomposition(g)) {
        switch (p.kind) {
            case Prim::H: apply_h(p.a); break;
            case Prim::S: apply_s(p.a); break;
            case Prim::S_DAG: apply_s_dag(p.a); break;
            case Prim::X: apply_x(p.a); break;
            case Prim::Y: apply_y(p.a); break;
            case Prim::Z: apply_z(p.a); break;
            case Prim::CX: apply_cx(p.a, p.b); break;
            case Prim::CZ: apply_cz(p.a, p.b); break;
        }
    }
}

MeasureResult Tableau::measure(size_t q, bool random_bit) {
    if (q >= n_) throw std::out_of_range("measured qubit out of range");
    size_t p = 2 * n_;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (rows_[i].x(q)) {
            p = i;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t i = 0; i < 2 * n_; i++) {
            if (i != p && rows_[i].x(q)) rows_[i] *= rows_[p];
        }
        rows_[p - n_] = rows_[p];
        PauliString z = PauliString::single(n_, q, 'Z');
        if (random_bit) z.set_phase(2);
        rows_[p] = std::move(z);
        return {random_bit, true};
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (rows_[i].x(q)) acc *= rows_[n_ + i];
    }
    return {acc.phase() == 2, false};
}

void Tableau::reset(size_t q, bool random_bit) {
    if (measure(q, random_bit).value) apply_x(q);
}

int Tableau::expectation(const PauliString& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("expectation: size mismatch");
    for (size_t i = 0; i < n_; i++) {
        if (!rows_[n_ + i].commutes(p)) return 0;
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!rows_[i].commutes(p)) acc *= rows_[n_ + i];
    }
    return acc.phase() == p.phase() ? 1 : -1;
}

bool Tableau::same_state(const Tableau& other) const {
    if (other.n_ != n_) return false;
    for (size_t i = 0; i < n_; i++) {
        if (expectation(other.stabilizer(i)) != 1) return false;
    }
    return true;
}

bool Tableau::check_invariants() const {
    for (size_t i = 0; i < 2 * n_; i++) {
        for (size_t j = i + 1; j < 2 * n_; j++) {
            bool should_anticommute = j == i + n_;
            if (rows_[i].commutes(rows_[j]) == should_anticommute) return false;
        }
    }
    for (size_t i = n_; i < 2 * n_; i++) {
        if (rows_[i].phase() & 1) return false;
    }
    return true;
}

Tableau run_noiseless(const Circuit& c, std::vector<uint8_t>* records) {
    Tableau t(c.num_qubits());
    if (records) records->assign(c.num_records(), 0);
    for (const auto& g : c.ops()) {
        const auto& tr = traits(g.kind);
        if (tr.noise) continue;
        if (tr.unitary) {
            t.apply_unitary(g);
        } else if (g.kind == GateKind::MEASURE_Z) {
            bool v = t.measure(g.targets[0]).value;
            if (records) (*records)[g.record] = v;
        } else if (g.kind == GateKind::RESET) {
            t.reset(g.targets[0]);
        }
    }
    return t;
}

std::vector<uint8_t> run_tableau_shot(const Circuit& c, std::mt19937_64& rng) {
    using detail::fires;
    using detail::pick;
    using detail::probability_threshold;
    size_t n = c.num_qubits();
    Tableau t(n);
    std::vector<uint8_t> records(c.num_records(), 0);
    auto pauli_on = [&](uint32_t q, int which) {  // 1 = X, 2 = Y, 3 = Z
        if (which == 1) t.apply_x(q);
        else if (which == 2) t.apply_y(q);
        else if (which == 3) t.apply_z(q);
    };
    for (const auto& g : c.ops()) {
        uint32_t a = g.targets[0], b = g.targets[1];
        switch (g.kind) {
            case GateKind::MEASURE_Z:
                records[g.record] = t.measure(a, rng() & 1).value;
                break;
            case GateKind::RESET:
                t.reset(a, rng() & 1);
                break;
            case GateKind::X_ERROR:
                if (fires(rng, probability_threshold(g.probability()))) t.apply_x(a);
                break;
            case GateKind::Y_ERROR:
                if (fires(rng, probability_threshold(g.probability()))) t.apply_y(a);
                break;
            case GateKind::Z_ERROR:
                if (fires(rng, probability_threshold(g.probability()))) t.apply_z(a);
                break;
            case GateKind::PAULI_CHANNEL_1: {
                double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
                if (u < g.args[0]) pauli_on(a, 1);
                else if (u < g.args[0] + g.args[1]) pauli_on(a, 2);
                else if (u < g.args[0] + g.args[1] + g.args[2]) pauli_on(a, 3);
                break;
            }
            case GateKind::DEPOLARIZE1:
                if (fires(rng, probability_threshold(g.probability()))) pauli_on(a, 1 + pick(rng, 3));
                break;
            case GateKind::DEPOLARIZE2:
                if (fires(rng, probability_threshold(g.probability()))) {
                    uint32_t k = 1 + pick(rng, 15);
                    pauli_on(a, k & 3);
                    pauli_on(b, k >> 2);
                }
                break;
            case GateKind::FLIP_RECORD:
                if (fires(rng, probability_threshold(g.probability()))) records[g.record] ^= 1;
                break;
            case GateKind::BARRIER:
                break;
            default:
                t.apply_unitary(g);
                break;
        }
    }
    return records;
}

}  // namespace clinr
