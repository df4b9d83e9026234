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

#include "clinr/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clinr {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex cis(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

Matrix2 gate_matrix(const Gate& g) {
    const double r = 1.0 / std::numbers::sqrt2;
    double a = g.angle();
    switch (g.kind) {
        case GateKind::H: return {r, r, r, -r};
        case GateKind::S: return {1.0, 0.0, 0.0, kI};
        case GateKind::S_DAG: return {1.0, 0.0, 0.0, -kI};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -kI, kI, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::RX: return {std::cos(a / 2), -kI * std::sin(a / 2), -kI * std::sin(a / 2), std::cos(a / 2)};
        case GateKind::RZ:
        case GateKind::GZ: return {cis(-a / 2), 0.0, 0.0, cis(a / 2)};
        case GateKind::GPI: return {0.0, cis(-a), cis(a), 0.0};
        case GateKind::GPI2: return {r, -kI * cis(-a) * r, -kI * cis(a) * r, r};
        default: throw std::invalid_argument(std::string(gate_name(g.kind)) + " is not a one-qubit unitary");
    }
}

StateVector::StateVector(size_t num_qubits) : n_(num_qubits) {
    if (n_ > kMaxQubits) {
        throw std::invalid_argument("statevector oracle is limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    amp_.assign(size_t{1} << n_, 0.0);
    amp_[0] = 1.0;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply_matrix(size_t q, const Matrix2& m) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (i & bit) continue;
        Complex a0 = amp_[i], a1 = amp_[i | bit];
        amp_[i] = m[0] * a0 + m[1] * a1;
        amp_[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(const Gate& g) {
    const auto& t = traits(g.kind);
    if (t.noise || g.kind == GateKind::BARRIER) return;
    if (!t.unitary) throw std::invalid_argument("StateVector::apply: use project() for measurement and reset");
    if (!t.two_qubit) {
        apply_matrix(g.targets[0], gate_matrix(g));
        return;
    }
    size_t ba = size_t{1} << g.targets[0], bb = size_t{1} << g.targets[1];
    switch (g.kind) {
        case GateKind::CNOT:
            for (size_t i = 0; i < amp_.size(); i++) {
                if ((i & ba) && !(i & bb)) std::swap(amp_[i], amp_[i | bb]);
            }
            break;
        case GateKind::CZ:
            for (size_t i = 0; i < amp_.size(); i++) {
                if ((i & ba) && (i & bb)) amp_[i] = -amp_[i];
            }
            break;
        case GateKind::ZZ: {
            Complex even = cis(-g.angle()), odd = cis(g.angle());
            for (size_t i = 0; i < amp_.size(); i++) {
                bool parity = ((i & ba) != 0) != ((i & bb) != 0);
                amp_[i] *= parity ? odd : even;
            }
            break;
        }
        default: throw std::logic_error("unhandled two-qubit gate");
    }
}

void StateVector::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_) throw std::invalid_argument("apply_pauli: size mismatch");
    std::vector<Complex> out(amp_.size());
    Complex global = std::pow(kI, static_cast<int>(p.phase()));
    size_t xmask = 0, zmask = 0;
    int y_count = 0;
    for (size_t q = 0; q < n_; q++) {
        if (p.x(q)) xmask |= size_t{1} << q;
        if (p.z(q)) zmask |= size_t{1} << q;
        if (p.x(q) && p.z(q)) y_count++;
    }
    // Y = i X Z, so the letter string equals i^(#Y) X^x Z^z.
    global *= std::pow(kI, y_count);
    for (size_t i = 0; i < amp_.size(); i++) {
        double sign = (__builtin_popcountll(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xmask] += global * sign * amp_[i];
    }
    amp_ = std::move(out);
}

double StateVector::probability(size_t q, bool outcome) const {
    size_t bit = size_t{1} << q;
    double s = 0.0;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (((i & bit) != 0) == outcome) s += std::norm(amp_[i]);
    }
    return s;
}

double StateVector::project(size_t q, bool outcome) {
    double p = probability(q, outcome);
    if (p < 1e-12) throw std::invalid_argument("forced outcome has zero probability");
    size_t bit = size_t{1} << q;
    double scale = 1.0 / std::sqrt(p);
    for (size_t i = 0; i < amp_.size(); i++) {
        if (((i & bit) != 0) == outcome) amp_[i] *= scale;
        else amp_[i] = 0.0;
    }
    return p;
}

Complex StateVector::expectation(const PauliString& p) const {
    StateVector tmp = *this;
    tmp.apply_pauli(p);
    return inner(tmp);
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.n_ != n_) throw std::invalid_argument("inner: size mismatch");
    Complex s = 0.0;
    for (size_t i = 0; i < amp_.size(); i++) s += std::conj(amp_[i]) * other.amp_[i];
    return s;
}

bool StateVector::equal_up_to_phase(const StateVector& other, double tol) const {
    return std::abs(std::abs(inner(other)) - 1.0) <= tol;
}

StateVector oracle_state(const Circuit& c, std::span<const uint8_t> outcomes) {
    StateVector sv(c.num_qubits());
    size_t next = 0;
    auto forced = [&]() -> bool {
        if (next >= outcomes.size()) throw std::invalid_argument("oracle_state: not enough forced outcomes");
        return outcomes[next++] != 0;
    };
    for (const auto& g : c.ops()) {
        if (g.kind == GateKind::MEASURE_Z) {
            sv.project(g.targets[0], forced());
        } else if (g.kind == GateKind::RESET) {
            bool v = forced();
            sv.project(g.targets[0], v);
            if (v) sv.apply_matrix(g.targets[0], {0.0, 1.0, 1.0, 0.0});
        } else {
            sv.apply(g);
        }
    }
    return sv;
}

}  // namespace clinr
