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


#include "clinr/clinr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <stdexcept>

namespace clinr {

ResourceSpec bell_clifford_resource(const Circuit& clifford) {
    if (!clifford.clifford()) throw std::invalid_argument("resource needs a Clifford circuit");
    ResourceSpec spec;
    spec.n = clifford.num_qubits();
    spec.clifford = clifford;
    spec.map = clifford_map(clifford);
    size_t n = spec.n;
    for (char letter : {'X', 'Z'}) {
        for (size_t i = 0; i < n; i++) {
            PauliString p = PauliString::single(n, i, letter);
            PauliString img = letter == 'X' ? spec.map.x_image(i) : spec.map.z_image(i);
            spec.generators.push_back(p.tensor(img));
        }
    }
    return spec;
}

Circuit naive_resource_circuit(const ResourceSpec& spec) {
    uint32_t n = static_cast<uint32_t>(spec.n);
    Circuit c(2 * n, true);
    for (uint32_t i = 0; i < n; i++) c.h(i);
    for (uint32_t i = 0; i < n; i++) c.cx(i, n + i);
    std::vector<uint32_t> second(n);
    for (uint32_t i = 0; i < n; i++) second[i] = n + i;
    c.append_circuit(spec.clifford, second);
    return c;
}

std::optional<PauliString> group_element(std::span<const PauliString> generators, const PauliString& letters) {
    auto sel = express_in_basis(generators, letters);
    if (!sel) return std::nullopt;
    PauliString p = product_of(generators, *sel);
    if (!p.same_letters(letters)) return std::nullopt;
    return p;
}

std::vector<PauliString> enumerate_stabilizers(std::span<const PauliString> generators) {
    size_t m = generators.size();
    if (m > 20) throw std::invalid_argument("stabilizer enumeration is limited to 20 generators");
    if (m == 0) return {};
    std::vector<PauliString> out;
    out.reserve((size_t{1} << m) - 1);
    // Gray-code walk, one multiplication per element. The generators
    // commute, so the running product's sign does not depend on order.
    std::vector<PauliString> by_mask(size_t{1} << m);
    PauliString cur(generators[0].num_qubits());
    uint64_t prev = 0;
    for (uint64_t i = 1; i < (uint64_t{1} << m); i++) {
        uint64_t gray = i ^ (i >> 1);
        cur *= generators[static_cast<size_t>(std::countr_zero(gray ^ prev))];
        prev = gray;
        by_mask[gray] = cur;
    }
    for (uint64_t mask = 1; mask < (uint64_t{1} << m); mask++) out.push_back(std::move(by_mask[mask]));
    return out;
}

std::vector<PauliString> stabilizers_below_weight(std::span<const PauliString> generators, size_t max_weight) {
    std::vector<PauliString> out;
    for (auto& p : enumerate_stabilizers(generators)) {
        if (p.weight() < max_weight) out.push_back(std::move(p));
    }
    return out;
}

std::string_view schedule_name(Schedule s) { return s == Schedule::MCM ? "MCM" : "ECM"; }

Schedule parse_schedule(std::string_view text) {
    std::string t(text);
    for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (t == "MCM") return Schedule::MCM;
    if (t == "ECM") return Schedule::ECM;
    throw std::invalid_argument("unknown schedule '" + std::string(text) + "' (expected MCM or ECM)");
}

StabilizerCheck parse_check(std::string_view sparse, Schedule schedule, const ResourceSpec& spec, size_t offset) {
    PauliString letters = PauliString::from_sparse(sparse, 2 * spec.n, offset);
    letters.set_phase(0);
    auto g = group_element(spec.generators, letters);
    if (!g) throw std::invalid_argument("'" + std::string(sparse) + "' is not a resource stabilizer");
    return {*g, schedule};
}

namespace {

class AncillaPool {
   public:
    explicit AncillaPool(uint32_t base) : next_(base) {}
    uint32_t take() {
        if (!free_.empty()) {
            uint32_t q = *free_.begin();
            free_.erase(free_.begin());
            return q;
        }
        return next_++;
    }
    void release(uint32_t q) { free_.insert(q); }
    uint32_t high_water() const { return next_; }

   private:
    uint32_t next_;
    std::set<uint32_t> free_;
};

struct PendingCheck {
    std::vector<uint32_t> ancillas;
    std::vector<uint32_t> flags;
    size_t index;
};

/// Ancilla `a` controls the Pauli `letter` on `t`.
void controlled_pauli(Circuit& c, uint32_t a, uint32_t t, char letter) {
    switch (letter) {
        case 'X': c.cx(a, t); break;
        case 'Z': c.cz(a, t); break;
        case 'Y':
            c.s_dag(t);
            c.cx(a, t);
            c.s(t);
            break;
        default: throw std::logic_error("controlled identity");
    }
}

}  // namespace

ClinrBuild clinr_circuit(const Circuit& data_prep, const ResourceSpec& spec, const VerificationPlan& plan,
                         const Circuit* resource_prep, const ClinrOptions& options) {
    size_t n = spec.n;
    if (data_prep.num_qubits() != n) throw std::invalid_argument("data preparation width does not match the resource");
    Circuit naive;
    if (!resource_prep) {
        naive = naive_resource_circuit(spec);
        resource_prep = &naive;
    }
    if (resource_prep->num_qubits() != 2 * n) throw std::invalid_argument("resource preparation must act on 2n qubits");
    if (data_prep.num_records() || resource_prep->num_records()) {
        throw std::invalid_argument("preparation circuits must not measure");
    }

    // Qubit count is only known after ancilla allocation, so gates are
    // collected on a wide scratch circuit and copied at the end.
    size_t max_anc = 0;
    for (const auto& ch : plan.checks) {
        if (ch.stabilizer.num_qubits() != 2 * n) throw std::invalid_argument("check does not act on the resource");
        if (ch.stabilizer.is_identity()) throw std::invalid_argument("identity check");
        max_anc += ch.stabilizer.weight() + (options.verify_cat ? 1 : 0);
    }
    uint32_t base = static_cast<uint32_t>(3 * n);
    Circuit c(3 * n + max_anc, true);
    ClinrLayout layout;
    layout.n = n;

    c.append_circuit(data_prep);
    std::vector<uint32_t> resource_qubits(2 * n);
    for (uint32_t i = 0; i < 2 * n; i++) resource_qubits[i] = static_cast<uint32_t>(n) + i;
    c.append_circuit(*resource_prep, resource_qubits);

    AncillaPool pool(base);
    std::vector<PendingCheck> deferred;
    layout.checks.resize(plan.checks.size());
    for (size_t k = 0; k < plan.checks.size(); k++) {
        const auto& ch = plan.checks[k];
        auto support = ch.stabilizer.support();
        std::vector<uint32_t> anc;
        for (size_t j = 0; j < support.size(); j++) anc.push_back(pool.take());
        c.h(anc[0]);
        for (size_t j = 1; j < anc.size(); j++) c.cx(anc[0], anc[j]);
        std::vector<uint32_t> flags;
        if (options.verify_cat) {
            uint32_t f = pool.take();
            c.cx(anc.front(), f);
            c.cx(anc.back(), f);
            flags.push_back(f);
        }
        for (size_t j = 0; j < support.size(); j++) {
            controlled_pauli(c, anc[j], static_cast<uint32_t>(n + support[j]), ch.stabilizer.letter(support[j]));
        }
        for (auto a : anc) c.h(a);
        auto& rec = layout.checks[k];
        rec.expected = ch.stabilizer.phase() == 2 ? 1 : 0;
        rec.schedule = ch.schedule;
        if (ch.schedule == Schedule::MCM) {
            for (auto f : flags) {
                rec.cat_flag.push_back(c.measure(f));
                c.reset(f);
                pool.release(f);
            }
            for (auto a : anc) {
                rec.ancilla.push_back(c.measure(a));
                c.reset(a);
                pool.release(a);
            }
        } else {
            deferred.push_back({anc, flags, k});
        }
    }

    for (uint32_t i = 0; i < n; i++) c.cx(i, static_cast<uint32_t>(n) + i);
    for (uint32_t i = 0; i < n; i++) c.h(i);
    c.barrier();
    for (uint32_t i = 0; i < n; i++) layout.data_records.push_back(c.measure(i));
    for (uint32_t i = 0; i < n; i++) layout.first_records.push_back(c.measure(static_cast<uint32_t>(n) + i));
    if (options.measure_output) {
        for (uint32_t i = 0; i < n; i++) layout.output_records.push_back(c.measure(static_cast<uint32_t>(2 * n) + i));
    }
    for (const auto& d : deferred) {
        for (auto f : d.flags) layout.checks[d.index].cat_flag.push_back(c.measure(f));
        for (auto a : d.ancillas) layout.checks[d.index].ancilla.push_back(c.measure(a));
    }

    // Shrink to the qubits actually used.
    size_t width = pool.high_water();
    Circuit out(width, true);
    for (const auto& g : c.ops()) out.append(g);
    layout.num_qubits = width;

    std::vector<uint8_t> zero(2 * n, 0);
    for (size_t k = 0; k < 2 * n; k++) {
        zero[k] = 1;
        PauliString q = feedforward_frame(zero, spec.map);
        zero[k] = 0;
        std::vector<uint8_t> mask(n);
        for (size_t j = 0; j < n; j++) mask[j] = q.x(j);
        layout.flip_masks.push_back(std::move(mask));
    }
    return {std::move(out), std::move(layout)};
}

PauliString feedforward_frame(std::span<const uint8_t> outcomes, const CliffordMap& clifford) {
    size_t n = clifford.num_qubits();
    if (outcomes.size() != 2 * n) throw std::invalid_argument("feedforward_frame expects 2n outcome bits");
    PauliString q(n);
    for (size_t i = 0; i < n; i++) {
        if (outcomes[n + i]) q *= clifford.x_image(i);
        if (outcomes[i]) q *= clifford.z_image(i);
    }
    q.set_phase(0);
    return q;
}

ClinrShot interpret_shot(std::span<const uint8_t> records, const ClinrLayout& layout) {
    ClinrShot shot;
    for (const auto& ch : layout.checks) {
        uint8_t parity = 0;
        for (auto r : ch.ancilla) parity ^= records[r];
        uint8_t flag = 0;
        for (auto r : ch.cat_flag) flag |= records[r];
        uint8_t fired = (parity != ch.expected) || flag;
        shot.check_parity.push_back(fired);
        if (fired) shot.accepted = false;
    }
    size_t n = layout.n;
    shot.output.resize(layout.output_records.size());
    for (size_t j = 0; j < shot.output.size(); j++) shot.output[j] = records[layout.output_records[j]];
    if (!shot.output.empty()) {
        for (size_t k = 0; k < 2 * n; k++) {
            uint32_t r = k < n ? layout.data_records[k] : layout.first_records[k - n];
            if (!records[r]) continue;
            for (size_t j = 0; j < n; j++) shot.output[j] ^= layout.flip_masks[k][j];
        }
    }
    return shot;
}

}  // namespace clinr
