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

#include "clinr/noise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace clinr {

PairErrorTable::PairErrorTable(size_t num_ions, double rate) : n_(num_ions), rates_(num_ions * num_ions, rate) {
    for (size_t i = 0; i < n_; i++) rates_[i * n_ + i] = 0.0;
}

double PairErrorTable::rate(size_t i, size_t j) const {
    if (i >= n_ || j >= n_ || i == j) throw std::out_of_range("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") not in table");
    return rates_[i * n_ + j];
}

void PairErrorTable::set(size_t i, size_t j, double rate) {
    if (i >= n_ || j >= n_ || i == j) throw std::out_of_range("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") not in table");
    if (!(rate > 0.0 && rate <= 0.5)) throw std::invalid_argument("pair rate must lie in (0, 0.5]");
    rates_[i * n_ + j] = rate;
    rates_[j * n_ + i] = rate;
}

double PairErrorTable::mean() const {
    double s = 0.0;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) s += rates_[i * n_ + j];
    }
    return num_pairs() ? s / static_cast<double>(num_pairs()) : 0.0;
}

std::string PairErrorTable::to_csv() const {
    std::ostringstream out;
    out << "ion_i,ion_j,drb_pptt\n";
    out.precision(17);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) out << i << "," << j << "," << rates_[i * n_ + j] * 1e4 << "\n";
    }
    return out.str();
}

PairErrorTable PairErrorTable::from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::tuple<size_t, size_t, double>> rows;
    size_t max_ion = 0, line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind("ion_i", 0) == 0) continue;
        std::istringstream fields(line);
        std::string a, b, c;
        if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c, ',')) {
            throw std::invalid_argument("pair table line " + std::to_string(line_no) + ": expected 3 fields");
        }
        try {
            size_t i = std::stoul(a), j = std::stoul(b);
            double pptt = std::stod(c);
            rows.emplace_back(i, j, pptt * 1e-4);
            max_ion = std::max({max_ion, i, j});
        } catch (const std::exception&) {
            throw std::invalid_argument("pair table line " + std::to_string(line_no) + ": bad number");
        }
    }
    if (rows.empty()) throw std::invalid_argument("pair table is empty");
    PairErrorTable t(max_ion + 1);
    std::vector<char> seen(t.n_ * t.n_, 0);
    for (auto [i, j, r] : rows) {
        t.set(i, j, r);
        seen[i * t.n_ + j] = seen[j * t.n_ + i] = 1;
    }
    for (size_t i = 0; i < t.n_; i++) {
        for (size_t j = i + 1; j < t.n_; j++) {
            if (!seen[i * t.n_ + j]) {
                throw std::invalid_argument("pair table misses pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    return t;
}

QubitMapping QubitMapping::identity(size_t num_qubits) {
    QubitMapping m;
    for (uint32_t q = 0; q < num_qubits; q++) m.ion.push_back(q);
    return m;
}

void QubitMapping::validate(size_t num_ions) const {
    std::vector<char> used(num_ions, 0);
    for (size_t q = 0; q < ion.size(); q++) {
        if (ion[q] >= num_ions) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " mapped outside the " + std::to_string(num_ions) +
                                        "-ion chain");
        }
        if (used[ion[q]]) throw std::invalid_argument("ion " + std::to_string(ion[q]) + " assigned twice");
        used[ion[q]] = 1;
    }
}

void NoiseModel::validate() const {
    auto prob = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument(std::string(what) + " must lie in [0, 0.5]");
    };
    prob(p1q_z * scale, "p1q_z");
    prob(p_spam * scale, "p_spam");
    if (!(t2_star > 0.0)) throw std::invalid_argument("t2_star must be positive");
    if (!(durations.single > 0 && durations.two > 0 && durations.measure > 0)) {
        throw std::invalid_argument("layer durations must be positive");
    }
    if (!(scale >= 0.0 && scale <= 1.0)) throw std::invalid_argument("scale must lie in [0, 1]");
}

double idle_dephasing_prob(double dt, double t2) {
    if (dt < 0 || !(t2 > 0)) throw std::invalid_argument("idle_dephasing_prob needs dt >= 0 and T2 > 0");
    return -std::expm1(-dt / t2) / 2;
}

Circuit attach_noise(const LayeredCircuit& lc, const NoiseModel& model, const QubitMapping& mapping) {
    model.validate();
    if (mapping.ion.size() < lc.num_qubits) throw std::invalid_argument("mapping does not cover every qubit");
    mapping.validate(model.pair_table.num_ions());

    Circuit out(lc.num_qubits, lc.clifford);
    auto last = lc.last_active_layer();
    double alpha = model.scale;
    for (size_t l = 0; l < lc.layers.size(); l++) {
        const Layer& layer = lc.layers[l];
        for (const Gate& g : layer.gates) {
            out.append(g);
            const auto& t = traits(g.kind);
            if (is_virtual(g)) continue;
            if (t.unitary && !t.two_qubit) {
                if (model.single_qubit && model.p1q_z > 0) out.z_error(g.targets[0], alpha * model.p1q_z);
            } else if (t.two_qubit) {
                if (model.two_qubit) {
                    double p = alpha * model.pair_table.rate(mapping.ion[g.targets[0]], mapping.ion[g.targets[1]]) / 2;
                    out.z_error(g.targets[0], p);
                    out.z_error(g.targets[1], p);
                }
            } else if (g.kind == GateKind::MEASURE_Z) {
                if (model.readout && model.p_spam > 0) out.flip_record(g.record, alpha * model.p_spam);
            }
        }
        if (!model.idle) continue;
        double p = alpha * idle_dephasing_prob(layer.duration, model.t2_star);
        if (p <= 0) continue;
        for (uint32_t q : layer.idle) {
            if (static_cast<int>(l) <= last[q]) out.z_error(q, p);
        }
    }
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> interactions(const Circuit& c) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (const auto& g : c.ops()) {
        if (traits(g.kind).two_qubit) {
            out.emplace_back(std::min(g.targets[0], g.targets[1]), std::max(g.targets[0], g.targets[1]));
        }
    }
    return out;
}

double usage_weighted_mean(std::span<const std::pair<uint32_t, uint32_t>> pairs, const PairErrorTable& table,
                           const QubitMapping& mapping) {
    if (pairs.empty()) return 0.0;
    double s = 0.0;
    for (auto [a, b] : pairs) s += table.rate(mapping.ion.at(a), mapping.ion.at(b));
    return s / static_cast<double>(pairs.size());
}

std::vector<std::pair<uint32_t, uint32_t>> complete_usage(size_t width) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t a = 0; a < width; a++) {
        for (uint32_t b = a + 1; b < width; b++) out.emplace_back(a, b);
    }
    return out;
}

namespace {

class MappingSearch {
   public:
    MappingSearch(std::span<const std::pair<uint32_t, uint32_t>> pairs, size_t num_qubits, const PairErrorTable& table)
        : k_(num_qubits), m_(table.num_ions()), table_(table), w_(num_qubits * num_qubits, 0.0) {
        for (auto [a, b] : pairs) {
            w_[a * k_ + b] += 1;
            w_[b * k_ + a] += 1;
        }
        nbrs_.resize(k_);
        for (size_t a = 0; a < k_; a++) {
            for (size_t b = 0; b < k_; b++) {
                if (w_[a * k_ + b] > 0) nbrs_[a].push_back(static_cast<uint32_t>(b));
            }
        }
    }

    double cost(const std::vector<uint32_t>& ion) const {
        double s = 0.0;
        for (size_t a = 0; a < k_; a++) {
            for (uint32_t b : nbrs_[a]) {
                if (b > a) s += w_[a * k_ + b] * table_.rate(ion[a], ion[b]);
            }
        }
        return s;
    }

    /// Cost contribution of qubit a sitting on `site`, skipping qubit `skip`.
    double local(const std::vector<uint32_t>& ion, size_t a, uint32_t site, size_t skip) const {
        double s = 0.0;
        for (uint32_t b : nbrs_[a]) {
            if (b == skip) continue;
            s += w_[a * k_ + b] * table_.rate(site, ion[b]);
        }
        return s;
    }

    std::vector<uint32_t> greedy(uint32_t start) const {
        std::vector<uint32_t> ion(k_, UINT32_MAX);
        std::vector<char> used(m_, 0), placed(k_, 0);
        std::vector<double> total(k_, 0.0);
        for (size_t a = 0; a < k_; a++) {
            for (uint32_t b : nbrs_[a]) total[a] += w_[a * k_ + b];
        }
        for (size_t step = 0; step < k_; step++) {
            // Next qubit: strongest tie to the placed set, then heaviest, then lowest index.
            size_t pick = k_;
            double best_tie = -1, best_total = -1;
            for (size_t a = 0; a < k_; a++) {
                if (placed[a]) continue;
                double tie = 0.0;
                for (uint32_t b : nbrs_[a]) {
                    if (placed[b]) tie += w_[a * k_ + b];
                }
                if (tie > best_tie || (tie == best_tie && total[a] > best_total)) {
                    pick = a, best_tie = tie, best_total = total[a];
                }
            }
            uint32_t site = UINT32_MAX;
            if (step == 0) {
                site = start;
            } else {
                double best = INFINITY;
                for (uint32_t s = 0; s < m_; s++) {
                    if (used[s]) continue;
                    double c = 0.0;
                    for (uint32_t b : nbrs_[pick]) {
                        if (placed[b]) c += w_[pick * k_ + b] * table_.rate(s, ion[b]);
                    }
                    if (c < best) best = c, site = s;
                }
            }
            ion[pick] = site;
            used[site] = 1;
            placed[pick] = 1;
        }
        return ion;
    }

    void descend(std::vector<uint32_t>& ion) const {
        std::vector<char> used(m_, 0);
        for (auto s : ion) used[s] = 1;
        for (;;) {
            double best_gain = 1e-15;
            int kind = 0;
            size_t ba = 0, bb = 0;
            for (size_t a = 0; a < k_; a++) {
                double here = local(ion, a, ion[a], k_);
                for (uint32_t s = 0; s < m_; s++) {
                    if (used[s]) continue;
                    double gain = here - local(ion, a, s, k_);
                    if (gain > best_gain) best_gain = gain, kind = 1, ba = a, bb = s;
                }
                for (size_t b = a + 1; b < k_; b++) {
                    // The a-b edge keeps its rate under a swap, so it is skipped.
                    double before = local(ion, a, ion[a], b) + local(ion, b, ion[b], a);
                    double after = local(ion, a, ion[b], b) + local(ion, b, ion[a], a);
                    double gain = before - after;
                    if (gain > best_gain) best_gain = gain, kind = 2, ba = a, bb = b;
                }
            }
            if (kind == 0) return;
            if (kind == 1) {
                used[ion[ba]] = 0;
                ion[ba] = static_cast<uint32_t>(bb);
                used[bb] = 1;
            } else {
                std::swap(ion[ba], ion[bb]);
            }
        }
    }

    size_t k_, m_;
    const PairErrorTable& table_;
    std::vector<double> w_;
    std::vector<std::vector<uint32_t>> nbrs_;
};

}  // namespace

QubitMapping optimize_mapping(std::span<const std::pair<uint32_t, uint32_t>> pairs, size_t num_qubits,
                              const PairErrorTable& table) {
    if (num_qubits > table.num_ions()) {
        throw std::invalid_argument("circuit needs " + std::to_string(num_qubits) + " qubits but the chain has " +
                                    std::to_string(table.num_ions()) + " ions");
    }
    for (auto [a, b] : pairs) {
        if (a >= num_qubits || b >= num_qubits || a == b) throw std::invalid_argument("bad interaction pair");
    }
    QubitMapping best = QubitMapping::identity(num_qubits);
    if (num_qubits == 0 || pairs.empty()) return best;
    MappingSearch search(pairs, num_qubits, table);
    double identity_cost = search.cost(best.ion);
    double best_cost = identity_cost;

    size_t m = table.num_ions();
    size_t starts = num_qubits * m <= 400 ? m : std::min<size_t>(m, 10);
    std::vector<uint32_t> found;
    for (size_t k = 0; k < starts; k++) {
        uint32_t start = static_cast<uint32_t>(k * m / starts);
        auto ion = search.greedy(start);
        search.descend(ion);
        double c = search.cost(ion);
        if (c < best_cost - 1e-12 * std::max(1.0, std::abs(identity_cost))) {
            best_cost = c;
            best.ion = ion;
        }
    }
    // Descent from the identity as well, so the result is never worse.
    auto ion = QubitMapping::identity(num_qubits).ion;
    search.descend(ion);
    if (search.cost(ion) < best_cost - 1e-12 * std::max(1.0, std::abs(identity_cost))) best.ion = ion;
    return best;
}

QubitMapping optimize_mapping(const Circuit& c, const PairErrorTable& table) {
    auto pairs = interactions(c);
    return optimize_mapping(pairs, c.num_qubits(), table);
}

PairTableFit synth_pair_table(uint64_t seed, const PairTableParams& params) {
    if (!(params.target_small > 0 && params.target_wide > 0)) throw std::invalid_argument("targets must be positive");
    if (params.target_small > params.target_wide) {
        throw std::invalid_argument("small-register target above the wide-register target is infeasible");
    }
    if (params.num_ions < std::max(params.small_width, params.wide_width) || params.num_ions < 2) {
        throw std::invalid_argument("chain shorter than the requested register");
    }
    size_t n = params.num_ions;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> eta(n);
    for (auto& e : eta) e = params.ion_sigma * normal(rng);
    std::vector<double> u(n * n, 0.0);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            double d = static_cast<double>(j - i) / static_cast<double>(n);
            u[i * n + j] = u[j * n + i] = eta[i] + eta[j] + params.pair_sigma * normal(rng) + params.distance_weight * d;
        }
    }

    auto build = [&](double spread, double level) {
        PairErrorTable t(n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) t.set(i, j, std::min(0.5, level * std::exp(spread * u[i * n + j])));
        }
        return t;
    };
    auto means = [&](const PairErrorTable& t) {
        auto ms = optimize_mapping(params.small_usage, params.small_width, t);
        auto mw = optimize_mapping(params.wide_usage, params.wide_width, t);
        return std::pair{usage_weighted_mean(params.small_usage, t, ms), usage_weighted_mean(params.wide_usage, t, mw)};
    };

    double target_ratio = params.target_small / params.target_wide;
    // Reference level keeps unnormalized rates far from the 0.5 clamp.
    const double ref = 1e-4;
    auto ratio = [&](double spread) {
        auto [s, w] = means(build(spread, ref));
        return s / w;
    };
    double lo = 0.0, hi = 0.5;
    while (ratio(hi) > target_ratio) {
        lo = hi;
        hi *= 2;
        if (hi > 16) throw std::invalid_argument("pair-table targets unreachable with this generator");
    }
    if (target_ratio >= 1.0) hi = 0.0;
    for (int it = 0; it < 30 && hi > 0; it++) {
        double mid = (lo + hi) / 2;
        if (ratio(mid) > target_ratio) lo = mid;
        else hi = mid;
    }
    double spread = hi;
    double s0 = means(build(spread, ref)).first;
    double level = ref * params.target_small / s0;
    PairTableFit fit;
    fit.table = build(spread, level);
    fit.spread = spread;
    auto [s1, w1] = means(fit.table);
    fit.small_mean = s1;
    fit.wide_mean = w1;
    return fit;
}

}  // namespace clinr
