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

#include "clinr/simulator.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "clinr/tableau.hpp"
#include "sampling.hpp"

namespace clinr {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

enum class FrameCode : uint8_t { H, S, CX, CZ, XErr, YErr, ZErr, Channel, Dep1, Dep2, Flip, Measure, Reset };

struct FrameOp {
    FrameCode code;
    uint32_t a = 0;
    uint32_t b = 0;
    int32_t record = -1;
    uint64_t threshold = 0;
    double p[3] = {0, 0, 0};
};

/// Flattens `c` into frame-propagation steps. Pauli gates drop out because
/// they commute with the frame up to phase.
std::vector<FrameOp> compile_frame(const Circuit& c) {
    std::vector<FrameOp> ops;
    for (const auto& g : c.ops()) {
        uint32_t a = g.targets[0], b = g.targets[1];
        FrameOp op{};
        op.a = a;
        op.b = b;
        op.record = g.record;
        op.threshold = detail::probability_threshold(g.probability());
        switch (g.kind) {
            case GateKind::MEASURE_Z: op.code = FrameCode::Measure; break;
            case GateKind::RESET: op.code = FrameCode::Reset; break;
            case GateKind::X_ERROR: op.code = FrameCode::XErr; break;
            case GateKind::Y_ERROR: op.code = FrameCode::YErr; break;
            case GateKind::Z_ERROR: op.code = FrameCode::ZErr; break;
            case GateKind::DEPOLARIZE1: op.code = FrameCode::Dep1; break;
            case GateKind::DEPOLARIZE2: op.code = FrameCode::Dep2; break;
            case GateKind::FLIP_RECORD: op.code = FrameCode::Flip; break;
            case GateKind::BARRIER: continue;
            case GateKind::PAULI_CHANNEL_1:
                op.code = FrameCode::Channel;
                op.p[0] = g.args[0];
                op.p[1] = g.args[0] + g.args[1];
                op.p[2] = g.args[0] + g.args[1] + g.args[2];
                break;
            default:
                for (const auto& p : clifford_decomposition(g)) {
                    FrameOp u{};
                    u.a = p.a;
                    u.b = p.b;
                    switch (p.kind) {
                        case Prim::H: u.code = FrameCode::H; break;
                        case Prim::S:
                        case Prim::S_DAG: u.code = FrameCode::S; break;
                        case Prim::CX: u.code = FrameCode::CX; break;
                        case Prim::CZ: u.code = FrameCode::CZ; break;
                        default: continue;
                    }
                    ops.push_back(u);
                }
                continue;
        }
        ops.push_back(op);
    }
    return ops;
}

class BitSource {
   public:
    explicit BitSource(std::mt19937_64& rng) : rng_(rng) {}
    uint8_t next() {
        if (left_ == 0) {
            word_ = rng_();
            left_ = 64;
        }
        uint8_t b = word_ & 1;
        word_ >>= 1;
        left_--;
        return b;
    }

   private:
    std::mt19937_64& rng_;
    uint64_t word_ = 0;
    int left_ = 0;
};

void frame_shot(const std::vector<FrameOp>& ops, const std::vector<uint8_t>& reference, size_t n,
                std::mt19937_64& rng, std::vector<uint8_t>& fx, std::vector<uint8_t>& fz, std::span<uint8_t> out) {
    using detail::fires;
    BitSource bits(rng);
    std::fill(fx.begin(), fx.end(), 0);
    // Z on |0> is a stabilizer, so a random initial Z frame is free. It
    // supplies the randomness of non-deterministic measurements.
    for (size_t q = 0; q < n; q++) fz[q] = bits.next();
    auto pauli = [&](uint32_t q, uint32_t k) {  // k: 1 = X, 2 = Y, 3 = Z
        fx[q] ^= (k == 1 || k == 2);
        fz[q] ^= (k == 2 || k == 3);
    };
    for (const auto& op : ops) {
        switch (op.code) {
            case FrameCode::H: std::swap(fx[op.a], fz[op.a]); break;
            case FrameCode::S: fz[op.a] ^= fx[op.a]; break;
            case FrameCode::CX:
                fx[op.b] ^= fx[op.a];
                fz[op.a] ^= fz[op.b];
                break;
            case FrameCode::CZ:
                fz[op.a] ^= fx[op.b];
                fz[op.b] ^= fx[op.a];
                break;
            case FrameCode::XErr:
                if (fires(rng, op.threshold)) fx[op.a] ^= 1;
                break;
            case FrameCode::YErr:
                if (fires(rng, op.threshold)) fx[op.a] ^= 1, fz[op.a] ^= 1;
                break;
            case FrameCode::ZErr:
                if (fires(rng, op.threshold)) fz[op.a] ^= 1;
                break;
            case FrameCode::Channel: {
                double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
                if (u < op.p[0]) pauli(op.a, 1);
                else if (u < op.p[1]) pauli(op.a, 2);
                else if (u < op.p[2]) pauli(op.a, 3);
                break;
            }
            case FrameCode::Dep1:
                if (fires(rng, op.threshold)) pauli(op.a, 1 + detail::pick(rng, 3));
                break;
            case FrameCode::Dep2:
                if (fires(rng, op.threshold)) {
                    uint32_t k = 1 + detail::pick(rng, 15);
                    pauli(op.a, k & 3);
                    pauli(op.b, k >> 2);
                }
                break;
            case FrameCode::Flip:
                if (fires(rng, op.threshold)) out[op.record] ^= 1;
                break;
            case FrameCode::Measure:
                out[op.record] = reference[op.record] ^ fx[op.a];
                fz[op.a] = bits.next();
                break;
            case FrameCode::Reset:
                fx[op.a] = 0;
                fz[op.a] = bits.next();
                break;
        }
    }
}

template <typename F>
void parallel_shots(size_t shots, size_t threads, F&& body) {
    threads = std::max<size_t>(1, std::min(threads, shots));
    if (threads == 1) {
        body(0, shots);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    size_t chunk = (shots + threads - 1) / threads;
    for (size_t t = 0; t < threads; t++) {
        size_t begin = t * chunk, end = std::min(shots, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, t, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::string bit_key(std::span<const uint8_t> bits) {
    std::string key(bits.size(), '0');
    for (size_t i = 0; i < bits.size(); i++) key[i] = bits[i] ? '1' : '0';
    return key;
}

}  // namespace

std::map<std::string, size_t> ShotBatch::counts() const {
    std::map<std::string, size_t> out;
    for (size_t s = 0; s < shots_; s++) out[bit_key(shot(s))]++;
    return out;
}

std::map<std::string, size_t> ShotBatch::counts(std::span<const uint32_t> records) const {
    std::map<std::string, size_t> out;
    std::string key(records.size(), '0');
    for (size_t s = 0; s < shots_; s++) {
        for (size_t i = 0; i < records.size(); i++) key[i] = get(s, records[i]) ? '1' : '0';
        out[key]++;
    }
    return out;
}

size_t default_thread_count() {
    if (const char* env = std::getenv("CLINR_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::mt19937_64 shot_rng(uint64_t seed, uint64_t shot) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ shot));
}

ShotBatch run_batch(const Circuit& c, size_t shots, uint64_t seed, const RunOptions& options) {
    ShotBatch batch(shots, c.num_records(), seed);
    size_t threads = options.threads ? options.threads : default_thread_count();
    size_t n = c.num_qubits();

    if (options.engine == Engine::Tableau) {
        parallel_shots(shots, threads, [&](size_t begin, size_t end) {
            for (size_t s = begin; s < end; s++) {
                auto rng = shot_rng(seed, s);
                auto rec = run_tableau_shot(c, rng);
                std::copy(rec.begin(), rec.end(), batch.shot(s).begin());
            }
        });
        return batch;
    }

    std::vector<uint8_t> reference;
    run_noiseless(c, &reference);
    auto ops = compile_frame(c);
    parallel_shots(shots, threads, [&](size_t begin, size_t end) {
        std::vector<uint8_t> fx(n), fz(n);
        for (size_t s = begin; s < end; s++) {
            auto rng = shot_rng(seed, s);
            frame_shot(ops, reference, n, rng, fx, fz, batch.shot(s));
        }
    });
    return batch;
}

}  // namespace clinr
