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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "clinr/circuit.hpp"

namespace clinr {

namespace {

std::string format_double(double v) {
    // Shortest representation that round-trips.
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("cannot format number");
    return std::string(buf, end);
}

const char* prim_name(Prim p) {
    switch (p) {
        case Prim::H: return "H";
        case Prim::S: return "S";
        case Prim::S_DAG: return "S_DAG";
        case Prim::X: return "X";
        case Prim::Y: return "Y";
        case Prim::Z: return "Z";
        case Prim::CX: return "CX";
        case Prim::CZ: return "CZ";
    }
    return "?";
}

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct ParsedOp {
    GateKind kind;
    std::vector<uint32_t> targets;
    std::vector<double> args;
    bool flip = false;  // M(p)
};

}  // namespace

std::string export_stim(const Circuit& c) {
    std::ostringstream out;
    const auto& ops = c.ops();
    int32_t next_record = 0;
    for (size_t i = 0; i < ops.size(); i++) {
        const Gate& g = ops[i];
        const auto& t = traits(g.kind);
        auto targets = [&] {
            std::string s;
            for (auto q : g.qubits()) s += " " + std::to_string(q);
            return s;
        };
        switch (g.kind) {
            case GateKind::H:
            case GateKind::S:
            case GateKind::S_DAG:
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z:
            case GateKind::CZ:
                out << gate_name(g.kind) << targets() << "\n";
                break;
            case GateKind::CNOT:
                out << "CX" << targets() << "\n";
                break;
            case GateKind::RX:
            case GateKind::RZ:
            case GateKind::GPI:
            case GateKind::GPI2:
            case GateKind::GZ:
            case GateKind::ZZ:
                for (const auto& p : clifford_decomposition(g)) {
                    out << prim_name(p.kind) << " " << p.a;
                    if (p.kind == Prim::CX || p.kind == Prim::CZ) out << " " << p.b;
                    out << "\n";
                }
                break;
            case GateKind::MEASURE_Z:
                if (g.record != next_record) {
                    throw std::invalid_argument("export_stim: measurement records are not in program order");
                }
                next_record++;
                if (i + 1 < ops.size() && ops[i + 1].kind == GateKind::FLIP_RECORD && ops[i + 1].record == g.record) {
                    out << "M(" << format_double(ops[i + 1].probability()) << ")" << targets() << "\n";
                    i++;
                } else {
                    out << "M" << targets() << "\n";
                }
                break;
            case GateKind::RESET:
                out << "R" << targets() << "\n";
                break;
            case GateKind::PAULI_CHANNEL_1:
                out << "PAULI_CHANNEL_1(" << format_double(g.args[0]) << ", " << format_double(g.args[1]) << ", "
                    << format_double(g.args[2]) << ")" << targets() << "\n";
                break;
            case GateKind::BARRIER:
                out << "TICK\n";
                break;
            case GateKind::FLIP_RECORD:
                throw std::invalid_argument("export_stim: FLIP_RECORD must directly follow its measurement");
            default:
                if (!t.noise) throw std::invalid_argument("export_stim: unsupported instruction");
                out << gate_name(g.kind) << "(" << format_double(g.probability()) << ")" << targets() << "\n";
                break;
        }
    }
    return out.str();
}

Circuit parse_stim(std::string_view text) {
    std::vector<ParsedOp> parsed;
    uint32_t max_qubit = 0;
    bool any_qubit = false;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto fail = [&](const std::string& name, const std::string& why) -> std::invalid_argument {
            return std::invalid_argument("line " + std::to_string(line_no) + ": " + name + ": " + why);
        };

        size_t name_end = line.find_first_of(" \t(");
        std::string name(line.substr(0, name_end));
        std::string upper = name;
        std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
        std::string_view rest = name_end == std::string_view::npos ? std::string_view{} : line.substr(name_end);

        std::vector<double> args;
        rest = trim(rest);
        if (!rest.empty() && rest.front() == '(') {
            size_t close = rest.find(')');
            if (close == std::string_view::npos) throw fail(name, "unterminated argument list");
            std::string inner(rest.substr(1, close - 1));
            std::stringstream ss(inner);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::string_view tv = trim(item);
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(tv.data(), tv.data() + tv.size(), v);
                if (ec != std::errc() || ptr != tv.data() + tv.size()) throw fail(name, "bad argument '" + item + "'");
                args.push_back(v);
            }
            rest = trim(rest.substr(close + 1));
        }

        ParsedOp op{};
        size_t want_args = 0;
        size_t arity = 1;
        if (upper == "TICK") op.kind = GateKind::BARRIER, arity = 0;
        else if (upper == "H") op.kind = GateKind::H;
        else if (upper == "S") op.kind = GateKind::S;
        else if (upper == "S_DAG") op.kind = GateKind::S_DAG;
        else if (upper == "X") op.kind = GateKind::X;
        else if (upper == "Y") op.kind = GateKind::Y;
        else if (upper == "Z") op.kind = GateKind::Z;
        else if (upper == "CX" || upper == "CNOT" || upper == "ZCX") op.kind = GateKind::CNOT, arity = 2;
        else if (upper == "CZ" || upper == "ZCZ") op.kind = GateKind::CZ, arity = 2;
        else if (upper == "M" || upper == "MZ") op.kind = GateKind::MEASURE_Z, op.flip = !args.empty();
        else if (upper == "R" || upper == "RZ") op.kind = GateKind::RESET;
        else if (upper == "X_ERROR") op.kind = GateKind::X_ERROR, want_args = 1;
        else if (upper == "Y_ERROR") op.kind = GateKind::Y_ERROR, want_args = 1;
        else if (upper == "Z_ERROR") op.kind = GateKind::Z_ERROR, want_args = 1;
        else if (upper == "DEPOLARIZE1") op.kind = GateKind::DEPOLARIZE1, want_args = 1;
        else if (upper == "DEPOLARIZE2") op.kind = GateKind::DEPOLARIZE2, want_args = 1, arity = 2;
        else if (upper == "PAULI_CHANNEL_1") op.kind = GateKind::PAULI_CHANNEL_1, want_args = 3;
        else throw fail(name, "unsupported instruction");

        if (op.flip) want_args = 1;
        if (args.size() != want_args) {
            throw fail(name, "expected " + std::to_string(want_args) + " argument(s), got " + std::to_string(args.size()));
        }
        op.args = args;

        std::istringstream ts{std::string(rest)};
        std::string tok;
        while (ts >> tok) {
            uint32_t q = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), q);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) throw fail(name, "unsupported target '" + tok + "'");
            op.targets.push_back(q);
            max_qubit = std::max(max_qubit, q);
            any_qubit = true;
        }
        if (arity == 0) {
            if (!op.targets.empty()) throw fail(name, "takes no targets");
            parsed.push_back(std::move(op));
            continue;
        }
        if (op.targets.empty()) throw fail(name, "no targets");
        if (op.targets.size() % arity != 0) throw fail(name, "odd number of targets for a two-qubit instruction");
        for (size_t k = 0; k + 1 < op.targets.size() && arity == 2; k += 2) {
            if (op.targets[k] == op.targets[k + 1]) throw fail(name, "repeated target in a pair");
        }
        parsed.push_back(std::move(op));
    }

    Circuit c(any_qubit ? max_qubit + 1 : 0, true);
    for (const auto& op : parsed) {
        size_t arity = traits(op.kind).arity;
        if (arity == 0) {
            c.barrier();
            continue;
        }
        for (size_t k = 0; k < op.targets.size(); k += arity) {
            Gate g;
            g.kind = op.kind;
            g.targets = {op.targets[k], arity == 2 ? op.targets[k + 1] : 0};
            for (size_t a = 0; a < op.args.size() && !op.flip; a++) g.args[a] = op.args[a];
            if (op.kind == GateKind::MEASURE_Z) {
                uint32_t r = c.measure(op.targets[k]);
                if (op.flip) c.flip_record(r, op.args[0]);
                continue;
            }
            c.append(g);
        }
    }
    return c;
}

}  // namespace clinr
