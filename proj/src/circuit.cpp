// Copyright 2026 The djsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djsynth/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "djsynth/boolfn.hpp"

namespace djsynth {

const char *gate_mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::PhaseFlip:
            return "z";
        case GateKind::ControlledPhase:
            return "cz";
        case GateKind::MultiControlledZ:
            return "ccz";
        case GateKind::Hadamard:
            return "h";
    }
    return "?";
}

namespace {

void check_positive(int q) {
    if (q < 1) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " must be >= 1");
    }
}

void check_distinct(const std::vector<int> &sorted) {
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw std::invalid_argument("gate uses qubit " + std::to_string(*dup) + " more than once");
    }
}

}  // namespace

GateOp GateOp::phase_flip(int qubit) {
    check_positive(qubit);
    return GateOp(GateKind::PhaseFlip, {qubit});
}

GateOp GateOp::controlled_phase(int a, int b) {
    check_positive(a);
    check_positive(b);
    std::vector<int> qs{std::min(a, b), std::max(a, b)};
    check_distinct(qs);
    return GateOp(GateKind::ControlledPhase, std::move(qs));
}

GateOp GateOp::multi_controlled_z(std::vector<int> qubits) {
    if (qubits.size() < 3) {
        throw std::invalid_argument("ccz needs at least 3 qubits, got " + std::to_string(qubits.size()));
    }
    for (int q : qubits) {
        check_positive(q);
    }
    std::sort(qubits.begin(), qubits.end());
    check_distinct(qubits);
    return GateOp(GateKind::MultiControlledZ, std::move(qubits));
}

GateOp GateOp::hadamard(int qubit) {
    check_positive(qubit);
    return GateOp(GateKind::Hadamard, {qubit});
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count " + std::to_string(num_qubits) + " outside 1.." +
                                    std::to_string(kMaxQubits));
    }
}

Circuit &Circuit::append(GateOp gate) {
    for (int q : gate.qubits()) {
        if (q > num_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range for " +
                                        std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

GateCounts gate_counts(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &g : circuit.gates()) {
        switch (g.kind()) {
            case GateKind::PhaseFlip:
                counts.phase_flip++;
                break;
            case GateKind::ControlledPhase:
                counts.controlled_phase++;
                break;
            case GateKind::MultiControlledZ:
                counts.multi_controlled_z++;
                break;
            case GateKind::Hadamard:
                counts.hadamard++;
                break;
        }
    }
    return counts;
}

CircuitParseError::CircuitParseError(std::size_t line, const std::string &what)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string emit_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    for (const auto &g : circuit.gates()) {
        out << gate_mnemonic(g.kind());
        for (int q : g.qubits()) {
            out << ' ' << q;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw CircuitParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Circuit parse_text(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    while (!text.empty()) {
        line_no++;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }

        if (!circuit) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                throw CircuitParseError(line_no, "missing 'qubits <n>' header");
            }
            int n = parse_int(tokens[1], line_no);
            try {
                circuit.emplace(n);
            } catch (const std::invalid_argument &e) {
                throw CircuitParseError(line_no, e.what());
            }
            continue;
        }

        std::string_view mnemonic = tokens[0];
        std::vector<int> qubits;
        for (std::size_t i = 1; i < tokens.size(); i++) {
            qubits.push_back(parse_int(tokens[i], line_no));
        }
        auto expect_arity = [&](std::size_t arity) {
            if (qubits.size() != arity) {
                throw CircuitParseError(line_no, "'" + std::string(mnemonic) + "' takes " + std::to_string(arity) +
                                                     " qubit(s), got " + std::to_string(qubits.size()));
            }
        };
        try {
            if (mnemonic == "z") {
                expect_arity(1);
                circuit->append(GateOp::phase_flip(qubits[0]));
            } else if (mnemonic == "cz") {
                expect_arity(2);
                circuit->append(GateOp::controlled_phase(qubits[0], qubits[1]));
            } else if (mnemonic == "ccz") {
                circuit->append(GateOp::multi_controlled_z(qubits));
            } else if (mnemonic == "h") {
                expect_arity(1);
                circuit->append(GateOp::hadamard(qubits[0]));
            } else if (mnemonic == "qubits") {
                throw CircuitParseError(line_no, "duplicate 'qubits' header");
            } else {
                throw CircuitParseError(line_no, "unknown gate '" + std::string(mnemonic) + "'");
            }
        } catch (const CircuitParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw CircuitParseError(line_no, e.what());
        }
    }
    if (!circuit) {
        throw CircuitParseError(0, "missing 'qubits <n>' header");
    }
    return *std::move(circuit);
}

}  // namespace djsynth
