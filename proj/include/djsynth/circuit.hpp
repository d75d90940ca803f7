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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace djsynth {

enum class GateKind {
    PhaseFlip,         // z q
    ControlledPhase,   // cz j k
    MultiControlledZ,  // ccz q1 q2 q3 ...
    Hadamard,          // h q
};

const char *gate_mnemonic(GateKind kind);

/// One gate application. Qubit indices are 1-based. The diagonal gates are
/// symmetric in their qubits, so their index lists are stored sorted.
class GateOp {
   public:
    static GateOp phase_flip(int qubit);
    static GateOp controlled_phase(int a, int b);
    static GateOp multi_controlled_z(std::vector<int> qubits);
    static GateOp hadamard(int qubit);

    GateKind kind() const { return kind_; }
    const std::vector<int> &qubits() const { return qubits_; }
    bool is_diagonal() const { return kind_ != GateKind::Hadamard; }

    bool operator==(const GateOp &) const = default;

   private:
    GateOp(GateKind kind, std::vector<int> qubits) : kind_(kind), qubits_(std::move(qubits)) {}

    GateKind kind_;
    std::vector<int> qubits_;
};

class Circuit {
   public:
    /// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
    explicit Circuit(int num_qubits);

    /// Throws std::invalid_argument if the gate touches a qubit beyond n.
    Circuit &append(GateOp gate);

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateOp> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }

    bool operator==(const Circuit &) const = default;

   private:
    int num_qubits_;
    std::vector<GateOp> gates_;
};

struct GateCounts {
    std::size_t phase_flip = 0;
    std::size_t controlled_phase = 0;
    std::size_t multi_controlled_z = 0;
    std::size_t hadamard = 0;

    std::size_t total() const { return phase_flip + controlled_phase + multi_controlled_z + hadamard; }
    bool operator==(const GateCounts &) const = default;
};

GateCounts gate_counts(const Circuit &circuit);

/// Raised by parse_text; `line()` is 1-based, 0 when not tied to a line.
class CircuitParseError : public std::invalid_argument {
   public:
    CircuitParseError(std::size_t line, const std::string &what);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Serializes to the line format:
///
///     qubits <n>
///     z <q>
///     cz <j> <k>
///     ccz <q1> <q2> <q3> ...
///     h <q>
///
/// Output is LF-terminated with single spaces; `cz` lists the smaller index
/// first.
std::string emit_text(const Circuit &circuit);

/// Inverse of emit_text. Accepts '#' comments, blank lines, and any run of
/// spaces or tabs between tokens.
Circuit parse_text(std::string_view text);

}  // namespace djsynth
