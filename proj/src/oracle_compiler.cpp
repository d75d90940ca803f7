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

#include "djsynth/oracle_compiler.hpp"

#include <algorithm>
#include <stdexcept>

namespace djsynth {

Circuit synthesize(const Anf &anf) {
    std::vector<const Monomial *> linear;
    std::vector<const Monomial *> quadratic;
    std::vector<const Monomial *> higher;
    for (const auto &m : anf.monomials()) {
        switch (m.degree()) {
            case 0:
                break;
            case 1:
                linear.push_back(&m);
                break;
            case 2:
                quadratic.push_back(&m);
                break;
            default:
                higher.push_back(&m);
                break;
        }
    }
    auto lex = [](const Monomial *a, const Monomial *b) { return a->qubits < b->qubits; };
    std::sort(linear.begin(), linear.end(), lex);
    std::sort(quadratic.begin(), quadratic.end(), lex);
    std::sort(higher.begin(), higher.end(), lex);

    Circuit circuit(anf.num_qubits());
    for (const auto *m : linear) {
        circuit.append(GateOp::phase_flip(m->qubits[0]));
    }
    for (const auto *m : quadratic) {
        circuit.append(GateOp::controlled_phase(m->qubits[0], m->qubits[1]));
    }
    for (const auto *m : higher) {
        circuit.append(GateOp::multi_controlled_z(m->qubits));
    }
    return circuit;
}

ConstructionType classify_construction(const Circuit &circuit) {
    if (circuit.num_qubits() != 3) {
        throw std::invalid_argument("construction types are defined for 3-qubit oracles only, got n=" +
                                    std::to_string(circuit.num_qubits()));
    }
    auto counts = gate_counts(circuit);
    if (counts.multi_controlled_z != 0 || counts.hadamard != 0) {
        throw std::invalid_argument("construction types cover z/cz oracles only");
    }
    if (counts.controlled_phase > 3) {
        throw std::invalid_argument("oracle has " + std::to_string(counts.controlled_phase) +
                                    " cz gates; at most 3 are classifiable");
    }
    return static_cast<ConstructionType>(1 + counts.controlled_phase);
}

SynthesisReport synthesize_report(const TruthTable &table) {
    Anf anf = moebius_transform(table);
    Circuit circuit = synthesize(anf);
    std::optional<ConstructionType> construction;
    auto counts = gate_counts(circuit);
    if (circuit.num_qubits() == 3 && counts.multi_controlled_z == 0) {
        construction = classify_construction(circuit);
    }
    bool dropped = anf.has_constant_term();
    return SynthesisReport{table, std::move(anf), std::move(circuit), construction, counts, dropped};
}

}  // namespace djsynth
