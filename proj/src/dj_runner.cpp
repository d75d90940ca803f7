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

#include "djsynth/dj_runner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "djsynth/oracle_compiler.hpp"

namespace djsynth {

const char *verdict_name(Verdict v) {
    return v == Verdict::Constant ? "constant" : "balanced";
}

const char *mode_name(DjMode m) {
    return m == DjMode::Refined ? "refined" : "original";
}

PromiseViolation::PromiseViolation(const TruthTable &table)
    : std::invalid_argument("promise violated: " + table.str() + " has weight " + std::to_string(table.weight()) +
                            " of " + std::to_string(table.size()) + ", neither constant nor balanced") {}

namespace {

void require_promise(const TruthTable &table) {
    if (!satisfies_promise(table)) {
        throw PromiseViolation(table);
    }
}

}  // namespace

Verdict verdict_from_amplitude(double zero_amplitude, double tol) {
    double mag = std::abs(zero_amplitude);
    if (mag >= 1.0 - tol) {
        return Verdict::Constant;
    }
    if (mag <= tol) {
        return Verdict::Balanced;
    }
    std::ostringstream msg;
    msg << "zero-state amplitude " << zero_amplitude << " is neither 0 nor +-1";
    throw std::logic_error(msg.str());
}

DjOutcome run_refined(const TruthTable &table, double tol) {
    require_promise(table);
    int n = table.num_qubits();
    auto report = synthesize_report(table);

    auto state = StateVector::basis_state(n, 0);
    apply_hadamard_all(state);
    apply_circuit(state, report.circuit);
    if (report.dropped_global_sign) {
        state.scale(-1.0);
    }
    apply_hadamard_all(state);

    DjOutcome out;
    out.mode = DjMode::Refined;
    out.zero_amplitude = state.amplitude(0).real();
    out.verdict = verdict_from_amplitude(out.zero_amplitude, tol);
    out.final_probabilities = probabilities(state);
    out.queries_used = 1;
    return out;
}

DjOutcome run_original(const TruthTable &table, double tol) {
    require_promise(table);
    int n = table.num_qubits();
    if (n + 1 > kMaxQubits) {
        throw std::invalid_argument("original algorithm needs n + 1 <= " + std::to_string(kMaxQubits) + " qubits");
    }
    constexpr double r = std::numbers::sqrt2 / 2;

    // Working qubit is the least significant bit, so index = (x << 1) | y.
    std::vector<Amplitude> init(std::size_t{1} << (n + 1));
    init[0] = r;
    init[1] = -r;
    auto state = StateVector::from_amplitudes(n + 1, std::move(init));
    for (int q = 1; q <= n; q++) {
        apply_gate(state, GateOp::hadamard(q));
    }

    // f-controlled-NOT: swap the y = 0 and y = 1 amplitudes wherever f(x) = 1.
    auto amps = state.amplitudes();
    for (std::uint64_t x = 0; x < table.size(); x++) {
        if (table[x]) {
            std::swap(amps[x << 1], amps[(x << 1) | 1]);
        }
    }

    // Phase kickback: the state must equal 2^(-n/2) (-1)^f(x) |x> (x) |->.
    double query_amp = std::pow(2.0, -n / 2.0);
    for (std::uint64_t x = 0; x < table.size(); x++) {
        double expect = (table[x] ? -1.0 : 1.0) * query_amp * r;
        if (std::abs(amps[x << 1] - expect) > tol || std::abs(amps[(x << 1) | 1] + expect) > tol) {
            throw std::logic_error("state after the f-controlled-NOT does not factor as (query) (x) |->");
        }
    }
    auto profile = entanglement_diagnostics(state, tol);

    for (int q = 1; q <= n; q++) {
        apply_gate(state, GateOp::hadamard(q));
    }

    DjOutcome out;
    out.mode = DjMode::Original;
    out.working_qubit_purity = profile.purities.back();
    // Project the working qubit onto |-> to read the query register's
    // amplitude; the register is in a product with it.
    out.zero_amplitude = ((amps[0] - amps[1]) * r).real();
    out.verdict = verdict_from_amplitude(out.zero_amplitude, tol);
    out.final_probabilities.assign(table.size(), 0.0);
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        out.final_probabilities[i >> 1] += std::norm(amps[i]);
    }
    out.queries_used = 1;
    return out;
}

double zero_amplitude_formula(const TruthTable &table) {
    long long sum = 0;
    for (std::size_t x = 0; x < table.size(); x++) {
        sum += table[x] ? -1 : 1;
    }
    return static_cast<double>(sum) / static_cast<double>(table.size());
}

ClassicalOutcome classical_decide(const TruthTable &table) {
    require_promise(table);
    std::size_t queries = table.size() / 2 + 1;
    ClassicalOutcome out;
    out.verdict = Verdict::Constant;
    for (std::size_t x = 1; x < queries; x++) {
        if (table[x] != table[0]) {
            out.verdict = Verdict::Balanced;
        }
    }
    out.queries_used = queries;
    return out;
}

EntanglementProfile entanglement_profile(const TruthTable &table, double tol) {
    require_promise(table);
    auto state = StateVector::basis_state(table.num_qubits(), 0);
    apply_hadamard_all(state);
    apply_phase_oracle(state, table);
    return entanglement_diagnostics(state, tol);
}

}  // namespace djsynth
