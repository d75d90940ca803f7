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

#include "djsynth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace djsynth {

namespace {

std::uint64_t qubit_mask(int num_qubits, int qubit) {
    return std::uint64_t{1} << (num_qubits - qubit);
}

void check_gate_range(const StateVector &state, const GateOp &gate) {
    for (int q : gate.qubits()) {
        if (q < 1 || q > state.num_qubits()) {
            throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(state.num_qubits()) + "-qubit state");
        }
    }
}

// Negates every amplitude whose index has all bits of `mask` set.
void negate_where_all_set(std::span<Amplitude> amps, std::uint64_t mask) {
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void hadamard_on(std::span<Amplitude> amps, std::uint64_t mask) {
    constexpr double r = std::numbers::sqrt2 / 2;
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if (i & mask) {
            continue;
        }
        Amplitude a0 = amps[i];
        Amplitude a1 = amps[i | mask];
        amps[i] = r * (a0 + a1);
        amps[i | mask] = r * (a0 - a1);
    }
}

}  // namespace

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::out_of_range("state qubit count " + std::to_string(num_qubits) + " outside 1.." +
                                std::to_string(kMaxQubits));
    }
    std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Amplitude> amps) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::out_of_range("state qubit count " + std::to_string(num_qubits) + " outside 1.." +
                                std::to_string(kMaxQubits));
    }
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
                                    std::to_string(amps.size()));
    }
    return StateVector(num_qubits, std::move(amps));
}

Amplitude StateVector::amplitude(std::uint64_t index) const {
    if (index >= amps_.size()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    return amps_[index];
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::scale(Amplitude factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

void apply_gate(StateVector &state, const GateOp &gate) {
    check_gate_range(state, gate);
    int n = state.num_qubits();
    std::uint64_t mask = 0;
    for (int q : gate.qubits()) {
        mask |= qubit_mask(n, q);
    }
    if (gate.kind() == GateKind::Hadamard) {
        hadamard_on(state.amplitudes(), mask);
    } else {
        negate_where_all_set(state.amplitudes(), mask);
    }
}

void apply_circuit(StateVector &state, const Circuit &circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) + " qubits but state has " +
                                    std::to_string(state.num_qubits()));
    }
    for (const auto &g : circuit.gates()) {
        apply_gate(state, g);
    }
}

void apply_hadamard_all(StateVector &state) {
    for (int q = 1; q <= state.num_qubits(); q++) {
        hadamard_on(state.amplitudes(), qubit_mask(state.num_qubits(), q));
    }
}

void apply_phase_oracle(StateVector &state, const TruthTable &table) {
    if (table.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("truth table has " + std::to_string(table.num_qubits()) +
                                    " inputs but state has " + std::to_string(state.num_qubits()) + " qubits");
    }
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if (table[i]) {
            amps[i] = -amps[i];
        }
    }
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> out;
    out.reserve(state.size());
    for (const auto &a : state.amplitudes()) {
        out.push_back(std::norm(a));
    }
    return out;
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    auto probs = probabilities(state);
    return sample_distribution(probs, shots, seed);
}

std::map<std::uint64_t, std::uint64_t> sample_distribution(std::span<const double> probs, std::uint64_t shots,
                                                           std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (probs.empty()) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    double total = cdf.back();
    // Last index carrying probability; draws landing past the CDF's rounded
    // end go here.
    std::uint64_t last = 0;
    for (std::uint64_t i = 0; i < probs.size(); i++) {
        if (probs[i] > 0) {
            last = i;
        }
    }

    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (std::uint64_t s = 0; s < shots; s++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t index = it == cdf.end() ? last : static_cast<std::uint64_t>(it - cdf.begin());
        histogram[index]++;
    }
    return histogram;
}

EntanglementProfile entanglement_diagnostics(const StateVector &state, double tol) {
    double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw std::invalid_argument("entanglement diagnostics need a normalized state, norm^2 = " +
                                    std::to_string(norm));
    }
    int n = state.num_qubits();
    auto amps = state.amplitudes();
    EntanglementProfile profile;
    profile.fully_product = true;
    for (int q = 1; q <= n; q++) {
        std::uint64_t mask = qubit_mask(n, q);
        // Rows of the 2 x 2^(n-1) matrix: qubit q = 0 and qubit q = 1.
        double n0 = 0;
        double n1 = 0;
        for (std::uint64_t i = 0; i < amps.size(); i++) {
            if (!(i & mask)) {
                n0 += std::norm(amps[i]);
                n1 += std::norm(amps[i | mask]);
            }
        }
        // sigma_1 * sigma_2 = |u| * |v - proj_u v| for the heavier row u. The
        // residual is summed termwise, so product states give ~0 exactly
        // instead of a cancellation of two O(1) terms.
        std::uint64_t u_bit = n0 >= n1 ? 0 : mask;
        std::uint64_t v_bit = u_bit ^ mask;
        double u_norm = std::max(n0, n1);
        Amplitude overlap = 0;
        for (std::uint64_t i = 0; i < amps.size(); i++) {
            if (!(i & mask)) {
                overlap += std::conj(amps[i | u_bit]) * amps[i | v_bit];
            }
        }
        Amplitude coeff = overlap / u_norm;
        double residual = 0;
        for (std::uint64_t i = 0; i < amps.size(); i++) {
            if (!(i & mask)) {
                residual += std::norm(amps[i | v_bit] - coeff * amps[i | u_bit]);
            }
        }
        double trace = n0 + n1;
        double sv_product = std::sqrt(u_norm * residual);
        double purity = 1.0 - 2.0 * sv_product * sv_product / (trace * trace);
        double sv_max = std::sqrt((trace + std::sqrt(std::max(0.0, trace * trace - 4 * sv_product * sv_product))) / 2);
        double sv_min = sv_product / sv_max;

        profile.purities.push_back(purity);
        profile.schmidt_ranks.push_back(sv_min > tol ? 2 : 1);
        if (purity < 1.0 - tol) {
            profile.fully_product = false;
        }
    }
    return profile;
}

DiagonalMatch equivalent_diagonal(const Circuit &circuit, const TruthTable &table, double tol) {
    if (circuit.num_qubits() != table.num_qubits()) {
        throw std::invalid_argument("circuit and truth table disagree on qubit count");
    }
    if (circuit.num_qubits() > kMaxEquivalenceQubits) {
        throw std::invalid_argument("equivalence check supports at most " + std::to_string(kMaxEquivalenceQubits) +
                                    " qubits");
    }
    DiagonalMatch result;
    std::optional<int> sign;
    for (std::uint64_t x = 0; x < table.size(); x++) {
        auto state = StateVector::basis_state(circuit.num_qubits(), x);
        apply_circuit(state, circuit);
        auto amps = state.amplitudes();
        double f_sign = table[x] ? -1.0 : 1.0;
        Amplitude diag = amps[x] * f_sign;
        int s;
        if (std::abs(diag - 1.0) <= tol) {
            s = 1;
        } else if (std::abs(diag + 1.0) <= tol) {
            s = -1;
        } else {
            return result;
        }
        if (sign && *sign != s) {
            return result;
        }
        sign = s;
        for (std::uint64_t y = 0; y < amps.size(); y++) {
            if (y != x && std::abs(amps[y]) > tol) {
                return result;
            }
        }
    }
    result.match = true;
    result.global_sign = *sign;
    return result;
}

}  // namespace djsynth
