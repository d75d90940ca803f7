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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "djsynth/boolfn.hpp"
#include "djsynth/circuit.hpp"

namespace djsynth {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Dense pure state on n qubits. amps[i] is the amplitude of |b1 ... bn>
/// with b1 the most significant bit of i.
class StateVector {
   public:
    /// |index>. Throws std::out_of_range unless 1 <= n <= kMaxQubits and
    /// index < 2^n.
    static StateVector basis_state(int num_qubits, std::uint64_t index);

    /// Wraps explicit amplitudes. Size must be 2^n; normalization is not
    /// enforced here.
    static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amps);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }

    /// Throws std::out_of_range for index >= 2^n.
    Amplitude amplitude(std::uint64_t index) const;
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    double norm_squared() const;

    /// Multiplies every amplitude by `factor`.
    void scale(Amplitude factor);

   private:
    StateVector(int num_qubits, std::vector<Amplitude> amps) : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    int num_qubits_;
    std::vector<Amplitude> amps_;
};

// Gate application mutates the state in place.

/// Throws std::out_of_range if the gate touches a qubit beyond n.
void apply_gate(StateVector &state, const GateOp &gate);

/// Throws std::invalid_argument on a qubit-count mismatch.
void apply_circuit(StateVector &state, const Circuit &circuit);

void apply_hadamard_all(StateVector &state);

/// amps[i] *= (-1)^f(i), with no global phase dropped.
void apply_phase_oracle(StateVector &state, const TruthTable &table);

std::vector<double> probabilities(const StateVector &state);

/// Draws `shots` samples by inverse CDF over a std::mt19937_64 stream seeded with
/// `seed`. Keys are basis indices with a nonzero count. Throws
/// std::invalid_argument when shots == 0.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// Same draw as sample(), from an explicit distribution.
std::map<std::uint64_t, std::uint64_t> sample_distribution(std::span<const double> probs, std::uint64_t shots,
                                                           std::uint64_t seed);

struct EntanglementProfile {
    std::vector<double> purities;      // Tr(rho_q^2) per qubit, in [1/2, 1]
    std::vector<int> schmidt_ranks;    // qubit q vs the rest
    bool fully_product = false;
};

/// Single-qubit marginals of a pure state. Throws std::invalid_argument when
/// the norm deviates from 1 by more than 1e-6.
EntanglementProfile entanglement_diagnostics(const StateVector &state, double tol = kDefaultTolerance);

struct DiagonalMatch {
    bool match = false;
    int global_sign = 1;
};

/// Checks that `circuit` acts as s * (-1)^f(x) on every basis state |x> for a
/// single sign s. Requires n <= 12.
DiagonalMatch equivalent_diagonal(const Circuit &circuit, const TruthTable &table, double tol = kDefaultTolerance);

inline constexpr int kMaxEquivalenceQubits = 12;

}  // namespace djsynth
