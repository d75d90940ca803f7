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
#include <optional>
#include <stdexcept>
#include <vector>

#include "djsynth/boolfn.hpp"
#include "djsynth/simulator.hpp"

namespace djsynth {

enum class Verdict { Constant, Balanced };
enum class DjMode { Refined, Original };

const char *verdict_name(Verdict v);
const char *mode_name(DjMode m);

/// The input is neither constant nor balanced.
class PromiseViolation : public std::invalid_argument {
   public:
    explicit PromiseViolation(const TruthTable &table);
};

struct DjOutcome {
    Verdict verdict = Verdict::Constant;
    /// Amplitude of |0...0> on the query register after the final Hadamards.
    double zero_amplitude = 0;
    /// Query-register distribution (working qubit marginalized in Original).
    std::vector<double> final_probabilities;
    std::size_t queries_used = 1;
    DjMode mode = DjMode::Refined;
    /// Original mode only: purity of the working qubit right after the
    /// f-controlled-NOT.
    std::optional<double> working_qubit_purity;
};

/// Maps a zero-state amplitude to a verdict: |a| >= 1 - tol is constant,
/// |a| <= tol is balanced. Anything in between cannot happen under the
/// promise and raises std::logic_error.
Verdict verdict_from_amplitude(double zero_amplitude, double tol = kDefaultTolerance);

/// |0..0> -> H^n -> synthesized phase oracle -> H^n on n qubits, no ancilla.
/// The sign dropped by synthesis is restored, so zero_amplitude is exactly
/// 2^-n * sum_x (-1)^f(x). Throws PromiseViolation.
DjOutcome run_refined(const TruthTable &table, double tol = kDefaultTolerance);

/// Textbook variant with a working qubit in |-> as qubit n+1 and the
/// f-controlled-NOT |x>|y> -> |x>|y xor f(x)>. Throws PromiseViolation, and
/// std::logic_error if the post-oracle state fails to factor as
/// (phase-kicked query state) (x) |->.
DjOutcome run_original(const TruthTable &table, double tol = kDefaultTolerance);

/// 2^-n * sum_x (-1)^f(x), straight from the table. Defined for any input.
double zero_amplitude_formula(const TruthTable &table);

struct ClassicalOutcome {
    Verdict verdict = Verdict::Constant;
    std::size_t queries_used = 0;
};

/// Deterministic decider: reads f at indices 0 .. 2^(n-1) and reports
/// constant iff all agree. Throws PromiseViolation.
ClassicalOutcome classical_decide(const TruthTable &table);

/// Diagnostics of 2^(-n/2) sum_x (-1)^f(x) |x>, the state right after the
/// oracle. Throws PromiseViolation.
EntanglementProfile entanglement_profile(const TruthTable &table, double tol = kDefaultTolerance);

}  // namespace djsynth
