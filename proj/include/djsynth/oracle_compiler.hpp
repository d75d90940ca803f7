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

#include <optional>

#include "djsynth/boolfn.hpp"
#include "djsynth/circuit.hpp"

namespace djsynth {

/// Compiles an ANF into the phase oracle |x> -> (-1)^(f(x) xor c) |x>, where
/// c is the constant term. The constant monomial is dropped (global sign);
/// {j} becomes z j, {j,k} becomes cz j k, and larger monomials become ccz.
/// Gates are emitted as all z sorted by qubit, then cz lexicographic, then
/// ccz lexicographic.
Circuit synthesize(const Anf &anf);

/// Three-qubit oracle families, indexed by the number of cz gates (0..3).
enum class ConstructionType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

/// Requires a 3-qubit circuit with only z and cz gates and at most three cz.
/// Throws std::invalid_argument otherwise.
ConstructionType classify_construction(const Circuit &circuit);

struct SynthesisReport {
    TruthTable table;
    Anf anf;
    Circuit circuit;
    std::optional<ConstructionType> construction;  // n == 3 and classifiable
    GateCounts counts;
    bool dropped_global_sign = false;  // ANF had the constant-1 monomial
};

/// Moebius transform, synthesis, and (for n = 3) classification in one step.
SynthesisReport synthesize_report(const TruthTable &table);

}  // namespace djsynth
