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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "djsynth/boolfn.hpp"
#include "djsynth/circuit.hpp"
#include "djsynth/oracle_compiler.hpp"
#include "djsynth/simulator.hpp"
#include "json.hpp"

namespace djsynth {

/// One complement class of balanced functions.
struct ClassRecord {
    TruthTable table;
    Anf anf;
    Circuit circuit;
    std::optional<ConstructionType> construction;
    GateCounts counts;
    double zero_amplitude = 0;
    EntanglementProfile entanglement;
};

struct EnumerationReport {
    int num_qubits = 0;
    std::size_t total_balanced = 0;
    std::size_t classes = 0;
    /// Keyed by construction type 1..4; empty unless n == 3.
    std::map<int, std::size_t> type_counts;
    /// type -> (number of z gates -> number of classes); empty unless n == 3.
    std::map<int, std::map<std::size_t, std::size_t>> phase_flips_by_type;
    std::vector<ClassRecord> rows;  // ascending canonical truth table
};

/// Throws std::invalid_argument outside 2 <= n <= 4.
EnumerationReport build_enumeration_report(int num_qubits, double tol = kDefaultTolerance);

/// Rounds to 12 decimals and clears negative zero, for display only.
double tidy(double value);

nlohmann::json anf_to_json(const Anf &anf);
nlohmann::json gate_counts_to_json(const GateCounts &counts);

nlohmann::json enumeration_to_json(const EnumerationReport &report);
std::string enumeration_to_table(const EnumerationReport &report);

/// Entanglement view of the same report. Only n = 3 is surveyed.
nlohmann::json entanglement_survey_to_json(const EnumerationReport &report);
std::string entanglement_survey_to_table(const EnumerationReport &report);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    double tol = kDefaultTolerance;
    /// Compiler under test; swapped out by mutation tests.
    std::function<Circuit(const Anf &)> synthesizer = [](const Anf &a) { return synthesize(a); };
};

/// The four end-to-end checks, in order: oracle-equivalence, census,
/// refined-original-agreement, formula-agreement. n must be 3.
std::vector<CheckResult> run_verification(int num_qubits, const VerifyOptions &options = {});

bool all_passed(const std::vector<CheckResult> &results);

nlohmann::json verification_to_json(const std::vector<CheckResult> &results);
std::string verification_to_table(const std::vector<CheckResult> &results);

}  // namespace djsynth
