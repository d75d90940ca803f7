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

#include "djsynth/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "djsynth/dj_runner.hpp"

namespace djsynth {

using nlohmann::json;

EnumerationReport build_enumeration_report(int num_qubits, double tol) {
    EnumerationReport report;
    report.num_qubits = num_qubits;
    report.total_balanced = enumerate_balanced(num_qubits).size();
    for (auto &table : enumerate_balanced_classes(num_qubits)) {
        auto synth = synthesize_report(table);
        auto outcome = run_refined(table, tol);
        ClassRecord row{std::move(synth.table),
                        std::move(synth.anf),
                        std::move(synth.circuit),
                        synth.construction,
                        synth.counts,
                        outcome.zero_amplitude,
                        entanglement_profile(table, tol)};
        if (num_qubits == 3 && row.construction) {
            int t = static_cast<int>(*row.construction);
            report.type_counts[t]++;
            report.phase_flips_by_type[t][row.counts.phase_flip]++;
        }
        report.rows.push_back(std::move(row));
    }
    report.classes = report.rows.size();
    return report;
}

double tidy(double value) {
    double r = std::round(value * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
}

json anf_to_json(const Anf &anf) {
    json out = json::array();
    for (const auto &m : anf.monomials()) {
        out.push_back(m.qubits);
    }
    return out;
}

json gate_counts_to_json(const GateCounts &counts) {
    return json{{"phase_flip", counts.phase_flip},
                {"controlled_phase", counts.controlled_phase},
                {"multi_controlled_z", counts.multi_controlled_z},
                {"hadamard", counts.hadamard}};
}

namespace {

std::string type_key(int t) {
    return "type" + std::to_string(t);
}

std::string inline_circuit(const Circuit &circuit) {
    if (circuit.empty()) {
        return "(identity)";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &g : circuit.gates()) {
        if (!first) {
            out << "; ";
        }
        first = false;
        out << gate_mnemonic(g.kind());
        for (int q : g.qubits()) {
            out << ' ' << q;
        }
    }
    return out.str();
}

std::string format_purities(const std::vector<double> &purities) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < purities.size(); i++) {
        out << (i ? " " : "") << purities[i];
    }
    return out.str();
}

}  // namespace

json enumeration_to_json(const EnumerationReport &report) {
    json type_counts = json::object();
    for (const auto &[t, count] : report.type_counts) {
        type_counts[type_key(t)] = count;
    }
    json phase_flips = json::object();
    for (const auto &[t, hist] : report.phase_flips_by_type) {
        json h = json::object();
        for (const auto &[z, count] : hist) {
            h[std::to_string(z)] = count;
        }
        phase_flips[type_key(t)] = h;
    }
    json rows = json::array();
    for (const auto &row : report.rows) {
        rows.push_back(json{
            {"truth_table", row.table.str()},
            {"anf", anf_to_json(row.anf)},
            {"circuit", emit_text(row.circuit)},
            {"type", row.construction ? json(static_cast<int>(*row.construction)) : json(nullptr)},
            {"gate_counts", gate_counts_to_json(row.counts)},
            {"zero_amplitude", tidy(row.zero_amplitude)},
            {"fully_product", row.entanglement.fully_product},
        });
    }
    return json{{"n", report.num_qubits},
                {"total_balanced", report.total_balanced},
                {"classes", report.classes},
                {"type_counts", type_counts},
                {"phase_flips_by_type", phase_flips},
                {"rows", rows}};
}

std::string enumeration_to_table(const EnumerationReport &report) {
    std::ostringstream out;
    out << "n = " << report.num_qubits << "\n";
    out << "balanced functions: " << report.total_balanced << "\n";
    out << "complement classes: " << report.classes << "\n";
    if (!report.type_counts.empty()) {
        out << "type counts:";
        for (const auto &[t, count] : report.type_counts) {
            out << " type" << t << "=" << count;
        }
        out << "\n";
        out << "z-gate counts per type:";
        for (const auto &[t, hist] : report.phase_flips_by_type) {
            out << " type" << t << "{";
            bool first = true;
            for (const auto &[z, count] : hist) {
                out << (first ? "" : ", ") << z << "z:" << count;
                first = false;
            }
            out << "}";
        }
        out << "\n";
    }
    out << "\n";
    std::size_t width = 5;
    std::size_t anf_width = 3;
    std::size_t circuit_width = 7;
    for (const auto &row : report.rows) {
        width = std::max(width, row.table.size());
        anf_width = std::max(anf_width, row.anf.str().size());
        circuit_width = std::max(circuit_width, inline_circuit(row.circuit).size());
    }
    auto col = [](std::size_t w) { return std::setw(static_cast<int>(w) + 2); };
    out << std::left << col(width) << "truth" << col(anf_width) << "anf" << col(4) << "type" << col(circuit_width)
        << "circuit" << col(6) << "a0"
        << "product\n";
    for (const auto &row : report.rows) {
        std::ostringstream a0;
        a0 << tidy(row.zero_amplitude);
        out << std::left << col(width) << row.table.str() << col(anf_width) << row.anf.str() << col(4)
            << (row.construction ? std::to_string(static_cast<int>(*row.construction)) : "-") << col(circuit_width)
            << inline_circuit(row.circuit) << col(6) << a0.str() << (row.entanglement.fully_product ? "yes" : "no")
            << "\n";
    }
    return out.str();
}

namespace {

void require_survey_size(const EnumerationReport &report) {
    if (report.num_qubits != 3) {
        throw std::invalid_argument("entanglement survey supports n = 3 only, got n=" +
                                    std::to_string(report.num_qubits));
    }
}

}  // namespace

json entanglement_survey_to_json(const EnumerationReport &report) {
    require_survey_size(report);
    std::size_t product = 0;
    json rows = json::array();
    for (const auto &row : report.rows) {
        json purities = json::array();
        for (double p : row.entanglement.purities) {
            purities.push_back(tidy(p));
        }
        rows.push_back(json{
            {"truth_table", row.table.str()},
            {"type", row.construction ? json(static_cast<int>(*row.construction)) : json(nullptr)},
            {"purities", purities},
            {"schmidt_ranks", row.entanglement.schmidt_ranks},
            {"fully_product", row.entanglement.fully_product},
        });
        product += row.entanglement.fully_product ? 1 : 0;
    }
    return json{{"n", report.num_qubits},
                {"classes", report.classes},
                {"product", product},
                {"entangled", report.classes - product},
                {"rows", rows}};
}

std::string entanglement_survey_to_table(const EnumerationReport &report) {
    require_survey_size(report);
    std::ostringstream out;
    out << std::left << std::setw(10) << "truth" << std::setw(6) << "type" << std::setw(30) << "purities"
        << std::setw(14) << "schmidt" << "state\n";
    std::size_t product = 0;
    for (const auto &row : report.rows) {
        std::ostringstream ranks;
        for (std::size_t i = 0; i < row.entanglement.schmidt_ranks.size(); i++) {
            ranks << (i ? " " : "") << row.entanglement.schmidt_ranks[i];
        }
        out << std::left << std::setw(10) << row.table.str() << std::setw(6)
            << (row.construction ? std::to_string(static_cast<int>(*row.construction)) : "-") << std::setw(30)
            << format_purities(row.entanglement.purities) << std::setw(14) << ranks.str()
            << (row.entanglement.fully_product ? "product" : "entangled") << "\n";
        product += row.entanglement.fully_product ? 1 : 0;
    }
    out << "\nsummary: " << product << " product, " << report.classes - product << " entangled\n";
    return out.str();
}

namespace {

CheckResult check_oracle_equivalence(int n, const VerifyOptions &options) {
    CheckResult result{"oracle-equivalence", true, ""};
    auto tables = enumerate_all(n);
    std::size_t matched = 0;
    for (const auto &t : tables) {
        Anf anf = moebius_transform(t);
        bool ok = false;
        try {
            auto m = equivalent_diagonal(options.synthesizer(anf), t, options.tol);
            ok = m.match && m.global_sign == (anf.has_constant_term() ? -1 : 1);
        } catch (const std::exception &) {
            ok = false;
        }
        if (ok) {
            matched++;
        } else if (result.passed) {
            result.passed = false;
            result.detail = "first mismatch at " + t.str() + "; ";
        }
    }
    result.detail += std::to_string(matched) + "/" + std::to_string(tables.size()) + " tables match";
    return result;
}

CheckResult check_census(int n, const VerifyOptions &options) {
    CheckResult result{"census", true, ""};
    auto balanced = enumerate_balanced(n);
    auto classes = enumerate_balanced_classes(n);
    std::map<int, std::size_t> types;
    std::size_t max_cz = 0;
    std::size_t ccz_oracles = 0;
    try {
        for (const auto &t : balanced) {
            auto counts = gate_counts(options.synthesizer(moebius_transform(t)));
            ccz_oracles += counts.multi_controlled_z ? 1 : 0;
        }
        for (const auto &t : classes) {
            Circuit c = options.synthesizer(moebius_transform(t));
            max_cz = std::max(max_cz, gate_counts(c).controlled_phase);
            types[static_cast<int>(classify_construction(c))]++;
        }
    } catch (const std::exception &e) {
        return CheckResult{"census", false, std::string("classification failed: ") + e.what()};
    }
    std::map<int, std::size_t> expected{{1, 7}, {2, 12}, {3, 12}, {4, 4}};
    result.passed = balanced.size() == 70 && classes.size() == 35 && types == expected && max_cz == 3 &&
                    ccz_oracles == 0;
    std::ostringstream detail;
    detail << balanced.size() << " balanced, " << classes.size() << " classes, types";
    for (int t = 1; t <= 4; t++) {
        detail << (t == 1 ? " " : "/") << types[t];
    }
    detail << ", max cz " << max_cz << ", ccz oracles " << ccz_oracles;
    result.detail = detail.str();
    return result;
}

std::vector<TruthTable> promise_tables(int n) {
    auto tables = enumerate_balanced(n);
    std::size_t len = std::size_t{1} << n;
    tables.emplace_back(n, std::vector<std::uint8_t>(len, 0));
    tables.emplace_back(n, std::vector<std::uint8_t>(len, 1));
    return tables;
}

CheckResult check_refined_original(int n, const VerifyOptions &options) {
    CheckResult result{"refined-original-agreement", true, ""};
    auto tables = promise_tables(n);
    std::size_t agreed = 0;
    for (const auto &t : tables) {
        bool ok = false;
        try {
            auto refined = run_refined(t, options.tol);
            auto original = run_original(t, options.tol);
            bool pure = original.working_qubit_purity && std::abs(*original.working_qubit_purity - 1.0) <= options.tol;
            auto cls = classify(t);
            Verdict expected = cls == FunctionClass::Balanced ? Verdict::Balanced : Verdict::Constant;
            ok = refined.verdict == original.verdict && refined.verdict == expected && pure;
        } catch (const std::exception &) {
            ok = false;
        }
        if (ok) {
            agreed++;
        } else if (result.passed) {
            result.passed = false;
            result.detail = "first disagreement at " + t.str() + "; ";
        }
    }
    result.detail += std::to_string(agreed) + "/" + std::to_string(tables.size()) + " promise tables agree";
    return result;
}

CheckResult check_formula(int n, const VerifyOptions &options) {
    CheckResult result{"formula-agreement", true, ""};
    auto tables = promise_tables(n);
    double worst = 0;
    for (const auto &t : tables) {
        double diff = 1.0;
        try {
            diff = std::abs(run_refined(t, options.tol).zero_amplitude - zero_amplitude_formula(t));
        } catch (const std::exception &) {
        }
        worst = std::max(worst, diff);
    }
    result.passed = worst <= options.tol;
    std::ostringstream detail;
    detail << "max |a0 - formula| = " << worst << " over " << tables.size() << " promise tables";
    result.detail = detail.str();
    return result;
}

}  // namespace

std::vector<CheckResult> run_verification(int num_qubits, const VerifyOptions &options) {
    if (num_qubits != 3) {
        throw std::invalid_argument("verification suite supports n = 3 only, got n=" + std::to_string(num_qubits));
    }
    return {check_oracle_equivalence(num_qubits, options), check_census(num_qubits, options),
            check_refined_original(num_qubits, options), check_formula(num_qubits, options)};
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

json verification_to_json(const std::vector<CheckResult> &results) {
    json checks = json::object();
    json first_failure = nullptr;
    for (const auto &r : results) {
        checks[r.name] = json{{"passed", r.passed}, {"detail", r.detail}};
        if (!r.passed && first_failure.is_null()) {
            first_failure = r.name;
        }
    }
    return json{{"passed", all_passed(results)}, {"checks", checks}, {"first_failure", first_failure}};
}

std::string verification_to_table(const std::vector<CheckResult> &results) {
    std::ostringstream out;
    for (const auto &r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    }
    auto failed = std::find_if(results.begin(), results.end(), [](const CheckResult &r) { return !r.passed; });
    if (failed == results.end()) {
        out << results.size() << " suites passed\n";
    } else {
        out << "verification failed: " << failed->name << "\n";
    }
    return out.str();
}

}  // namespace djsynth
