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

// End-to-end acceptance checks. Prints one line per criterion and exits
// nonzero if any fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "djsynth/dj_runner.hpp"
#include "djsynth/oracle_compiler.hpp"
#include "djsynth/report.hpp"
#include "djsynth/simulator.hpp"
#include "test_oracles.hpp"

using namespace djsynth;

namespace {

constexpr double kAmpTol = 1e-9;
constexpr double kNormTol = 1e-12;
constexpr double kEntangledPurity = 0.999;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why) {
        if (passed) {
            detail = why;
        }
        passed = false;
    }
};

std::vector<TruthTable> promise_tables() {
    auto tables = enumerate_balanced(3);
    tables.emplace_back(3, std::vector<std::uint8_t>(8, 0));
    tables.emplace_back(3, std::vector<std::uint8_t>(8, 1));
    return tables;
}

Outcome balanced_census() {
    Outcome o;
    auto all = enumerate_balanced(3);
    auto classes = enumerate_balanced_classes(3);
    // Independent count straight from popcounts.
    std::size_t brute = 0;
    for (unsigned w = 0; w < 256; w++) {
        brute += __builtin_popcount(w) == 4;
    }
    if (all.size() != 70 || brute != 70) {
        o.fail("balanced count " + std::to_string(all.size()));
    }
    if (classes.size() != 35) {
        o.fail("class count " + std::to_string(classes.size()));
    }
    o.detail = o.passed ? "70 balanced, 35 classes" : o.detail;
    return o;
}

Outcome type_census() {
    Outcome o;
    std::map<int, int> counts;
    for (const auto &t : enumerate_balanced_classes(3)) {
        counts[static_cast<int>(classify_construction(synthesize(moebius_transform(t))))]++;
    }
    std::ostringstream s;
    s << "types " << counts[1] << "/" << counts[2] << "/" << counts[3] << "/" << counts[4];
    if (counts != std::map<int, int>{{1, 7}, {2, 12}, {3, 12}, {4, 4}}) {
        o.fail(s.str());
    }
    o.detail = s.str();
    return o;
}

Outcome synthesis_soundness() {
    Outcome o;
    for (const auto &t : enumerate_all(3)) {
        // The expected ANF comes from an exhaustive subset search, not the butterfly.
        auto monos = oracles::brute_force_anf(t.str(), 3);
        bool constant_term = false;
        for (const auto &m : monos) {
            constant_term |= m.empty();
        }
        auto anf = moebius_transform(t);
        auto match = equivalent_diagonal(synthesize(anf), t, kAmpTol);
        if (!match.match || match.global_sign != (constant_term ? -1 : 1)) {
            o.fail("mismatch on " + t.str());
        }
    }
    if (o.passed) {
        o.detail = "256 tables";
    }
    return o;
}

Outcome cp_only_ceiling() {
    Outcome o;
    for (const auto &t : enumerate_balanced(3)) {
        if (gate_counts(synthesize(moebius_transform(t))).multi_controlled_z != 0) {
            o.fail("ccz in " + t.str());
        }
    }
    std::size_t max_cz = 0;
    for (const auto &t : enumerate_balanced_classes(3)) {
        max_cz = std::max(max_cz, gate_counts(synthesize(moebius_transform(t))).controlled_phase);
    }
    if (max_cz != 3) {
        o.fail("max cz " + std::to_string(max_cz));
    }
    if (o.passed) {
        o.detail = "max cz 3";
    }
    return o;
}

Outcome decision_soundness() {
    Outcome o;
    for (const auto &t : promise_tables()) {
        auto r = run_refined(t);
        auto cls = classify(t);
        Verdict want = cls == FunctionClass::Balanced ? Verdict::Balanced : Verdict::Constant;
        if (r.verdict != want) {
            o.fail("verdict on " + t.str());
        }
        double a = r.zero_amplitude;
        bool ok = cls == FunctionClass::Constant0   ? std::abs(a - 1.0) <= kAmpTol
                  : cls == FunctionClass::Constant1 ? std::abs(a + 1.0) <= kAmpTol
                                                    : std::abs(a) <= kAmpTol;
        if (!ok) {
            o.fail("amplitude on " + t.str());
        }
    }
    if (o.passed) {
        o.detail = "72 tables";
    }
    return o;
}

Outcome formula_agreement() {
    Outcome o;
    for (const auto &t : promise_tables()) {
        // Direct sum, independent of the library formula.
        double direct = 0;
        for (std::size_t x = 0; x < t.size(); x++) {
            direct += t[x] ? -1.0 : 1.0;
        }
        direct /= static_cast<double>(t.size());
        double a = run_refined(t).zero_amplitude;
        if (std::abs(a - zero_amplitude_formula(t)) > kAmpTol || std::abs(a - direct) > kAmpTol) {
            o.fail("formula on " + t.str());
        }
    }
    if (o.passed) {
        o.detail = "72 tables";
    }
    return o;
}

Outcome original_agreement() {
    Outcome o;
    for (const auto &t : promise_tables()) {
        auto r = run_refined(t);
        auto g = run_original(t);
        if (r.verdict != g.verdict) {
            o.fail("verdict on " + t.str());
        }
        if (!g.working_qubit_purity || std::abs(*g.working_qubit_purity - 1.0) > kAmpTol) {
            o.fail("working qubit entangled on " + t.str());
        }
    }
    if (o.passed) {
        o.detail = "72 tables, working qubit pure";
    }
    return o;
}

Outcome classical_bound() {
    Outcome o;
    for (const auto &t : promise_tables()) {
        auto c = classical_decide(t);
        Verdict want = classify(t) == FunctionClass::Balanced ? Verdict::Balanced : Verdict::Constant;
        if (c.queries_used != 5 || c.verdict != want) {
            o.fail("classical on " + t.str());
        }
    }
    if (o.passed) {
        o.detail = "5 queries";
    }
    return o;
}

Outcome entanglement_survey() {
    Outcome o;
    int product = 0;
    for (const auto &t : enumerate_balanced_classes(3)) {
        auto type = classify_construction(synthesize(moebius_transform(t)));
        std::vector<oracles::Cx> psi(8);
        for (std::size_t x = 0; x < 8; x++) {
            psi[x] = (t[x] ? -1.0 : 1.0) / std::sqrt(8.0);
        }
        double min_purity = 1.0;
        for (int q = 1; q <= 3; q++) {
            min_purity = std::min(min_purity, oracles::brute_force_purity(psi, 3, q));
        }
        bool brute_product = min_purity >= 1.0 - kAmpTol;
        bool lib_product = entanglement_profile(t).fully_product;
        if (brute_product != lib_product) {
            o.fail("diagnostics disagree on " + t.str());
        }
        if (brute_product != (type == ConstructionType::Type1)) {
            o.fail("product set differs from Type1 at " + t.str());
        }
        if (!brute_product && min_purity > kEntangledPurity) {
            o.fail("weakly entangled " + t.str());
        }
        product += brute_product;
    }
    if (product != 7) {
        o.fail(std::to_string(product) + " product classes");
    }
    if (o.passed) {
        o.detail = "7 product, 28 entangled";
    }
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(20260101);

    for (int n = 1; n <= 3; n++) {
        for (const auto &t : enumerate_all(n)) {
            if (anf_to_truth_table(moebius_transform(t)) != t) {
                o.fail("moebius involution " + t.str());
            }
        }
    }
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 500; trial++) {
        std::vector<std::uint8_t> v(16);
        for (auto &b : v) {
            b = static_cast<std::uint8_t>(bit(rng));
        }
        TruthTable t(4, v);
        if (anf_to_truth_table(moebius_transform(t)) != t) {
            o.fail("moebius involution " + t.str());
        }
    }

    std::vector<GateOp> gates{GateOp::phase_flip(2), GateOp::controlled_phase(1, 3),
                              GateOp::multi_controlled_z({1, 2, 3}), GateOp::hadamard(1), GateOp::hadamard(3)};
    for (int trial = 0; trial < 50; trial++) {
        auto s = StateVector::from_amplitudes(3, oracles::random_state(3, rng));
        for (const auto &g : gates) {
            apply_gate(s, g);
            if (std::abs(s.norm_squared() - 1.0) > kNormTol) {
                o.fail("norm drift after " + std::string(gate_mnemonic(g.kind())));
            }
        }
        auto before = s;
        apply_hadamard_all(s);
        apply_hadamard_all(s);
        for (std::size_t i = 0; i < s.size(); i++) {
            if (std::abs(s.amplitude(i) - before.amplitude(i)) > kNormTol) {
                o.fail("hadamard involution");
            }
        }
        auto a = before;
        auto b = before;
        apply_gate(a, gates[1]);
        apply_gate(a, gates[2]);
        apply_gate(b, gates[2]);
        apply_gate(b, gates[1]);
        for (std::size_t i = 0; i < a.size(); i++) {
            if (a.amplitude(i) != b.amplitude(i)) {
                o.fail("diagonal gates do not commute");
            }
        }
    }

    for (int n = 2; n <= 4; n++) {
        for (const auto &t : enumerate_balanced(n)) {
            auto c = synthesize(moebius_transform(t));
            if (!(parse_text(emit_text(c)) == c)) {
                o.fail("text round trip " + t.str());
            }
        }
    }

    if (enumeration_to_json(build_enumeration_report(3)).dump() !=
        enumeration_to_json(build_enumeration_report(3)).dump()) {
        o.fail("json not deterministic");
    }

    auto uniform = StateVector::basis_state(3, 0);
    apply_hadamard_all(uniform);
    if (sample(uniform, 1000, 42) != sample(uniform, 1000, 42)) {
        o.fail("sampling not deterministic under seed");
    }
    if (o.passed) {
        o.detail = "involutions, norm, commutation, round trip, determinism";
    }
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"balanced-census", balanced_census},
        {"type-census", type_census},
        {"synthesis-soundness", synthesis_soundness},
        {"cp-only-gate-ceiling", cp_only_ceiling},
        {"dj-decision-soundness", decision_soundness},
        {"formula-agreement", formula_agreement},
        {"original-agreement", original_agreement},
        {"classical-bound", classical_bound},
        {"entanglement-survey", entanglement_survey},
        {"property-suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.passed;
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
