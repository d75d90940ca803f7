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

#include "djsynth/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "djsynth/dj_runner.hpp"
#include "djsynth/oracle_compiler.hpp"
#include "djsynth/report.hpp"
#include "json.hpp"

namespace djsynth {

using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::string out_path;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;

    bool json() const { return format == "json"; }
};

class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> collect_truth_inputs(const std::string &truth, const std::string &truth_file) {
    std::vector<std::string> inputs;
    if (!truth.empty()) {
        inputs.push_back(truth);
    }
    if (!truth_file.empty()) {
        std::ifstream in(truth_file);
        if (!in) {
            throw InputError("cannot open truth file '" + truth_file + "'");
        }
        std::string line;
        while (std::getline(in, line)) {
            auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos) {
                continue;
            }
            auto end = line.find_last_not_of(" \t\r");
            inputs.push_back(line.substr(begin, end - begin + 1));
        }
    }
    if (inputs.empty()) {
        throw InputError("no truth table given; use --truth or --truth-file");
    }
    return inputs;
}

std::string basis_label(std::uint64_t index, int num_qubits) {
    std::string s;
    for (int q = 1; q <= num_qubits; q++) {
        s.push_back((index >> (num_qubits - q)) & 1 ? '1' : '0');
    }
    return s;
}

// Keeps the first nonzero code.
void merge_exit(int &code, int next) {
    if (code == kExitOk) {
        code = next;
    }
}

void emit_results(const GlobalOptions &g, const std::vector<json> &docs, const std::vector<std::string> &texts,
                  std::ostream &out) {
    if (g.json()) {
        if (docs.size() == 1) {
            out << docs.front().dump(2) << "\n";
        } else {
            out << json(docs).dump(2) << "\n";
        }
        return;
    }
    for (std::size_t i = 0; i < texts.size(); i++) {
        out << (i ? "\n" : "") << texts[i];
    }
}

int cmd_synth(const GlobalOptions &g, const std::vector<std::string> &inputs, std::ostream &out, std::ostream &err) {
    int code = kExitOk;
    std::vector<json> docs;
    std::vector<std::string> texts;
    for (const auto &text : inputs) {
        try {
            auto report = synthesize_report(TruthTable::parse(text));
            int sign = report.dropped_global_sign ? -1 : 1;
            json doc{{"truth_table", report.table.str()},
                     {"n", report.table.num_qubits()},
                     {"class", function_class_name(classify(report.table))},
                     {"anf", anf_to_json(report.anf)},
                     {"anf_text", report.anf.str()},
                     {"circuit", emit_text(report.circuit)},
                     {"gate_counts", gate_counts_to_json(report.counts)},
                     {"dropped_global_sign", report.dropped_global_sign},
                     {"global_sign", sign}};
            if (report.construction) {
                doc["type"] = static_cast<int>(*report.construction);
            }
            std::ostringstream t;
            t << "truth:       " << report.table.str() << "\n";
            t << "class:       " << function_class_name(classify(report.table)) << "\n";
            t << "anf:         " << report.anf.str() << "\n";
            if (report.construction) {
                t << "type:        Type" << static_cast<int>(*report.construction) << "\n";
            }
            t << "gates:       z=" << report.counts.phase_flip << " cz=" << report.counts.controlled_phase
              << " ccz=" << report.counts.multi_controlled_z << "\n";
            t << "global sign: " << (sign > 0 ? "+1" : "-1") << "\n";
            t << "circuit:\n" << emit_text(report.circuit);
            docs.push_back(std::move(doc));
            texts.push_back(t.str());
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            merge_exit(code, kExitInputError);
        }
    }
    emit_results(g, docs, texts, out);
    return code;
}

int cmd_run(const GlobalOptions &g, const std::vector<std::string> &inputs, const std::string &mode,
            std::uint64_t shots, std::ostream &out, std::ostream &err) {
    int code = kExitOk;
    std::vector<json> docs;
    std::vector<std::string> texts;
    for (const auto &text : inputs) {
        std::optional<TruthTable> table;
        try {
            table = TruthTable::parse(text);
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            merge_exit(code, kExitInputError);
            continue;
        }
        try {
            json doc{{"truth_table", table->str()}, {"mode", mode}};
            std::ostringstream t;
            t << "truth:   " << table->str() << "\n";
            t << "mode:    " << mode << "\n";
            if (mode == "classical") {
                auto c = classical_decide(*table);
                doc["verdict"] = verdict_name(c.verdict);
                doc["queries_used"] = c.queries_used;
                t << "verdict: " << verdict_name(c.verdict) << "\n";
                t << "queries: " << c.queries_used << "\n";
            } else {
                auto o = mode == "original" ? run_original(*table, g.tol) : run_refined(*table, g.tol);
                json probs = json::array();
                for (double p : o.final_probabilities) {
                    probs.push_back(tidy(p));
                }
                doc["verdict"] = verdict_name(o.verdict);
                doc["zero_amplitude"] = tidy(o.zero_amplitude);
                doc["queries_used"] = o.queries_used;
                doc["final_probabilities"] = probs;
                t << "verdict: " << verdict_name(o.verdict) << "\n";
                t << "a0:      " << tidy(o.zero_amplitude) << "\n";
                t << "queries: " << o.queries_used << "\n";
                if (o.working_qubit_purity) {
                    doc["working_qubit_purity"] = tidy(*o.working_qubit_purity);
                    t << "working-qubit purity after oracle: " << tidy(*o.working_qubit_purity) << "\n";
                }
                if (shots > 0) {
                    auto hist = sample_distribution(o.final_probabilities, shots, g.seed);
                    json h = json::object();
                    t << "samples (" << shots << " shots, seed " << g.seed << "):\n";
                    for (const auto &[index, count] : hist) {
                        auto label = basis_label(index, table->num_qubits());
                        h[label] = count;
                        t << "  |" << label << ">  " << count << "\n";
                    }
                    doc["shots"] = shots;
                    doc["seed"] = g.seed;
                    doc["histogram"] = h;
                }
            }
            docs.push_back(std::move(doc));
            texts.push_back(t.str());
        } catch (const PromiseViolation &e) {
            err << "error: " << e.what() << "\n";
            merge_exit(code, kExitPromiseViolation);
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
            merge_exit(code, kExitInputError);
        }
    }
    emit_results(g, docs, texts, out);
    return code;
}

int cmd_enumerate(const GlobalOptions &g, int n, std::ostream &out) {
    auto report = build_enumeration_report(n, g.tol);
    if (g.json()) {
        out << enumeration_to_json(report).dump(2) << "\n";
    } else {
        out << enumeration_to_table(report);
    }
    return kExitOk;
}

int cmd_entangle(const GlobalOptions &g, int n, std::ostream &out) {
    if (n != 3) {
        throw InputError("entangle supports n = 3 only, got n=" + std::to_string(n));
    }
    auto report = build_enumeration_report(n, g.tol);
    if (g.json()) {
        out << entanglement_survey_to_json(report).dump(2) << "\n";
    } else {
        out << entanglement_survey_to_table(report);
    }
    return kExitOk;
}

int cmd_verify_circuit(const GlobalOptions &g, const std::string &circuit_path, const std::string &truth,
                       std::ostream &out) {
    std::ifstream in(circuit_path);
    if (!in) {
        throw InputError("cannot open circuit file '" + circuit_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    Circuit circuit = parse_text(buffer.str());
    TruthTable table = TruthTable::parse(truth);
    auto m = equivalent_diagonal(circuit, table, g.tol);
    if (g.json()) {
        out << json{{"circuit", circuit_path}, {"truth_table", table.str()}, {"match", m.match},
                    {"global_sign", m.global_sign}}
                   .dump(2)
            << "\n";
    } else if (m.match) {
        out << "match: circuit implements " << table.str() << " up to global sign "
            << (m.global_sign > 0 ? "+1" : "-1") << "\n";
    } else {
        out << "mismatch: circuit does not implement the phase oracle of " << table.str() << "\n";
    }
    return m.match ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const GlobalOptions &g, int n, std::ostream &out) {
    VerifyOptions options;
    options.tol = g.tol;
    auto results = run_verification(n, options);
    if (g.json()) {
        out << verification_to_json(results).dump(2) << "\n";
    } else {
        out << verification_to_table(results);
    }
    return all_passed(results) ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Phase-oracle synthesis and simulation for the refined Deutsch-Jozsa algorithm", "djsynth"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"table", "text", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--tol", g.tol, "Numerical tolerance for verdicts and equivalence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for measurement sampling")->capture_default_str();

    std::string truth;
    std::string truth_file;
    auto add_truth_options = [&](CLI::App *sub) {
        sub->add_option("--truth", truth, "Truth table as a 0/1 string, index 0 first");
        sub->add_option("--truth-file", truth_file, "File with one truth table per line");
    };

    auto *synth = app.add_subcommand("synth", "Compile a truth table into a z/cz phase oracle");
    add_truth_options(synth);

    std::string mode = "refined";
    std::uint64_t shots = 0;
    auto *run = app.add_subcommand("run", "Run the Deutsch-Jozsa decision on a truth table");
    add_truth_options(run);
    run->add_option("--mode", mode, "refined | original | classical")
        ->check(CLI::IsMember({"refined", "original", "classical"}))
        ->capture_default_str();
    run->add_option("--shots", shots, "Sample the final state this many times");

    int n = 3;
    auto *enumerate = app.add_subcommand("enumerate", "Enumerate balanced functions and their oracles");
    enumerate->add_option("-n,--n", n, "Number of qubits (2-4)")->capture_default_str();

    auto *entangle = app.add_subcommand("entangle", "Entanglement survey of the post-oracle states");
    entangle->add_option("-n,--n", n, "Number of qubits (3 only)")->capture_default_str();

    bool verify_json = false;
    std::string circuit_path;
    auto *verify = app.add_subcommand("verify", "Run the end-to-end checks, or check one circuit file");
    verify->add_option("-n,--n", n, "Number of qubits (3 only)")->capture_default_str();
    verify->add_flag("--json", verify_json, "Same as --format json");
    verify->add_option("--circuit", circuit_path, "Circuit file to check against --truth");
    verify->add_option("--truth", truth, "Truth table for --circuit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    if (verify_json) {
        g.format = "json";
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!g.out_path.empty()) {
        file.open(g.out_path);
        if (!file) {
            err << "error: cannot open output file '" << g.out_path << "'\n";
            return kExitInputError;
        }
        sink = &file;
    }

    try {
        if (synth->parsed()) {
            return cmd_synth(g, collect_truth_inputs(truth, truth_file), *sink, err);
        }
        if (run->parsed()) {
            return cmd_run(g, collect_truth_inputs(truth, truth_file), mode, shots, *sink, err);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(g, n, *sink);
        }
        if (entangle->parsed()) {
            return cmd_entangle(g, n, *sink);
        }
        if (verify->parsed()) {
            if (!circuit_path.empty()) {
                if (truth.empty()) {
                    throw InputError("--circuit needs --truth");
                }
                return cmd_verify_circuit(g, circuit_path, truth, *sink);
            }
            return cmd_verify(g, n, *sink);
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace djsynth
