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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace djsynth;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "djsynth");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / ("djsynth_cli_test_" + name);
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli_synth, text_output) {
    auto r = run({"synth", "--truth", "01010110"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("qubits 3\nz 3\ncz 1 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("Type2"), std::string::npos);
    EXPECT_NE(r.out.find("x3 + x1x2"), std::string::npos);
}

TEST(cli_synth, constant_reports_global_sign) {
    auto r = run({"synth", "--truth", "00000000"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("global sign: +1"), std::string::npos);
    EXPECT_NE(r.out.find("circuit:\nqubits 3\n"), std::string::npos);
    auto one = run({"synth", "--truth", "11111111", "--format", "json"});
    EXPECT_EQ(json::parse(one.out)["global_sign"], -1);
}

TEST(cli_synth, json_and_type_guard) {
    auto r = run({"synth", "--truth", "01010110", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["type"], 2);
    EXPECT_EQ(j["circuit"], "qubits 3\nz 3\ncz 1 2\n");
    EXPECT_EQ(j["anf"], json::parse("[[3],[1,2]]"));

    auto two = run({"synth", "--truth", "0101", "--format", "json"});
    ASSERT_EQ(two.code, kExitOk);
    EXPECT_FALSE(json::parse(two.out).contains("type"));
    auto two_text = run({"synth", "--truth", "0101"});
    EXPECT_EQ(two_text.out.find("type:"), std::string::npos);
}

TEST(cli_synth, malformed_input) {
    auto r = run({"synth", "--truth", "0101011"});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("power of two"), std::string::npos);
    EXPECT_EQ(run({"synth"}).code, kExitInputError);
    EXPECT_EQ(run({"synth", "--truth", "0101", "--format", "xml"}).code, kExitInputError);
    EXPECT_EQ(run({"bogus"}).code, kExitInputError);
    EXPECT_EQ(run({}).code, kExitInputError);
}

TEST(cli_synth, truth_file) {
    auto path = temp_file("truths.txt", "00001111\n\n01010110\n  00010111  \n");
    auto r = run({"synth", "--truth-file", path.string(), "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["type"], 4);

    auto bad = temp_file("bad.txt", "00001111\n011\n");
    auto rb = run({"synth", "--truth-file", bad.string()});
    EXPECT_EQ(rb.code, kExitInputError);
    EXPECT_NE(rb.out.find("qubits 3\nz 1\n"), std::string::npos);
    EXPECT_EQ(run({"synth", "--truth-file", "/nonexistent/file"}).code, kExitInputError);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST(cli_run, refined_and_classical) {
    auto r = run({"run", "--truth", "00001111", "--mode", "refined", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "balanced");
    EXPECT_EQ(j["zero_amplitude"], 0.0);
    EXPECT_EQ(j["queries_used"], 1);

    auto c = run({"run", "--truth", "11111111", "--mode", "classical"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_NE(c.out.find("verdict: constant"), std::string::npos);
    EXPECT_NE(c.out.find("queries: 5"), std::string::npos);
}

TEST(cli_run, original_mode) {
    auto r = run({"run", "--truth", "01010110", "--mode", "original", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "balanced");
    EXPECT_EQ(j["working_qubit_purity"], 1.0);
}

TEST(cli_run, promise_violation) {
    auto r = run({"run", "--truth", "01000000"});
    EXPECT_EQ(r.code, kExitPromiseViolation);
    EXPECT_NE(r.err.find("promise"), std::string::npos);
    EXPECT_EQ(run({"run", "--truth", "01000000", "--mode", "classical"}).code, kExitPromiseViolation);
    EXPECT_EQ(run({"run", "--truth", "0100000"}).code, kExitInputError);
}

TEST(cli_run, sampling_is_seeded) {
    std::vector<std::string> args{"run", "--truth", "00001111", "--shots", "100", "--seed", "7", "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    auto j = json::parse(a.out);
    EXPECT_EQ(j["histogram"]["100"], 100);
}

TEST(cli_enumerate, three_qubits) {
    auto r = run({"enumerate", "--n", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["total_balanced"], 70);
    EXPECT_EQ(j["classes"], 35);
    EXPECT_EQ(j["type_counts"], json::parse(R"({"type1":7,"type2":12,"type3":12,"type4":4})"));
    EXPECT_EQ(j["rows"].size(), 35u);
    EXPECT_EQ(run({"enumerate", "--n", "3", "--format", "json"}).out, r.out);

    auto table = run({"enumerate", "-n", "3"});
    EXPECT_NE(table.out.find("type1=7 type2=12 type3=12 type4=4"), std::string::npos);
}

TEST(cli_enumerate, range_and_out_file) {
    auto two = run({"enumerate", "--n", "2", "--format", "json"});
    EXPECT_EQ(json::parse(two.out)["classes"], 3);
    EXPECT_EQ(run({"enumerate", "--n", "5"}).code, kExitInputError);

    auto path = std::filesystem::temp_directory_path() / "djsynth_cli_test_enum.json";
    auto r = run({"enumerate", "--n", "3", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["classes"], 35);
    std::filesystem::remove(path);
}

TEST(cli_entangle, survey) {
    auto r = run({"entangle", "--n", "3"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("summary: 7 product, 28 entangled"), std::string::npos);
    EXPECT_NE(r.out.find("00001111  1"), std::string::npos);
    auto j = json::parse(run({"entangle", "--format", "json"}).out);
    for (const auto &row : j["rows"]) {
        if (row["truth_table"] == "01010110") {
            EXPECT_EQ(row["fully_product"], false);
            EXPECT_EQ(row["type"], 2);
        }
    }
    EXPECT_EQ(run({"entangle", "--n", "4"}).code, kExitInputError);
}

TEST(cli_verify, suite) {
    auto r = run({"verify"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("4 suites passed"), std::string::npos);
    auto j = json::parse(run({"verify", "--json"}).out);
    EXPECT_EQ(j["passed"], true);
    for (const char *name : {"oracle-equivalence", "census", "refined-original-agreement", "formula-agreement"}) {
        EXPECT_EQ(j["checks"][name]["passed"], true) << name;
    }
    EXPECT_EQ(run({"verify", "--n", "4"}).code, kExitInputError);
}

TEST(cli_verify, circuit_file) {
    auto good = temp_file("good.circ", "qubits 3\n# x3 + x1x2\ncz 2 1\nz 3\n");
    auto r = run({"verify", "--circuit", good.string(), "--truth", "01010110"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("global sign +1"), std::string::npos);
    auto flipped = run({"verify", "--circuit", good.string(), "--truth", "10101001"});
    EXPECT_EQ(flipped.code, kExitOk);
    EXPECT_NE(flipped.out.find("global sign -1"), std::string::npos);
    EXPECT_EQ(run({"verify", "--circuit", good.string(), "--truth", "00001111"}).code, kExitVerificationFailed);

    auto broken = temp_file("broken.circ", "qubits 3\ncz 1 1\n");
    EXPECT_EQ(run({"verify", "--circuit", broken.string(), "--truth", "00001111"}).code, kExitInputError);
    EXPECT_EQ(run({"verify", "--circuit", good.string()}).code, kExitInputError);
    std::filesystem::remove(good);
    std::filesystem::remove(broken);
}

TEST(cli, global_flags_after_subcommand) {
    auto r = run({"run", "--truth", "00001111", "--tol", "1e-6", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(json::parse(r.out)["verdict"], "balanced");
    auto before = run({"--format", "json", "run", "--truth", "00001111"});
    EXPECT_EQ(before.out, r.out);
}
