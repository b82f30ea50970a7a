// Copyright 2026 The qjaccard authors
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

#include "qjaccard/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qjaccard/jaccard.hpp"
#include "qjaccard/qasm.hpp"

using namespace qjaccard;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun invoke(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"qjaccard"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, JaccardTextOutput) {
    CliRun run = invoke({"jaccard", "--x", "1010", "--y", "1101"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out, "a=1 b=4 J=1/4\n");
    EXPECT_TRUE(run.err.empty());
}

TEST(Cli, JaccardUndefinedForAllZeros) {
    CliRun run = invoke({"jaccard", "--x", "0000", "--y", "0000"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out, "a=0 b=0 J=undefined (empty union)\n");
}

TEST(Cli, IntersectTextHistogram) {
    CliRun run = invoke({"intersect", "--x", "1010", "--y", "1101", "--shots", "1024"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out,
              "counter=001 value=1\n"
              "histogram (1024 shots):\n"
              "  001 1024\n");
}

TEST(Cli, UnionTextHistogram) {
    CliRun run = invoke({"union", "--x", "1010", "--y", "1101"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out,
              "counter=100 value=4\n"
              "histogram (1024 shots):\n"
              "  100 1024\n");
}

TEST(Cli, JsonSchemaKeysAreFixed) {
    for (const char* command : {"jaccard", "intersect", "union"}) {
        CliRun run = invoke({command, "--x", "1010", "--y", "1101", "--output", "json"});
        ASSERT_EQ(run.exit_code, 0) << command;
        json j = json::parse(run.out);
        ASSERT_TRUE(j.is_object());
        EXPECT_EQ(j.size(), 7u);
        for (const char* key : {"a", "b", "jaccard", "histogram", "backend", "shots", "seed"}) {
            EXPECT_TRUE(j.contains(key)) << command << " missing " << key;
        }
        EXPECT_EQ(j["a"], 1);
        EXPECT_EQ(j["b"], 4);
        EXPECT_EQ(j["jaccard"], "1/4");
        EXPECT_EQ(j["backend"], "dense");
        EXPECT_EQ(j["shots"], 1024);
        EXPECT_EQ(j["seed"], 0);
        EXPECT_TRUE(j["histogram"].is_object());
    }
}

TEST(Cli, JsonHistogramsPerCommand) {
    json intersect =
        json::parse(invoke({"intersect", "--x", "1010", "--y", "1101", "--output", "json"}).out);
    EXPECT_EQ(intersect["histogram"], json({{"001", 1024}}));

    json uni = json::parse(invoke({"union", "--x", "1010", "--y", "1101", "--output", "json"}).out);
    EXPECT_EQ(uni["histogram"], json({{"100", 1024}}));

    json jac = json::parse(invoke({"jaccard", "--x", "1010", "--y", "1101", "--output", "json"}).out);
    EXPECT_TRUE(jac["histogram"].empty());  // no sampling in the combined command
}

TEST(Cli, JsonNullJaccardWhenUndefined) {
    json j = json::parse(invoke({"jaccard", "--x", "00", "--y", "00", "--output", "json"}).out);
    EXPECT_TRUE(j["jaccard"].is_null());
    EXPECT_EQ(j["a"], 0);
    EXPECT_EQ(j["b"], 0);
}

TEST(Cli, AutoBackendSwitchesToBasisOnWideCircuits) {
    CliRun run = invoke({"jaccard", "--x", "100011011100", "--y", "110011100100"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out, "a=4 b=8 J=1/2\n");

    json j = json::parse(
        invoke({"jaccard", "--x", "100011011100", "--y", "110011100100", "--output", "json"}).out);
    EXPECT_EQ(j["backend"], "basis");
}

TEST(Cli, DenseBackendRefusesWideCircuit) {
    CliRun run = invoke(
        {"jaccard", "--x", "100011011100", "--y", "110011100100", "--backend", "dense"});
    EXPECT_EQ(run.exit_code, 2);
    EXPECT_NE(run.err.find("dense backend"), std::string::npos);
    EXPECT_TRUE(run.out.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({"jaccard", "--x", "10", "--y", "110"}).exit_code, 1);       // length
    EXPECT_EQ(invoke({"jaccard", "--x", "10a0", "--y", "1101"}).exit_code, 1);    // charset
    EXPECT_EQ(invoke({"jaccard", "--x", "1010"}).exit_code, 1);                   // missing --y
    EXPECT_EQ(invoke({"jaccard"}).exit_code, 1);                                  // missing both
    EXPECT_EQ(invoke({"intersect", "--x", "1", "--y", "1", "--shots", "0"}).exit_code, 1);
    EXPECT_EQ(invoke({"jaccard", "--x", "1", "--y", "1", "--backend", "nope"}).exit_code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).exit_code, 1);                               // no such command
    EXPECT_EQ(invoke({}).exit_code, 1);                                           // no subcommand
}

TEST(Cli, HelpExitsZero) {
    CliRun run = invoke({"--help"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_NE(run.out.find("jaccard"), std::string::npos);
}

TEST(Cli, ExportQasmToStdout) {
    CliRun run = invoke({"export-qasm", "--x", "1010", "--y", "1101", "--circuit", "intersect"});
    EXPECT_EQ(run.exit_code, 0);
    Circuit circuit =
        build_intersection_circuit(BitVector::parse("1010"), BitVector::parse("1101"));
    EXPECT_EQ(run.out, to_qasm(circuit));
}

TEST(Cli, ExportQasmToFile) {
    std::string path = ::testing::TempDir() + "qjaccard_union.qasm";
    CliRun run = invoke(
        {"export-qasm", "--x", "1010", "--y", "1101", "--circuit", "union", "--out", path.c_str()});
    EXPECT_EQ(run.exit_code, 0);
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    EXPECT_EQ(buffer.str(), to_qasm(build_union_circuit(BitVector::parse("1010"),
                                                        BitVector::parse("1101"))));
    std::remove(path.c_str());
}

TEST(Cli, ExportQasmRequiresCircuitChoice) {
    EXPECT_EQ(invoke({"export-qasm", "--x", "1010", "--y", "1101"}).exit_code, 1);
}

TEST(Cli, ExportQasmRejectsWideGates) {
    CliRun run = invoke(
        {"export-qasm", "--x", "11111111", "--y", "11111111", "--circuit", "intersect"});
    EXPECT_EQ(run.exit_code, 2);
    EXPECT_NE(run.err.find("c4x"), std::string::npos);
}

TEST(Cli, StatsTextBothCircuitsByDefault) {
    CliRun run = invoke({"stats", "--x", "1010", "--y", "1101"});
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_NE(run.out.find("intersect:"), std::string::npos);
    EXPECT_NE(run.out.find("union:"), std::string::npos);
    EXPECT_NE(run.out.find("width: 11"), std::string::npos);

    CliRun only = invoke({"stats", "--x", "1010", "--y", "1101", "--circuit", "intersect"});
    EXPECT_NE(only.out.find("intersect:"), std::string::npos);
    EXPECT_EQ(only.out.find("union:"), std::string::npos);
}

TEST(Cli, StatsJson) {
    json j = json::parse(invoke({"stats", "--x", "1010", "--y", "1101", "--output", "json"}).out);
    EXPECT_EQ(j["intersect"]["width"], 11);
    EXPECT_EQ(j["intersect"]["x"], 5);
    EXPECT_EQ(j["intersect"]["total"], 17);
    EXPECT_EQ(j["union"]["cx"], 8);
    EXPECT_EQ(j["union"]["mcx"]["4"], 4);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
    const std::initializer_list<const char*> args = {
        "union", "--x", "101101", "--y", "011011", "--shots", "500",
        "--seed", "99", "--output", "json"};
    CliRun first = invoke(args);
    CliRun second = invoke(args);
    EXPECT_EQ(first.exit_code, 0);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.err, second.err);
}
