// Copyright 2026 The qmaze Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qmaze/algorithm.hpp"
#include "qmaze/circuit.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " '" + QMAZE_CLI_PATH + "' " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args) {
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, SolveExample) {
  const auto j = run_json("solve --n 3 --target 5");
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["result"]["path"], "101");
  EXPECT_EQ(j["result"]["endpoint"], 5);
  EXPECT_NEAR(j["result"]["amplitude_magnitude"].get<double>(), 0.353553, 1e-6);
  EXPECT_EQ(j["result"]["probability"].get<double>(), 0.125);
}

TEST(Cli, EnvelopeIsSharedAcrossCommands) {
  const auto maze = write_temp("cli_env_maze.txt", "QMAZE v1\nN 5\n");
  const auto circ = ::testing::TempDir() + "cli_env_circuit.txt";
  for (const std::string& args : std::vector<std::string>{
           "solve --n 2 --target 1", "sample --n 2 --shots 3 --seed 1",
           "emit --n 2 --mode oblivious --out " + circ, "bench --n-max 2",
        "validate --maze " + maze}) {
    const auto j = run_json(args);
    ASSERT_TRUE(j.is_object()) << args;
    EXPECT_TRUE(j.contains("command")) << args;
    EXPECT_TRUE(j.contains("params")) << args;
    EXPECT_TRUE(j.contains("result")) << args;
    EXPECT_EQ(j.size(), 3u) << args;
  }
}

TEST(Cli, SampleHistogramTotals) {
  const auto j = run_json("sample --n 1 --shots 4 --seed 7");
  std::uint64_t total = 0;
  for (const auto& bin : j["result"]["histogram"]) {
    total += bin["count"].get<std::uint64_t>();
  }
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(j["result"]["counter_mismatches"], 0);
}

TEST(Cli, SampleHitRateWithinThreeSigma) {
  const auto j = run_json("sample --n 3 --shots 80000 --seed 1 --target 5");
  const double rate = j["result"]["target"]["hit_rate"].get<double>();
  const double sigma = std::sqrt(0.125 * 0.875 / 80000);
  EXPECT_LT(std::abs(rate - 0.125), 3 * sigma);
  EXPECT_EQ(j["result"]["target"]["expected_rate"].get<double>(), 0.125);
}

TEST(Cli, EmitExamples) {
  const auto one = ::testing::TempDir() + "cli_emit1.txt";
  run_json("emit --n 1 --mode oblivious --out " + one);
  std::stringstream a;
  a << std::ifstream(one).rdbuf();
  EXPECT_EQ(a.str(), "QUBITS 2\nH 1\nX 0\n");

  const auto two = ::testing::TempDir() + "cli_emit2.txt";
  run_json("emit --n 2 --mode controlled --out " + two);
  std::stringstream b;
  b << std::ifstream(two).rdbuf();
  EXPECT_NE(b.str().find("\nMCH -0 : 1\n"), std::string::npos);
}

TEST(Cli, EmitReproducesRun) {
  for (const char* mode : {"oblivious", "controlled"}) {
    const auto path = ::testing::TempDir() + "cli_emit4.txt";
    run_json(std::string("emit --n 4 --mode ") + mode + " --out " + path);
    std::stringstream text;
    text << std::ifstream(path).rdbuf();
    const auto c = qmaze::parse_text(text.str());
    auto s = qmaze::init_zero_state(c.num_qubits());
    qmaze::apply_circuit(c, s);
    const auto r = qmaze::run(4, qmaze::parse_mode(mode));
    EXPECT_LT(qmaze::max_abs_diff(s, r.final_state), 1e-12);
  }
}

TEST(Cli, BenchRows) {
  const auto five = run_json("bench --n-max 5");
  const auto& rows = five["result"]["rows"];
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0]["measured"]["worst_edge_steps"], 3);
  EXPECT_EQ(rows[4]["n"], 5);
  EXPECT_EQ(rows[4]["quantum_steps"], 5);
  EXPECT_EQ(rows[4]["published_bound"], 57);
  EXPECT_EQ(rows[4]["measured"]["worst_edge_steps"], 119);
  EXPECT_EQ(rows[4]["quoted"]["worst_disagrees_with_both"], true);
  EXPECT_EQ(rows[4]["discrepancy"], true);

  const auto one = run_json("bench --n-max 1");
  EXPECT_EQ(one["result"]["rows"][0]["measured"]["worst_edge_steps"], 3);

  const auto fifty = run_json("bench --n-max 50 --ops-per-sec 1e9");
  const auto& r50 = fifty["result"]["rows"][49];
  EXPECT_EQ(r50["n"], 50);
  EXPECT_EQ(r50["extrapolated"], true);
  EXPECT_EQ(r50["source"], "extrapolated");
  EXPECT_TRUE(r50["measured"].is_null());
  EXPECT_EQ(fifty["result"]["rows"][19]["extrapolated"], false);
  for (std::size_t i = 1; i < 50; ++i) {
    EXPECT_LT(fifty["result"]["rows"][i - 1]["n"].get<int>(),
              fifty["result"]["rows"][i]["n"].get<int>());
  }
}

TEST(Cli, ValidateExamples) {
  const auto good = write_temp("cli_good.txt", "QMAZE v1\nN 5\n");
  EXPECT_EQ(run_cli("validate --maze " + good).code, 0);

  const auto zero = write_temp("cli_zero.txt", "QMAZE v1\nN 0\n");
  EXPECT_EQ(run_cli("validate --maze " + zero).code, 5);

  const auto headless = write_temp("cli_headless.txt", "N 5\n");
  const auto r = run_cli("validate --maze " + headless);
  EXPECT_EQ(r.code, 5);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["result"]["valid"], false);
  EXPECT_EQ(j["result"]["line"], 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("solve --n 5 --target 40").code, 2);
  EXPECT_EQ(run_cli("solve --n 5").code, 2);
  EXPECT_EQ(run_cli("sample --n 2 --shots 0 --seed 1").code, 2);
  EXPECT_EQ(run_cli("solve --n 3 --target 1 --mode sideways").code, 2);
  EXPECT_EQ(run_cli("solve --n 3 --target 1 --format xml").code, 2);
  EXPECT_EQ(run_cli("bench --n-max 0").code, 2);
  EXPECT_EQ(run_cli("bench --n-max 61").code, 2);
  EXPECT_EQ(run_cli("bench --n-max 5 --ops-per-sec -3").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("").code, 2);

  EXPECT_EQ(run_cli("solve --n 22 --target 0").code, 3);
  EXPECT_EQ(run_cli("sample --n 21 --shots 1 --seed 1").code, 3);

  EXPECT_EQ(run_cli("emit --n 2 --mode oblivious --out /nonexistent-dir/c.txt")
                .code,
            4);
  EXPECT_EQ(run_cli("validate --maze /nonexistent-dir/m.txt").code, 4);

  const auto bad = write_temp("cli_bad.txt", "QMAZE v1\nN 3\nCOLOR red\n");
  EXPECT_EQ(run_cli("validate --maze " + bad).code, 5);
}

TEST(Cli, QubitCapPrecedence) {
  EXPECT_EQ(run_cli("solve --n 5 --target 1", "QMAZE_MAX_QUBITS=6").code, 3);
  EXPECT_EQ(
      run_cli("solve --n 5 --target 1 --max-qubits 8", "QMAZE_MAX_QUBITS=6")
          .code,
      0);
  EXPECT_EQ(run_cli("solve --n 5 --target 1 --max-qubits 7").code, 3);
  EXPECT_EQ(run_cli("solve --n 5 --target 1", "QMAZE_MAX_QUBITS=abc").code, 2);
  EXPECT_EQ(run_cli("solve --n 5 --target 1 --max-qubits 0").code, 2);
}

TEST(Cli, ByteIdenticalOutput) {
  const auto maze = write_temp("cli_det_maze.txt", "QMAZE v1\nN 4\nTARGET 3\n");
  const auto circ = ::testing::TempDir() + "cli_det_circuit.txt";
  for (const std::string& args : std::vector<std::string>{
           "solve --n 6 --target 17 --mode controlled",
        "sample --n 4 --shots 500 --seed 99 --target 3",
        "emit --n 5 --mode controlled --out " + circ,
        "bench --n-max 22 --branch-order one-first", "validate --maze " + maze,
        "solve --n 4 --target 2 --format table"}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, SampleShotsArePrefixStable) {
  // A longer run extends a shorter one shot for shot, so counts never drop.
  const auto small = run_json("sample --n 3 --shots 50 --seed 4");
  const auto large = run_json("sample --n 3 --shots 100 --seed 4");
  for (const auto& bin : small["result"]["histogram"]) {
    bool found = false;
    for (const auto& big : large["result"]["histogram"]) {
      if (big["endpoint"] == bin["endpoint"]) {
        EXPECT_GE(big["count"].get<int>(), bin["count"].get<int>());
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

}  // namespace
