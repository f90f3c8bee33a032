// Copyright 2026 The ShiftCons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the tool with the given arguments, capturing stdout and stderr.
CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string(SHIFTCONS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  CommandResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp_config(const std::string& name,
                              const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream out(path);
  out << body;
  return path;
}

TEST(CliDiscernTest, ReportsNegativeVerdictsWithExitZero) {
  const CommandResult result =
      run_cli("discern --width 2 --n 3 --kind logical");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("NOT 3-discerning"), std::string::npos);
  EXPECT_NE(result.output.find("nodes=12288"), std::string::npos);
}

TEST(CliDiscernTest, PrintsTheFirstWitnessAsAConfig) {
  const CommandResult result =
      run_cli("discern --width 3 --n 3 --kind logical");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("3-discerning"), std::string::npos);
  EXPECT_NE(result.output.find("q0=001"), std::string::npos);
  EXPECT_NE(result.output.find("op 1 = l^2"), std::string::npos);
}

TEST(CliDiscernTest, JsonAndTextAgree) {
  const CommandResult json_result =
      run_cli("discern --width 3 --n 3 --kind logical --json");
  EXPECT_EQ(json_result.exit_code, 0);
  const auto j = nlohmann::json::parse(json_result.output);
  EXPECT_TRUE(j["discerning"].get<bool>());
  EXPECT_EQ(j["witness"]["q0"], "001");
  EXPECT_EQ(j["nodes"], 16706);
}

TEST(CliDiscernTest, BudgetExhaustionUsesItsOwnExitCode) {
  const CommandResult result =
      run_cli("discern --width 3 --n 4 --kind logical --budget 1000");
  EXPECT_EQ(result.exit_code, 3);
  EXPECT_NE(result.output.find("budget"), std::string::npos);
}

TEST(CliDiscernTest, FlagErrorsExitTwo) {
  EXPECT_EQ(run_cli("discern --width 2 --n 3 --kind barrel").exit_code, 2);
  EXPECT_EQ(run_cli("discern --width 2").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(CliWitnessTest, EmitsTheKnownConstruction) {
  const CommandResult result =
      run_cli("witness --width 3 --n 3 --kind logical");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("q0=100"), std::string::npos);
  EXPECT_NE(result.output.find("team A = 1 2"), std::string::npos);

  const CommandResult json_result =
      run_cli("witness --width 2 --n 2 --kind logical --json");
  const auto j = nlohmann::json::parse(json_result.output);
  EXPECT_EQ(j["config"]["q0"], "10");
  EXPECT_EQ(j["view_sets"]["r_b"]["1"], nlohmann::json::array({"00"}));
}

TEST(CliWitnessTest, OutOfRangeShapesExitTwo) {
  const CommandResult result =
      run_cli("witness --width 2 --n 3 --kind logical");
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.output.find("error:"), std::string::npos);
}

TEST(CliLemmaTest, ProducesTheDocumentedCollision) {
  const std::string path = write_temp_config(
      "rllr.cfg",
      "width=3\nalphabet=2\nkind=logical\nq0=111\n"
      "team A = 1 2\nteam B = 3 4\n"
      "op 1 = l^1\nop 2 = l^1\nop 3 = r^1\nop 4 = r^1\n");
  const CommandResult result =
      run_cli("lemma --lemma rllr --config " + path);
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("exec A = 1 3 4 2 -> 010"), std::string::npos);
  EXPECT_NE(result.output.find("exec B = 4 2 1 3 -> 010"), std::string::npos);
}

TEST(CliLemmaTest, InapplicableLemmaExitsFour) {
  const std::string path = write_temp_config(
      "shifts.cfg",
      "width=2\nalphabet=2\nkind=logical\nq0=10\n"
      "team A = 1\nteam B = 2\nop 1 = r^1\nop 2 = l^1\n");
  const CommandResult result =
      run_cli("lemma --lemma no-writes --config " + path);
  EXPECT_EQ(result.exit_code, 4);
  EXPECT_NE(result.output.find("not applicable"), std::string::npos);
}

TEST(CliLemmaTest, UnreadableOrBrokenConfigsExitTwo) {
  EXPECT_EQ(run_cli("lemma --lemma rllr --config /no/such/file").exit_code, 2);
  const std::string path = write_temp_config("broken.cfg", "width=2\n");
  EXPECT_EQ(run_cli("lemma --lemma rllr --config " + path).exit_code, 2);
}

TEST(CliConsensusTest, VerifiedInstanceExitsZero) {
  const CommandResult result = run_cli(
      "consensus --n 2 --width 2 --kind logical --inputs 5,7");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("agreement=true validity=true schedules=924"),
            std::string::npos);
}

TEST(CliConsensusTest, TextAndJsonVerdictsMatch) {
  const CommandResult json_result = run_cli(
      "consensus --n 2 --width 2 --kind logical --inputs 5,7 --json");
  EXPECT_EQ(json_result.exit_code, 0);
  const auto j = nlohmann::json::parse(json_result.output);
  EXPECT_TRUE(j["agreement"].get<bool>());
  EXPECT_TRUE(j["validity"].get<bool>());
  EXPECT_EQ(j["schedules"], 924);
  EXPECT_EQ(j["mode"], "exhaustive");
}

TEST(CliConsensusTest, InjectedFaultFailsWithExitOne) {
  const CommandResult result = run_cli(
      "consensus --n 2 --width 2 --kind logical --inputs 5,7 "
      "--invert-classify 2");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.output.find("agreement=false"), std::string::npos);
  EXPECT_NE(result.output.find("counterexample:"), std::string::npos);
}

TEST(CliConsensusTest, RandomModeEchoesItsSeed) {
  const CommandResult result = run_cli(
      "consensus --n 6 --width 2 --kind arithmetic --mode random "
      "--seed 7 --samples 500");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("mode=random seed=7 samples=500"),
            std::string::npos);
  EXPECT_NE(result.output.find("agreement=true"), std::string::npos);
}

TEST(CliConsensusTest, InputCountMustMatchProcessCount) {
  EXPECT_EQ(
      run_cli("consensus --n 3 --width 3 --kind logical --inputs 5,7")
          .exit_code,
      2);
}

TEST(CliTableTest, CsvColumnsAndConsensusNumbers) {
  const CommandResult result =
      run_cli("table --min-width 1 --max-width 2 --kind logical");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find(
                "width,kind,max_discerning_n,first_non_discerning_n,"
                "nodes_searched,seconds"),
            std::string::npos);
  EXPECT_NE(result.output.find("1,logical,1,2,"), std::string::npos);
  EXPECT_NE(result.output.find("2,logical,2,3,"), std::string::npos);
}

TEST(CliTableTest, CappedArithmeticProbeShowsTheBound) {
  const CommandResult result =
      run_cli("table --min-width 2 --max-width 2 --kind arithmetic "
              "--max-n 4");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("2,arithmetic,>=4,-,"), std::string::npos);
}

TEST(CliTraceReplayTest, PrintsTheFrozenTraceFormat) {
  const CommandResult result = run_cli(
      "trace-replay --n 2 --width 2 --kind logical --inputs 5,7 "
      "--schedule 1,1,1,1,1,1,2,2,2,2,2,2");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(
      result.output.find("step=1 pid=1 act=write-reg obj=0 state=- val=5"),
      std::string::npos);
  EXPECT_NE(
      result.output.find("step=12 pid=2 act=decide obj=- state=- val=5"),
      std::string::npos);
}

TEST(CliTraceReplayTest, MalformedSchedulesExitTwo) {
  EXPECT_EQ(run_cli("trace-replay --n 2 --width 2 --kind logical "
                    "--schedule 1,9")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("trace-replay --n 2 --width 2 --kind logical "
                    "--schedule 1,x")
                .exit_code,
            2);
}

}  // namespace
