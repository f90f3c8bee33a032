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

#include "shiftcons/json_out.hpp"

namespace shiftcons {
namespace {

TEST(JsonTest, ConfigSerializesAllFields) {
  const DiscernConfig config =
      canonical_witness(2, 2, RegisterKind::kLogical);
  const nlohmann::json j = config_json(config);
  EXPECT_EQ(j["width"], 2);
  EXPECT_EQ(j["alphabet"], 2);
  EXPECT_EQ(j["kind"], "logical");
  EXPECT_EQ(j["q0"], "10");
  EXPECT_EQ(j["team_a"], nlohmann::json::array({1}));
  EXPECT_EQ(j["team_b"], nlohmann::json::array({2}));
  EXPECT_EQ(j["ops"], nlohmann::json({{"1", "r^1"}, {"2", "l^1"}}));
}

TEST(JsonTest, ViewSetsKeyStatesByProcess) {
  const ViewSets views =
      view_sets(canonical_witness(2, 2, RegisterKind::kLogical));
  const nlohmann::json j = view_sets_json(views);
  EXPECT_EQ(j["r_a"]["1"], nlohmann::json::array({"01", "10"}));
  EXPECT_EQ(j["r_a"]["2"], nlohmann::json::array({"10"}));
  EXPECT_EQ(j["r_b"]["1"], nlohmann::json::array({"00"}));
  EXPECT_EQ(j["r_b"]["2"], nlohmann::json::array({"00"}));
}

TEST(JsonTest, CounterexampleCarriesBothExecutions) {
  const Counterexample ce{{1, 2}, {2, 1}, Word::parse("00", Alphabet{2}), 1};
  const nlohmann::json j = counterexample_json(ce);
  EXPECT_EQ(j["exec_a"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(j["exec_b"], nlohmann::json::array({2, 1}));
  EXPECT_EQ(j["final_state"], "00");
  EXPECT_EQ(j["overlap_process"], 1);
}

TEST(JsonTest, VerdictUsesNumbersWhileTheyFit) {
  Verdict verdict;
  verdict.schedules = 924;
  verdict.max_steps = 12;
  const nlohmann::json j = verdict_json(verdict, {5, 7});
  EXPECT_TRUE(j["agreement"].get<bool>());
  EXPECT_TRUE(j["validity"].get<bool>());
  EXPECT_EQ(j["schedules"], 924);
  EXPECT_EQ(j["max_steps"], 12);
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(JsonTest, VerdictFallsBackToDecimalStrings) {
  Verdict verdict;
  verdict.schedules = 0;
  for (char c : std::string("48347883406291370016875760")) {
    verdict.schedules = verdict.schedules * 10 + (c - '0');
  }
  const nlohmann::json j = verdict_json(verdict, {});
  ASSERT_TRUE(j["schedules"].is_string());
  EXPECT_EQ(j["schedules"], "48347883406291370016875760");
}

TEST(JsonTest, VerdictEmbedsTraceLines) {
  const Protocol mutant = build_consensus(2, RegisterKind::kLogical, 2)
                              .with_inverted_classify(2);
  const ExploreResult result = explore_all_schedules(mutant, {5, 7});
  const nlohmann::json j = verdict_json(result.verdict, {5, 7});
  EXPECT_FALSE(j["agreement"].get<bool>());
  ASSERT_TRUE(j["counterexample"].is_array());
  EXPECT_EQ(j["counterexample"].size(), 12u);
  EXPECT_EQ(j["counterexample"][0],
            "step=1 pid=1 act=write-reg obj=0 state=- val=5");
}

TEST(JsonTest, TableRowsInBothFormats) {
  TableRow row;
  row.width = 2;
  row.kind = RegisterKind::kLogical;
  row.max_discerning_n = 2;
  row.first_non_discerning_n = 3;
  row.nodes_searched = 12419;
  row.seconds = 0.5;
  const nlohmann::json j = table_row_json(row);
  EXPECT_EQ(j["width"], 2);
  EXPECT_EQ(j["kind"], "logical");
  EXPECT_EQ(j["max_discerning_n"], 2);
  EXPECT_EQ(j["first_non_discerning_n"], 3);
  EXPECT_FALSE(j["capped"].get<bool>());
  EXPECT_EQ(table_row_csv(row).rfind("2,logical,2,3,12419,", 0), 0u);

  TableRow capped;
  capped.width = 2;
  capped.kind = RegisterKind::kArithmetic;
  capped.max_discerning_n = 6;
  capped.capped = true;
  const nlohmann::json cj = table_row_json(capped);
  EXPECT_TRUE(cj["capped"].get<bool>());
  EXPECT_TRUE(cj["first_non_discerning_n"].is_null());
  EXPECT_EQ(table_row_csv(capped).rfind("2,arithmetic,>=6,-,", 0), 0u);
}

TEST(JsonTest, CsvHeaderNamesTheColumns) {
  EXPECT_STREQ(
      kTableCsvHeader,
      "width,kind,max_discerning_n,first_non_discerning_n,nodes_searched,"
      "seconds");
}

}  // namespace
}  // namespace shiftcons
