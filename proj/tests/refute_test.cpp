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

#include "shiftcons/refute.hpp"

namespace shiftcons {
namespace {

const Alphabet kBinary{2};

Word w(const std::string& text) { return Word::parse(text, kBinary); }

DiscernConfig make_config(RegisterKind kind, const std::string& q0,
                          std::vector<int> team_a, std::vector<int> team_b,
                          std::vector<UpdateOp> ops) {
  DiscernConfig config{kind, w(q0), std::move(team_a), std::move(team_b),
                       std::move(ops)};
  validate_config(config);
  return config;
}

TEST(VerifyTest, AcceptsGenuineAndRejectsTamperedCounterexamples) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::write(w("11")), UpdateOp::l_shift(1)});
  Counterexample ce{{1}, {2, 1}, w("11"), 1};
  EXPECT_NO_THROW(verify_counterexample(config, ce));

  Counterexample bad_final = ce;
  bad_final.final_state = w("10");
  EXPECT_THROW(verify_counterexample(config, bad_final), Error);

  Counterexample bad_orientation = ce;
  std::swap(bad_orientation.exec_a, bad_orientation.exec_b);
  EXPECT_THROW(verify_counterexample(config, bad_orientation), Error);

  Counterexample bad_overlap = ce;
  bad_overlap.overlap_process = 2;
  EXPECT_THROW(verify_counterexample(config, bad_overlap), Error);

  Counterexample empty = ce;
  empty.exec_a.clear();
  EXPECT_THROW(verify_counterexample(config, empty), Error);
}

TEST(WritesTest, WriterOnTeamASeesItsOwnValueEitherWay) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::write(w("11")), UpdateOp::l_shift(1)});
  const auto ce = refute_writes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1}));
  EXPECT_EQ(ce->exec_b, (Execution{2, 1}));
  EXPECT_EQ(ce->final_state.str(), "11");
  EXPECT_EQ(ce->overlap_process, 1);
}

TEST(WritesTest, WriterOnTeamBFlipsTheOrientation) {
  const DiscernConfig config =
      make_config(RegisterKind::kArithmetic, "01", {1}, {2},
                  {UpdateOp::r_shift_arith(1), UpdateOp::write(w("10"))});
  const auto ce = refute_writes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 2}));
  EXPECT_EQ(ce->exec_b, (Execution{2}));
  EXPECT_EQ(ce->final_state.str(), "10");
  EXPECT_EQ(ce->overlap_process, 2);
}

TEST(WritesTest, WritingTheInitialStateStillCollides) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::write(w("10")), UpdateOp::r_shift_logical(1)});
  const auto ce = refute_writes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->final_state, config.q0);
}

TEST(WritesTest, NotApplicableWithoutAWrite) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::r_shift_logical(1), UpdateOp::l_shift(1)});
  EXPECT_FALSE(refute_writes(config).has_value());
}

TEST(DirectionTest, CommutingLeftShiftsCollide) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "101", {1}, {2},
                  {UpdateOp::l_shift(1), UpdateOp::l_shift(2)});
  const auto ce = refute_same_direction(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 2}));
  EXPECT_EQ(ce->exec_b, (Execution{2, 1}));
  EXPECT_EQ(ce->final_state.str(), "000");
  EXPECT_EQ(ce->overlap_process, 1);
}

TEST(DirectionTest, CommutingRightShiftsCollide) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "110", {1}, {2},
                  {UpdateOp::r_shift_logical(1), UpdateOp::r_shift_logical(1)});
  const auto ce = refute_same_direction(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->final_state.str(), "001");
}

TEST(DirectionTest, ArithmeticShiftsAddTheirAmounts) {
  const DiscernConfig config =
      make_config(RegisterKind::kArithmetic, "101", {1}, {2},
                  {UpdateOp::r_shift_arith(1), UpdateOp::r_shift_arith(2)});
  const auto ce = refute_same_direction(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->final_state, rshift_arith(config.q0, 3));
}

TEST(DirectionTest, NotApplicableWhenTeamsOppose) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::r_shift_logical(1), UpdateOp::l_shift(1)});
  EXPECT_FALSE(refute_same_direction(config).has_value());
}

TEST(SizesTest, IdentityShiftMakesItsProcessInvisible) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "10", {1}, {2},
                  {UpdateOp::l_shift(0), UpdateOp::r_shift_logical(1)});
  const auto ce = refute_shift_sizes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 2}));
  EXPECT_EQ(ce->exec_b, (Execution{2}));
  EXPECT_EQ(ce->final_state, rshift_logical(config.q0, 1));
  EXPECT_EQ(ce->overlap_process, 2);
}

TEST(SizesTest, OversizedTeamSumFlushesTheRegister) {
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "11", {1, 2}, {3},
      {UpdateOp::r_shift_logical(1), UpdateOp::r_shift_logical(1),
       UpdateOp::l_shift(1)});
  const auto ce = refute_shift_sizes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 2}));
  EXPECT_EQ(ce->exec_b, (Execution{3, 1, 2}));
  EXPECT_EQ(ce->final_state.str(), "00");
  EXPECT_EQ(ce->overlap_process, 1);
}

TEST(SizesTest, OversizedTeamBWorksSymmetrically) {
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "11", {1}, {2, 3},
      {UpdateOp::r_shift_logical(1), UpdateOp::l_shift(1),
       UpdateOp::l_shift(1)});
  const auto ce = refute_shift_sizes(config);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 2, 3}));
  EXPECT_EQ(ce->exec_b, (Execution{2, 3}));
  EXPECT_TRUE(ce->final_state.is_zero());
}

TEST(SizesTest, NotApplicableWhenSizesAreLegal) {
  const DiscernConfig config =
      make_config(RegisterKind::kLogical, "110", {1, 2}, {3},
                  {UpdateOp::r_shift_logical(1), UpdateOp::r_shift_logical(1),
                   UpdateOp::l_shift(1)});
  EXPECT_FALSE(refute_shift_sizes(config).has_value());
}

TEST(OverlapTest, MatchingPrefixSumsSplitBothTeams) {
  const auto split = partial_sum_overlap({1, 1}, {1, 1}, 3);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->a1, (std::vector<int>{1}));
  EXPECT_EQ(split->a2, (std::vector<int>{2}));
  EXPECT_EQ(split->b1, (std::vector<int>{1}));
  EXPECT_EQ(split->b2, (std::vector<int>{2}));
}

TEST(OverlapTest, GapSplitPicksTheTwoSmallestCommonSums) {
  const auto split = partial_sum_overlap({1, 1, 1}, {1, 2}, 4);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->a1, (std::vector<int>{1}));
  EXPECT_EQ(split->a2, (std::vector<int>{2, 3}));
  EXPECT_EQ(split->b1, (std::vector<int>{1}));
  EXPECT_EQ(split->b2, (std::vector<int>{2}));
}

TEST(OverlapTest, SingleCommonSumIsNotEnough) {
  EXPECT_FALSE(partial_sum_overlap({1, 2}, {2, 1}, 4).has_value());
}

TEST(OverlapTest, RejectsDegenerateInputs) {
  EXPECT_THROW(partial_sum_overlap({}, {1}, 3), OutOfRangeError);
  EXPECT_THROW(partial_sum_overlap({1, 0}, {1}, 3), OutOfRangeError);
  EXPECT_THROW(partial_sum_overlap({1}, {1}, 0), OutOfRangeError);
}

DiscernConfig all_singleton_config() {
  return make_config(RegisterKind::kLogical, "111", {1, 2}, {3, 4},
                     {UpdateOp::l_shift(1), UpdateOp::l_shift(1),
                      UpdateOp::r_shift_logical(1),
                      UpdateOp::r_shift_logical(1)});
}

TEST(RllrTest, AllSingletonSplitEndsInTheMiddleState) {
  const auto ce = refute_rllr(all_singleton_config(), {1}, {2}, {3}, {4});
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->exec_a, (Execution{1, 3, 4, 2}));
  EXPECT_EQ(ce->exec_b, (Execution{4, 2, 1, 3}));
  EXPECT_EQ(ce->final_state.str(), "010");
  EXPECT_EQ(ce->overlap_process, 1);
}

TEST(RllrTest, UnequalGapSumsShiftTheSurvivingWindow) {
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "1111", {1, 2}, {3, 4},
      {UpdateOp::l_shift(1), UpdateOp::l_shift(2), UpdateOp::r_shift_logical(1),
       UpdateOp::r_shift_logical(2)});
  const auto ce = refute_rllr(config, {1}, {2}, {3}, {4});
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->final_state.str(), "0100");
}

TEST(RllrTest, MirroredTeamsCollideInTheMirroredState) {
  // Same shape with the directions swapped between the teams.
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "1111", {1, 2}, {3, 4},
      {UpdateOp::r_shift_logical(1), UpdateOp::r_shift_logical(2),
       UpdateOp::l_shift(1), UpdateOp::l_shift(2)});
  const auto ce = refute_rllr(config, {1}, {2}, {3}, {4});
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->final_state.str(), "0010");
}

TEST(RllrTest, SumMismatchIsNotApplicable) {
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "111", {1, 2}, {3, 4},
      {UpdateOp::l_shift(1), UpdateOp::l_shift(1), UpdateOp::r_shift_logical(2),
       UpdateOp::r_shift_logical(1)});
  EXPECT_FALSE(refute_rllr(config, {1}, {2}, {3}, {4}).has_value());
}

TEST(RllrTest, StructuralMisuseThrows) {
  const DiscernConfig config = all_singleton_config();
  EXPECT_THROW(refute_rllr(config, {}, {2}, {3}, {4}), OutOfRangeError);
  EXPECT_THROW(refute_rllr(config, {1}, {1}, {3}, {4}), OutOfRangeError);
  EXPECT_THROW(refute_rllr(config, {3}, {2}, {1}, {4}), OutOfRangeError);
}

TEST(RllrTest, AutoSplitMatchesTheManualOne) {
  const auto manual = refute_rllr(all_singleton_config(), {1}, {2}, {3}, {4});
  const auto automatic = refute_rllr_auto(all_singleton_config());
  ASSERT_TRUE(automatic.has_value());
  EXPECT_EQ(automatic->exec_a, manual->exec_a);
  EXPECT_EQ(automatic->exec_b, manual->exec_b);
  EXPECT_EQ(automatic->final_state, manual->final_state);
}

TEST(RllrTest, AutoDeclinesMixedDirectionTeams) {
  const DiscernConfig config = make_config(
      RegisterKind::kLogical, "111", {1, 2}, {3, 4},
      {UpdateOp::l_shift(1), UpdateOp::r_shift_logical(1), UpdateOp::l_shift(1),
       UpdateOp::r_shift_logical(1)});
  EXPECT_FALSE(refute_rllr_auto(config).has_value());
}

}  // namespace
}  // namespace shiftcons
