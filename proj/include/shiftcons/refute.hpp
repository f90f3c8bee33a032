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

#ifndef SHIFTCONS_REFUTE_HPP_
#define SHIFTCONS_REFUTE_HPP_

#include <optional>
#include <vector>

#include "shiftcons/discern.hpp"

namespace shiftcons {

// Evidence that a config is not a discerning witness: a team-A-first
// execution and a team-B-first execution that share a participant and
// end in the same register state, so that participant cannot tell the
// teams apart.
struct Counterexample {
  Execution exec_a;    // first op by a team-A process
  Execution exec_b;    // first op by a team-B process
  Word final_state;    // common final state of both replays
  int overlap_process;  // a process appearing in both executions
};

// Replays both executions and re-checks orientation, equal final
// states, and overlap. Throws Error when the counterexample is bogus.
void verify_counterexample(const DiscernConfig& config,
                           const Counterexample& ce);

// Write ops never help: if process i writes, the pair (partner, i)
// and the solo (i) both end in the written word. Picks the first
// writer in pid order and the first partner on the opposite team.
// Empty when no op is a write.
std::optional<Counterexample> refute_writes(const DiscernConfig& config);

// Same-direction shifts commute: a cross-team pair whose ops shift the
// same way yields (i, i') and (i', i) with equal final states. Empty
// when no such pair exists.
std::optional<Counterexample> refute_same_direction(
    const DiscernConfig& config);

// Shift sizes must be in range. A zero-amount shift is the identity,
// so (i, i') matches (i') alone. A team of uniform zero-filling shifts
// (all left, or all logical right) with amounts summing to at least
// the width flushes the register: its members alone, and the same
// sequence prefixed by an opponent, both end all-null. Empty when
// neither situation applies (sign-extending teams do not flush).
std::optional<Counterexample> refute_shift_sizes(const DiscernConfig& config);

// Index sets into the two shift-amount lists, 1-based.
struct OverlapSplit {
  std::vector<int> a1, a2, b1, b2;
};

// Finds matching partial sums: with L and R the prefix-sum sets of ka
// and kb, two common values c1 < c2 split each list into a prefix
// summing to c1 and a following segment summing to c2 - c1. Empty when
// the prefix-sum sets share fewer than two values. Whenever the lists
// together hold at least width + 1 entries, each at least 1, and each
// list sums to at most width - 1, the pigeonhole bound
// |L| + |R| - (width - 1) >= 2 makes success certain.
std::optional<OverlapSplit> partial_sum_overlap(const std::vector<int>& ka,
                                                const std::vector<int>& kb,
                                                int width);

// Interleaving trap: with a1, a2 inside team A and b1, b2 inside team
// B, pairwise-matching shift-amount sums, and the teams shifting in
// opposite directions, the executions a1 b1 b2 a2 and b2 a2 a1 b1 end
// in the same state. The id sets must be disjoint and nonempty; empty
// result when the sum or direction conditions fail.
std::optional<Counterexample> refute_rllr(const DiscernConfig& config,
                                          const std::vector<int>& a1,
                                          const std::vector<int>& a2,
                                          const std::vector<int>& b1,
                                          const std::vector<int>& b2);

// Derives the four id sets from partial_sum_overlap on the config's
// own shift amounts, then delegates to refute_rllr.
std::optional<Counterexample> refute_rllr_auto(const DiscernConfig& config);

}  // namespace shiftcons

#endif  // SHIFTCONS_REFUTE_HPP_
