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

#ifndef SHIFTCONS_CHECKER_HPP_
#define SHIFTCONS_CHECKER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftcons/protocol.hpp"

namespace shiftcons {

// Schedule counts overflow 64 bits well before the protocols stop
// being checkable, so counting uses 128 bits.
using ScheduleCount = unsigned __int128;

std::string u128_str(ScheduleCount value);

// Deterministic replay of one (possibly partial) schedule.
struct RunResult {
  std::vector<Event> trace;
  std::vector<std::optional<int>> decisions;
};

RunResult run_schedule(const Protocol& protocol,
                       const std::vector<Value>& inputs,
                       const std::vector<int>& schedule);

// Outcome of schedule exploration. Agreement fails when two decided
// processes hold different values; validity fails when a decision is
// not one of the inputs (with this step language that means deciding a
// never-written register's content). Both are checked after every
// step, not just on complete schedules, so counterexamples are the
// shortest the exploration order can deliver.
struct Verdict {
  bool agreement = true;
  bool validity = true;
  ScheduleCount schedules = 0;
  int max_steps = 0;
  // Trace to the first agreement violation when agreement fails,
  // otherwise to the first validity violation; absent when both hold.
  std::optional<std::vector<Event>> counterexample;
};

struct ExploreOptions {
  std::optional<std::uint64_t> state_budget;
  // Memoization on the full state key; off only for cross-checking on
  // tiny instances. Violations are found in the same order either way.
  bool memoize = true;
};

struct ExploreResult {
  Verdict verdict;
  std::uint64_t states_visited = 0;
};

// Depth-first search over all adversary schedules, branching over the
// unfinished processes in pid order. Throws BudgetExceededError when
// the state budget runs out.
ExploreResult explore_all_schedules(const Protocol& protocol,
                                    const std::vector<Value>& inputs,
                                    const ExploreOptions& options = {});

// The complete schedules random_schedules(seed, count) replays, in
// order: each position picks uniformly among the unfinished processes.
std::vector<std::vector<int>> sample_schedules(const Protocol& protocol,
                                               std::uint64_t seed,
                                               std::uint64_t count);

// Replays `count` seeded random complete schedules with the same
// per-step checks as the exhaustive search. The verdict covers only
// the sampled schedules.
Verdict random_schedules(const Protocol& protocol,
                         const std::vector<Value>& inputs, std::uint64_t seed,
                         std::uint64_t count);

// One trace line: step=<i> pid=<p> act=<kind> obj=<idx|-> state=<word|->
// val=<v|->, steps numbered from 1.
std::string format_trace_line(const Event& event, int step_index,
                              const std::vector<Value>& inputs);

std::vector<std::string> format_trace(const std::vector<Event>& trace,
                                      const std::vector<Value>& inputs);

}  // namespace shiftcons

#endif  // SHIFTCONS_CHECKER_HPP_
