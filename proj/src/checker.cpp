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

#include "shiftcons/checker.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace shiftcons {

std::string u128_str(ScheduleCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

RunResult run_schedule(const Protocol& protocol,
                       const std::vector<Value>& inputs,
                       const std::vector<int>& schedule) {
  validate_protocol(protocol);
  std::vector<int> uses(protocol.n, 0);
  for (int pid : schedule) {
    if (pid < 1 || pid > protocol.n) {
      throw MalformedScheduleError("schedule mentions unknown process " +
                                   std::to_string(pid));
    }
    if (++uses[pid - 1] >
        static_cast<int>(protocol.programs[pid - 1].steps.size())) {
      throw MalformedScheduleError(
          "schedule runs process " + std::to_string(pid) +
          " past its program length");
    }
  }
  ProtocolInstance instance(protocol, inputs);
  RunResult result;
  for (int pid : schedule) {
    result.trace.push_back(instance.step(pid));
  }
  result.decisions = instance.decisions();
  return result;
}

namespace {

struct Violations {
  bool agreement = false;
  bool validity = false;
};

Violations check_state(const ProtocolInstance& instance) {
  Violations v;
  const auto& decisions = instance.decisions();
  const auto& inputs = instance.inputs();
  std::optional<int> first;
  for (const auto& decision : decisions) {
    if (!decision) continue;
    if (*decision == kEmptyValue) v.validity = true;
    if (!first) {
      first = *decision;
      continue;
    }
    const int a = *first;
    const int b = *decision;
    const bool equal = a == b || (a != kEmptyValue && b != kEmptyValue &&
                                  inputs[a] == inputs[b]);
    if (!equal) v.agreement = true;
  }
  return v;
}

struct Explorer {
  const Protocol& protocol;
  const std::vector<Value>& inputs;
  const ExploreOptions& options;
  std::unordered_map<std::string, ScheduleCount> memo;
  std::vector<Event> path;
  std::optional<std::vector<Event>> agreement_ce;
  std::optional<std::vector<Event>> validity_ce;
  std::uint64_t visited = 0;

  ScheduleCount dfs(const ProtocolInstance& instance) {
    std::string key;
    if (options.memoize) {
      key = instance.state_key();
      const auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    if (options.state_budget && visited >= *options.state_budget) {
      throw BudgetExceededError(
          "state budget of " + std::to_string(*options.state_budget) +
              " exhausted",
          visited);
    }
    ++visited;
    const Violations v = check_state(instance);
    if (v.agreement && !agreement_ce) agreement_ce = path;
    if (v.validity && !validity_ce) validity_ce = path;

    ScheduleCount count = 0;
    if (instance.all_done()) {
      count = 1;
    } else {
      for (int pid = 1; pid <= protocol.n; ++pid) {
        if (instance.done(pid)) continue;
        ProtocolInstance next = instance;
        path.push_back(next.step(pid));
        count += dfs(next);
        path.pop_back();
      }
    }
    if (options.memoize) memo.emplace(std::move(key), count);
    return count;
  }
};

}  // namespace

ExploreResult explore_all_schedules(const Protocol& protocol,
                                    const std::vector<Value>& inputs,
                                    const ExploreOptions& options) {
  validate_protocol(protocol);
  Explorer explorer{protocol, inputs, options, {}, {}, {}, {}, 0};
  ProtocolInstance initial(protocol, inputs);
  const ScheduleCount schedules = explorer.dfs(initial);

  ExploreResult result;
  result.states_visited = explorer.visited;
  result.verdict.agreement = !explorer.agreement_ce.has_value();
  result.verdict.validity = !explorer.validity_ce.has_value();
  result.verdict.schedules = schedules;
  result.verdict.max_steps = protocol.total_steps();
  if (explorer.agreement_ce) {
    result.verdict.counterexample = std::move(explorer.agreement_ce);
  } else if (explorer.validity_ce) {
    result.verdict.counterexample = std::move(explorer.validity_ce);
  }
  return result;
}

std::vector<std::vector<int>> sample_schedules(const Protocol& protocol,
                                               std::uint64_t seed,
                                               std::uint64_t count) {
  validate_protocol(protocol);
  if (count < 1) throw OutOfRangeError("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> schedules;
  schedules.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<int> remaining;
    for (int pid = 1; pid <= protocol.n; ++pid) {
      remaining.push_back(
          static_cast<int>(protocol.programs[pid - 1].steps.size()));
    }
    std::vector<int> schedule;
    schedule.reserve(protocol.total_steps());
    for (;;) {
      std::vector<int> live;
      for (int pid = 1; pid <= protocol.n; ++pid) {
        if (remaining[pid - 1] > 0) live.push_back(pid);
      }
      if (live.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      const int pid = live[pick(rng)];
      schedule.push_back(pid);
      --remaining[pid - 1];
    }
    schedules.push_back(std::move(schedule));
  }
  return schedules;
}

Verdict random_schedules(const Protocol& protocol,
                         const std::vector<Value>& inputs, std::uint64_t seed,
                         std::uint64_t count) {
  Verdict verdict;
  verdict.max_steps = protocol.total_steps();
  std::optional<std::vector<Event>> agreement_ce;
  std::optional<std::vector<Event>> validity_ce;
  for (const std::vector<int>& schedule :
       sample_schedules(protocol, seed, count)) {
    ProtocolInstance instance(protocol, inputs);
    std::vector<Event> trace;
    for (int pid : schedule) {
      trace.push_back(instance.step(pid));
      const Violations v = check_state(instance);
      if (v.agreement && !agreement_ce) agreement_ce = trace;
      if (v.validity && !validity_ce) validity_ce = trace;
    }
    verdict.schedules += 1;
  }
  verdict.agreement = !agreement_ce.has_value();
  verdict.validity = !validity_ce.has_value();
  if (agreement_ce) {
    verdict.counterexample = std::move(agreement_ce);
  } else if (validity_ce) {
    verdict.counterexample = std::move(validity_ce);
  }
  return verdict;
}

namespace {

std::string act_name(Step::Kind kind) {
  switch (kind) {
    case Step::Kind::kWriteRegister:
      return "write-reg";
    case Step::Kind::kApplyObject:
      return "apply";
    case Step::Kind::kReadObject:
      return "read-obj";
    case Step::Kind::kReadRegister:
      return "read-reg";
    case Step::Kind::kDecide:
      return "decide";
  }
  throw IllegalVariantError("bad step kind");
}

}  // namespace

std::string format_trace_line(const Event& event, int step_index,
                              const std::vector<Value>& inputs) {
  std::ostringstream out;
  out << "step=" << step_index << " pid=" << event.pid
      << " act=" << act_name(event.kind);
  out << " obj=";
  if (event.target >= 0) {
    out << event.target;
  } else {
    out << '-';
  }
  out << " state=";
  if (event.object_state) {
    out << event.object_state->str();
  } else {
    out << '-';
  }
  out << " val=";
  if (event.value_index) {
    if (*event.value_index == kEmptyValue) {
      out << "nil";
    } else {
      out << inputs[*event.value_index];
    }
  } else {
    out << '-';
  }
  return out.str();
}

std::vector<std::string> format_trace(const std::vector<Event>& trace,
                                      const std::vector<Value>& inputs) {
  std::vector<std::string> lines;
  lines.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    lines.push_back(format_trace_line(trace[i], static_cast<int>(i) + 1,
                                      inputs));
  }
  return lines;
}

}  // namespace shiftcons
