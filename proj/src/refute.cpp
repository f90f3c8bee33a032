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

#include "shiftcons/refute.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace shiftcons {

namespace {

bool contains(const Execution& exec, int pid) {
  return std::find(exec.begin(), exec.end(), pid) != exec.end();
}

bool is_zero_fill_shift(const UpdateOp& op) {
  return op.kind() == UpdateOp::Kind::kLShift ||
         op.kind() == UpdateOp::Kind::kRShiftLogical;
}

// Sum of shift amounts over a pid set; empty when some op is a write.
std::optional<int> shift_sum(const DiscernConfig& config,
                             const std::vector<int>& pids) {
  int sum = 0;
  for (int pid : pids) {
    const UpdateOp& op = config.ops[pid - 1];
    if (!op.is_shift()) return std::nullopt;
    sum += op.amount();
  }
  return sum;
}

// The single shift kind shared by all ops over the pid set, if any.
std::optional<UpdateOp::Kind> uniform_shift_kind(const DiscernConfig& config,
                                                 const std::vector<int>& pids) {
  std::optional<UpdateOp::Kind> kind;
  for (int pid : pids) {
    const UpdateOp& op = config.ops[pid - 1];
    if (!op.is_shift()) return std::nullopt;
    if (kind && *kind != op.kind()) return std::nullopt;
    kind = op.kind();
  }
  return kind;
}

Counterexample make_counterexample(const DiscernConfig& config,
                                   Execution exec_a, Execution exec_b,
                                   int overlap) {
  Word final_state = replay_execution(config, exec_a);
  Counterexample ce{std::move(exec_a), std::move(exec_b),
                    std::move(final_state), overlap};
  verify_counterexample(config, ce);
  return ce;
}

}  // namespace

void verify_counterexample(const DiscernConfig& config,
                           const Counterexample& ce) {
  if (ce.exec_a.empty() || ce.exec_b.empty()) {
    throw Error("counterexample with an empty execution");
  }
  if (config.team_of(ce.exec_a.front()) != Team::kA ||
      config.team_of(ce.exec_b.front()) != Team::kB) {
    throw Error("counterexample executions have the wrong orientation");
  }
  const Word final_a = replay_execution(config, ce.exec_a);
  const Word final_b = replay_execution(config, ce.exec_b);
  if (final_a != final_b || final_a != ce.final_state) {
    throw Error("counterexample executions end in different states");
  }
  if (!contains(ce.exec_a, ce.overlap_process) ||
      !contains(ce.exec_b, ce.overlap_process)) {
    throw Error("counterexample overlap process is not in both executions");
  }
}

std::optional<Counterexample> refute_writes(const DiscernConfig& config) {
  validate_config(config);
  for (int pid = 1; pid <= config.n(); ++pid) {
    if (config.ops[pid - 1].kind() != UpdateOp::Kind::kWrite) continue;
    const Team team = config.team_of(pid);
    const auto& other = team == Team::kA ? config.team_b : config.team_a;
    const int partner = other.front();
    const Execution solo{pid};
    const Execution pair{partner, pid};
    if (team == Team::kA) {
      return make_counterexample(config, solo, pair, pid);
    }
    return make_counterexample(config, pair, solo, pid);
  }
  return std::nullopt;
}

std::optional<Counterexample> refute_same_direction(
    const DiscernConfig& config) {
  validate_config(config);
  for (int a : config.team_a) {
    for (int b : config.team_b) {
      const UpdateOp& op_a = config.ops[a - 1];
      const UpdateOp& op_b = config.ops[b - 1];
      if (!op_a.is_shift() || !op_b.is_shift()) continue;
      if (op_a.kind() != op_b.kind()) continue;
      return make_counterexample(config, Execution{a, b}, Execution{b, a},
                                 std::min(a, b));
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> refute_shift_sizes(const DiscernConfig& config) {
  validate_config(config);
  // An identity shift makes its process invisible.
  for (int pid = 1; pid <= config.n(); ++pid) {
    const UpdateOp& op = config.ops[pid - 1];
    if (!op.is_shift() || op.amount() != 0) continue;
    const Team team = config.team_of(pid);
    const auto& other = team == Team::kA ? config.team_b : config.team_a;
    const int partner = other.front();
    const Execution pair{pid, partner};
    const Execution solo{partner};
    if (team == Team::kA) {
      return make_counterexample(config, pair, solo, partner);
    }
    return make_counterexample(config, solo, pair, partner);
  }
  // A zero-filling team whose amounts reach the width flushes the
  // register from any state, with or without one opposing op in front.
  for (Team team : {Team::kA, Team::kB}) {
    const auto& members = team == Team::kA ? config.team_a : config.team_b;
    const auto& other = team == Team::kA ? config.team_b : config.team_a;
    const auto kind = uniform_shift_kind(config, members);
    if (!kind || !is_zero_fill_shift(config.ops[members.front() - 1])) {
      continue;
    }
    const auto sum = shift_sum(config, members);
    if (!sum || *sum < config.width()) continue;
    const int partner = other.front();
    Execution with_partner{partner};
    with_partner.insert(with_partner.end(), members.begin(), members.end());
    const Execution alone = members;
    if (team == Team::kA) {
      return make_counterexample(config, alone, with_partner,
                                 members.front());
    }
    return make_counterexample(config, with_partner, alone, members.front());
  }
  return std::nullopt;
}

std::optional<OverlapSplit> partial_sum_overlap(const std::vector<int>& ka,
                                                const std::vector<int>& kb,
                                                int width) {
  if (width < 1) throw OutOfRangeError("width must be at least 1");
  if (ka.empty() || kb.empty()) {
    throw OutOfRangeError("both shift-amount lists must be nonempty");
  }
  for (int k : ka) {
    if (k < 1) throw OutOfRangeError("shift amounts must be at least 1");
  }
  for (int k : kb) {
    if (k < 1) throw OutOfRangeError("shift amounts must be at least 1");
  }

  std::set<int> left, right;
  int sum = 0;
  for (int k : ka) left.insert(sum += k);
  sum = 0;
  for (int k : kb) right.insert(sum += k);

  std::vector<int> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(common));
  if (common.size() < 2) return std::nullopt;
  const int c1 = common[0];
  const int c2 = common[1];

  const auto cut = [](const std::vector<int>& ks, int target) {
    int acc = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      acc += ks[i];
      if (acc == target) return static_cast<int>(i) + 1;
    }
    throw Error("internal: prefix sum target vanished");
  };
  const int a = cut(ka, c1);
  const int a2 = cut(ka, c2);
  const int b = cut(kb, c1);
  const int b2 = cut(kb, c2);

  OverlapSplit split;
  for (int i = 1; i <= a; ++i) split.a1.push_back(i);
  for (int i = a + 1; i <= a2; ++i) split.a2.push_back(i);
  for (int i = 1; i <= b; ++i) split.b1.push_back(i);
  for (int i = b + 1; i <= b2; ++i) split.b2.push_back(i);
  return split;
}

std::optional<Counterexample> refute_rllr(const DiscernConfig& config,
                                          const std::vector<int>& a1,
                                          const std::vector<int>& a2,
                                          const std::vector<int>& b1,
                                          const std::vector<int>& b2) {
  validate_config(config);
  const auto check_subset = [&](const std::vector<int>& sub,
                                const std::vector<int>& team,
                                const char* name) {
    if (sub.empty()) {
      throw OutOfRangeError(std::string(name) + " must be nonempty");
    }
    for (int pid : sub) {
      if (!std::binary_search(team.begin(), team.end(), pid)) {
        throw OutOfRangeError(std::string(name) + " mentions process " +
                              std::to_string(pid) + " outside its team");
      }
    }
  };
  check_subset(a1, config.team_a, "a1");
  check_subset(a2, config.team_a, "a2");
  check_subset(b1, config.team_b, "b1");
  check_subset(b2, config.team_b, "b2");
  std::set<int> seen;
  for (const auto* set : {&a1, &a2, &b1, &b2}) {
    for (int pid : *set) {
      if (!seen.insert(pid).second) {
        throw OutOfRangeError("id sets overlap at process " +
                              std::to_string(pid));
      }
    }
  }

  const auto sa1 = shift_sum(config, a1);
  const auto sa2 = shift_sum(config, a2);
  const auto sb1 = shift_sum(config, b1);
  const auto sb2 = shift_sum(config, b2);
  if (!sa1 || !sa2 || !sb1 || !sb2) return std::nullopt;
  if (*sa1 != *sb1 || *sa2 != *sb2) return std::nullopt;

  std::vector<int> a_all = a1;
  a_all.insert(a_all.end(), a2.begin(), a2.end());
  std::vector<int> b_all = b1;
  b_all.insert(b_all.end(), b2.begin(), b2.end());
  std::sort(a_all.begin(), a_all.end());
  std::sort(b_all.begin(), b_all.end());
  const auto dir_a = uniform_shift_kind(config, a_all);
  const auto dir_b = uniform_shift_kind(config, b_all);
  if (!dir_a || !dir_b || *dir_a == *dir_b) return std::nullopt;

  const auto append_sorted = [](Execution& exec, std::vector<int> pids) {
    std::sort(pids.begin(), pids.end());
    exec.insert(exec.end(), pids.begin(), pids.end());
  };
  Execution first;
  append_sorted(first, a1);
  append_sorted(first, b1);
  append_sorted(first, b2);
  append_sorted(first, a2);
  Execution second;
  append_sorted(second, b2);
  append_sorted(second, a2);
  append_sorted(second, a1);
  append_sorted(second, b1);

  if (replay_execution(config, first) != replay_execution(config, second)) {
    return std::nullopt;
  }
  const int overlap = *std::min_element(seen.begin(), seen.end());
  return make_counterexample(config, std::move(first), std::move(second),
                             overlap);
}

std::optional<Counterexample> refute_rllr_auto(const DiscernConfig& config) {
  validate_config(config);
  const auto dir_a = uniform_shift_kind(config, config.team_a);
  const auto dir_b = uniform_shift_kind(config, config.team_b);
  if (!dir_a || !dir_b || *dir_a == *dir_b) return std::nullopt;
  std::vector<int> ka, kb;
  for (int pid : config.team_a) ka.push_back(config.ops[pid - 1].amount());
  for (int pid : config.team_b) kb.push_back(config.ops[pid - 1].amount());
  for (int k : ka) {
    if (k < 1) return std::nullopt;
  }
  for (int k : kb) {
    if (k < 1) return std::nullopt;
  }
  const auto split = partial_sum_overlap(ka, kb, config.width());
  if (!split) return std::nullopt;
  const auto to_pids = [](const std::vector<int>& team,
                          const std::vector<int>& indices) {
    std::vector<int> pids;
    for (int i : indices) pids.push_back(team[i - 1]);
    return pids;
  };
  return refute_rllr(config, to_pids(config.team_a, split->a1),
                     to_pids(config.team_a, split->a2),
                     to_pids(config.team_b, split->b1),
                     to_pids(config.team_b, split->b2));
}

}  // namespace shiftcons
