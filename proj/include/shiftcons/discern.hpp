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

#ifndef SHIFTCONS_DISCERN_HPP_
#define SHIFTCONS_DISCERN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftcons/shift_object.hpp"

namespace shiftcons {

enum class Team { kA, kB };

// One candidate witness: an initial state, a two-team partition of the
// process ids 1..n, and one update op per process.
struct DiscernConfig {
  RegisterKind kind;
  Word q0;
  std::vector<int> team_a;  // ascending 1-based pids
  std::vector<int> team_b;
  std::vector<UpdateOp> ops;  // ops[pid - 1]

  int n() const { return static_cast<int>(ops.size()); }
  int width() const { return q0.width(); }
  Team team_of(int pid) const;
};

// Checks team partition shape, op legality for the register kind, and
// write widths. Throws on violation.
void validate_config(const DiscernConfig& config);

// Line-oriented text form:
//   width=3
//   alphabet=2
//   kind=logical
//   q0=100
//   team A = 1 2
//   team B = 3
//   op 1 = r^1
//   ...
std::string config_str(const DiscernConfig& config);
DiscernConfig parse_config(const std::string& text);

// A one-shot execution: the process ids in the order their ops run.
using Execution = std::vector<int>;

// Final register state after folding the execution's ops over q0.
Word replay_execution(const DiscernConfig& config, const Execution& exec);

// All executions whose first op belongs to `first_team`, each process
// appearing at most max_uses times. Order: by participant multiset
// (size, then lexicographic), then arrangements in lexicographic order.
std::vector<Execution> enumerate_executions(const DiscernConfig& config,
                                            Team first_team,
                                            int max_uses = 1);

// Per-process reachable final states, split by which team moved first.
// r_a[j-1] collects the final states of team-A-first executions that
// contain process j; r_b likewise for team-B-first executions.
struct ViewSets {
  std::vector<std::set<Word>> r_a;
  std::vector<std::set<Word>> r_b;
};

ViewSets view_sets(const DiscernConfig& config, int max_uses = 1);

// True iff r_a[j] and r_b[j] are disjoint for every process j: every
// process can tell from the final state which team moved first.
bool is_discerning_witness(const DiscernConfig& config, int max_uses = 1);

// The known-good construction: q0 = 1 0^{w-1}, processes 1..n-1 on team
// A with a one-step right shift (logical r or arithmetic s), process n
// alone on team B with a one-step left shift. Logical registers need
// 2 <= n <= width; arithmetic ones work for any n >= 2 once width >= 2.
DiscernConfig canonical_witness(int width, int n, RegisterKind kind);

// The update ops considered by the exhaustive search: l^1..l^w, then
// r^1..r^w (logical) or s^1..s^w (arithmetic), then every write in
// state-code order. Shift amounts above w are redundant and omitted.
std::vector<UpdateOp> op_universe(int width, Alphabet alphabet,
                                  RegisterKind kind);

struct SearchOptions {
  std::optional<std::uint64_t> budget;  // cap on configs evaluated
  int jobs = 1;
  bool symmetry_reduction = false;  // dedup op assignments within a team
  int max_uses = 1;                 // ops per process per execution
  bool force_generic = false;       // skip the table-driven fast path
};

struct SearchStats {
  std::uint64_t nodes = 0;  // configs evaluated
  double seconds = 0.0;
};

struct DiscernDecision {
  bool discerning = false;
  std::optional<DiscernConfig> witness;
  SearchStats stats;
};

// Exhaustive search over q0 (state-code order), partitions (bitmask
// order: bit i-1 set puts pid i on team A, masks 1..2^n-2), and op
// assignments (lexicographic, last pid fastest). Returns the first
// witness in that order, or a negative decision after exhausting the
// space. Throws BudgetExceededError when the config budget runs out
// first. With jobs > 1, (q0, partition) branches run concurrently but
// the reported witness is still the first in the documented order.
DiscernDecision decide_discerning(int width, int sigma, int n,
                                  RegisterKind kind,
                                  const SearchOptions& options = {});

// One row of the consensus-number table.
struct TableRow {
  int width = 0;
  RegisterKind kind = RegisterKind::kLogical;
  int max_discerning_n = 1;         // 1 when no n >= 2 works
  bool capped = false;              // true when every probed n worked
  int first_non_discerning_n = -1;  // -1 when none found below the cap
  std::uint64_t nodes_searched = 0;
  double seconds = 0.0;
};

// Probes n = 2..max_n in order, stopping at the first negative answer
// (discernibility is monotone: dropping a process from a two-or-more
// member team preserves a witness).
TableRow probe_consensus_number(int width, int sigma, RegisterKind kind,
                                int max_n, const SearchOptions& options = {});

}  // namespace shiftcons

#endif  // SHIFTCONS_DISCERN_HPP_
