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

#include "shiftcons/discern.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace shiftcons {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int_strict(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " \"" + text + "\"");
  }
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string item;
  while (in >> item) ids.push_back(parse_int_strict(item, "process id"));
  return ids;
}

}  // namespace

Team DiscernConfig::team_of(int pid) const {
  if (std::binary_search(team_a.begin(), team_a.end(), pid)) return Team::kA;
  if (std::binary_search(team_b.begin(), team_b.end(), pid)) return Team::kB;
  throw OutOfRangeError("process " + std::to_string(pid) +
                        " is on neither team");
}

void validate_config(const DiscernConfig& config) {
  const int n = config.n();
  if (n < 2) {
    throw OutOfRangeError("a config needs at least two processes");
  }
  if (config.team_a.empty() || config.team_b.empty()) {
    throw OutOfRangeError("both teams must be nonempty");
  }
  if (!std::is_sorted(config.team_a.begin(), config.team_a.end()) ||
      !std::is_sorted(config.team_b.begin(), config.team_b.end())) {
    throw OutOfRangeError("team lists must be ascending");
  }
  std::vector<int> all = config.team_a;
  all.insert(all.end(), config.team_b.begin(), config.team_b.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < n; ++i) {
    if (all[i] != i + 1) {
      throw OutOfRangeError(
          "teams must partition the process ids 1.." + std::to_string(n));
    }
  }
  for (const UpdateOp& op : config.ops) {
    if (!op_legal_for(config.kind, op)) {
      throw IllegalVariantError("op " + op.str() + " not legal on a " +
                                register_kind_str(config.kind) + " register");
    }
    if (op.kind() == UpdateOp::Kind::kWrite) {
      const Word& v = op.value();
      if (v.width() != config.q0.width() ||
          v.alphabet() != config.q0.alphabet()) {
        throw WidthMismatchError("write value " + v.str() +
                                 " does not match the register shape");
      }
    }
  }
}

std::string config_str(const DiscernConfig& config) {
  std::ostringstream out;
  out << "width=" << config.width() << '\n';
  out << "alphabet=" << config.q0.sigma() << '\n';
  out << "kind=" << register_kind_str(config.kind) << '\n';
  out << "q0=" << config.q0.str() << '\n';
  out << "team A =";
  for (int pid : config.team_a) out << ' ' << pid;
  out << '\n';
  out << "team B =";
  for (int pid : config.team_b) out << ' ' << pid;
  out << '\n';
  for (int pid = 1; pid <= config.n(); ++pid) {
    out << "op " << pid << " = " << config.ops[pid - 1].str() << '\n';
  }
  return out.str();
}

DiscernConfig parse_config(const std::string& text) {
  std::optional<int> width;
  int alphabet = 2;
  std::optional<RegisterKind> kind;
  std::optional<std::string> q0_text;
  std::vector<int> team_a, team_b;
  std::map<int, std::string> op_text;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("missing '=' in config line \"" + line + "\"");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "width") {
      width = parse_int_strict(value, "width");
    } else if (key == "alphabet") {
      alphabet = parse_int_strict(value, "alphabet size");
    } else if (key == "kind") {
      kind = parse_register_kind(value);
    } else if (key == "q0") {
      q0_text = value;
    } else if (key == "team A") {
      team_a = parse_id_list(value);
    } else if (key == "team B") {
      team_b = parse_id_list(value);
    } else if (key.size() > 3 && key.compare(0, 3, "op ") == 0) {
      op_text[parse_int_strict(trim(key.substr(3)), "process id")] = value;
    } else {
      throw ParseError("unknown config key \"" + key + "\"");
    }
  }

  if (!width) throw ParseError("config is missing width=");
  if (!kind) throw ParseError("config is missing kind=");
  if (!q0_text) throw ParseError("config is missing q0=");
  if (team_a.empty() || team_b.empty()) {
    throw ParseError("config is missing a team line");
  }

  Alphabet ab(alphabet);
  Word q0 = Word::parse(*q0_text, ab);
  if (q0.width() != *width) {
    throw ParseError("q0 has width " + std::to_string(q0.width()) +
                     " but width=" + std::to_string(*width));
  }
  const int n = static_cast<int>(team_a.size() + team_b.size());
  std::vector<UpdateOp> ops;
  ops.reserve(n);
  for (int pid = 1; pid <= n; ++pid) {
    const auto it = op_text.find(pid);
    if (it == op_text.end()) {
      throw ParseError("config is missing op " + std::to_string(pid) + " =");
    }
    ops.push_back(UpdateOp::parse(it->second, ab));
  }
  std::sort(team_a.begin(), team_a.end());
  std::sort(team_b.begin(), team_b.end());

  DiscernConfig config{*kind, std::move(q0), std::move(team_a),
                       std::move(team_b), std::move(ops)};
  validate_config(config);
  return config;
}

Word replay_execution(const DiscernConfig& config, const Execution& exec) {
  Word state = config.q0;
  for (int pid : exec) {
    if (pid < 1 || pid > config.n()) {
      throw OutOfRangeError("execution mentions unknown process " +
                            std::to_string(pid));
    }
    state = apply_op(state, config.ops[pid - 1]);
  }
  return state;
}

namespace {

// Participant multisets of a given size in lexicographic order, as
// sorted pid sequences with per-pid multiplicity at most max_uses.
void for_each_multiset(int n, int max_uses, int size,
                       std::vector<int>& prefix,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(prefix.size()) == size) {
    f(prefix);
    return;
  }
  const int start = prefix.empty() ? 1 : prefix.back();
  for (int pid = start; pid <= n; ++pid) {
    const int used =
        static_cast<int>(std::count(prefix.begin(), prefix.end(), pid));
    if (used >= max_uses) continue;
    prefix.push_back(pid);
    for_each_multiset(n, max_uses, size, prefix, f);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Execution> enumerate_executions(const DiscernConfig& config,
                                            Team first_team, int max_uses) {
  validate_config(config);
  if (max_uses < 1) {
    throw OutOfRangeError("max_uses must be at least 1");
  }
  const int n = config.n();
  std::vector<Execution> out;
  std::vector<int> prefix;
  for (int size = 1; size <= n * max_uses; ++size) {
    for_each_multiset(n, max_uses, size, prefix,
                      [&](const std::vector<int>& multiset) {
                        Execution arr = multiset;
                        do {
                          if (config.team_of(arr.front()) == first_team) {
                            out.push_back(arr);
                          }
                        } while (std::next_permutation(arr.begin(), arr.end()));
                      });
  }
  return out;
}

ViewSets view_sets(const DiscernConfig& config, int max_uses) {
  ViewSets vs;
  vs.r_a.resize(config.n());
  vs.r_b.resize(config.n());
  for (Team team : {Team::kA, Team::kB}) {
    auto& r = team == Team::kA ? vs.r_a : vs.r_b;
    for (const Execution& exec : enumerate_executions(config, team, max_uses)) {
      const Word final_state = replay_execution(config, exec);
      std::vector<int> seen;
      for (int pid : exec) {
        if (std::find(seen.begin(), seen.end(), pid) != seen.end()) continue;
        seen.push_back(pid);
        r[pid - 1].insert(final_state);
      }
    }
  }
  return vs;
}

bool is_discerning_witness(const DiscernConfig& config, int max_uses) {
  const ViewSets vs = view_sets(config, max_uses);
  for (int j = 0; j < config.n(); ++j) {
    for (const Word& state : vs.r_a[j]) {
      if (vs.r_b[j].count(state) > 0) return false;
    }
  }
  return true;
}

DiscernConfig canonical_witness(int width, int n, RegisterKind kind) {
  if (width < 1) throw OutOfRangeError("width must be at least 1");
  if (n < 2) throw OutOfRangeError("need at least two processes");
  if (kind == RegisterKind::kLogical && n > width) {
    throw OutOfRangeError("a width-" + std::to_string(width) +
                          " logical register has no known witness for n=" +
                          std::to_string(n));
  }
  if (kind == RegisterKind::kArithmetic && width < 2) {
    throw OutOfRangeError(
        "a width-1 arithmetic register has no discerning witness");
  }
  const Alphabet ab(2);
  std::vector<std::uint8_t> digits(width, 0);
  digits[0] = 1;
  Word q0(ab, std::move(digits));

  std::vector<int> team_a, team_b;
  std::vector<UpdateOp> ops;
  const UpdateOp a_op = kind == RegisterKind::kLogical
                            ? UpdateOp::r_shift_logical(1)
                            : UpdateOp::r_shift_arith(1);
  for (int pid = 1; pid < n; ++pid) {
    team_a.push_back(pid);
    ops.push_back(a_op);
  }
  team_b.push_back(n);
  ops.push_back(UpdateOp::l_shift(1));

  DiscernConfig config{kind, std::move(q0), std::move(team_a),
                       std::move(team_b), std::move(ops)};
  validate_config(config);
  return config;
}

std::vector<UpdateOp> op_universe(int width, Alphabet alphabet,
                                  RegisterKind kind) {
  if (width < 1) throw OutOfRangeError("width must be at least 1");
  const auto states = state_space_size(alphabet, width);
  if (!states) {
    throw OutOfRangeError("state space too large to enumerate writes");
  }
  std::vector<UpdateOp> universe;
  for (int k = 1; k <= width; ++k) universe.push_back(UpdateOp::l_shift(k));
  for (int k = 1; k <= width; ++k) {
    universe.push_back(kind == RegisterKind::kLogical
                           ? UpdateOp::r_shift_logical(k)
                           : UpdateOp::r_shift_arith(k));
  }
  for (std::uint64_t code = 0; code < *states; ++code) {
    universe.push_back(
        UpdateOp::write(word_from_code(code, alphabet, width)));
  }
  return universe;
}

namespace {

constexpr int kMaxSearchN = 24;

// next[op][state] for the whole op universe, built through apply_op so
// the search cannot diverge from the word semantics.
struct TransitionTable {
  int num_states = 0;
  std::vector<std::vector<int>> next;
};

TransitionTable build_table(int width, Alphabet alphabet,
                            const std::vector<UpdateOp>& universe) {
  TransitionTable table;
  table.num_states = static_cast<int>(*state_space_size(alphabet, width));
  table.next.resize(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    table.next[i].resize(table.num_states);
    for (int code = 0; code < table.num_states; ++code) {
      const Word state = word_from_code(code, alphabet, width);
      table.next[i][code] =
          static_cast<int>(word_code(apply_op(state, universe[i])));
    }
  }
  return table;
}

// Grows one-shot executions depth first. In record mode (other ==
// nullptr) final states are accumulated into r; in stream mode any
// state already present in other[j] for a participant j aborts with
// false. allowed restricts the first mover; deeper levels are free.
bool extend_executions(const TransitionTable& table,
                       const std::vector<int>& op_of_pid, int n,
                       std::uint32_t allowed, int state, std::uint32_t used,
                       std::uint64_t* r, const std::uint64_t* other) {
  for (int p = 0; p < n; ++p) {
    const std::uint32_t bit_p = std::uint32_t{1} << p;
    if (!(allowed & bit_p) || (used & bit_p)) continue;
    const int ns = table.next[op_of_pid[p]][state];
    const std::uint32_t nu = used | bit_p;
    const std::uint64_t state_bit = std::uint64_t{1} << ns;
    if (other == nullptr) {
      for (int j = 0; j < n; ++j) {
        if (nu & (std::uint32_t{1} << j)) r[j] |= state_bit;
      }
    } else {
      for (int j = 0; j < n; ++j) {
        if ((nu & (std::uint32_t{1} << j)) && (other[j] & state_bit)) {
          return false;
        }
      }
    }
    if (!extend_executions(table, op_of_pid, n, ~std::uint32_t{0}, ns, nu, r,
                           other)) {
      return false;
    }
  }
  return true;
}

bool check_config_fast(const TransitionTable& table,
                       const std::vector<int>& op_of_pid, int n,
                       std::uint32_t a_mask, int q0_code) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint32_t b_mask = full & ~a_mask;
  const int count_a = std::popcount(a_mask);
  const std::uint32_t small = 2 * count_a <= n ? a_mask : b_mask;
  const std::uint32_t large = small == a_mask ? b_mask : a_mask;
  std::uint64_t r[kMaxSearchN] = {0};
  extend_executions(table, op_of_pid, n, small, q0_code, 0, r, nullptr);
  return extend_executions(table, op_of_pid, n, large, q0_code, 0, nullptr, r);
}

// Lexicographic odometer over op assignments, last pid fastest. With
// symmetry on, assignments are kept nondecreasing within each team
// (relabeling processes inside a team preserves witness-hood).
bool advance_ops(std::vector<int>& c, int universe_size, bool symmetry,
                 const std::vector<int>& prev_same_team) {
  const int n = static_cast<int>(c.size());
  for (int p = n - 1; p >= 0; --p) {
    if (c[p] + 1 < universe_size) {
      ++c[p];
      for (int q = p + 1; q < n; ++q) {
        c[q] = symmetry && prev_same_team[q] >= 0 ? c[prev_same_team[q]] : 0;
      }
      return true;
    }
  }
  return false;
}

std::vector<int> prev_same_team_index(int n, std::uint32_t a_mask) {
  std::vector<int> prev(n, -1);
  int last_a = -1, last_b = -1;
  for (int p = 0; p < n; ++p) {
    if (a_mask & (std::uint32_t{1} << p)) {
      prev[p] = last_a;
      last_a = p;
    } else {
      prev[p] = last_b;
      last_b = p;
    }
  }
  return prev;
}

DiscernConfig assemble_config(RegisterKind kind, const Word& q0, int n,
                              std::uint32_t a_mask,
                              const std::vector<UpdateOp>& universe,
                              const std::vector<int>& op_of_pid) {
  std::vector<int> team_a, team_b;
  std::vector<UpdateOp> ops;
  for (int p = 0; p < n; ++p) {
    if (a_mask & (std::uint32_t{1} << p)) {
      team_a.push_back(p + 1);
    } else {
      team_b.push_back(p + 1);
    }
    ops.push_back(universe[op_of_pid[p]]);
  }
  return DiscernConfig{kind, q0, std::move(team_a), std::move(team_b),
                       std::move(ops)};
}

struct BranchOutcome {
  std::uint64_t branch = 0;
  std::vector<int> op_of_pid;
};

}  // namespace

DiscernDecision decide_discerning(int width, int sigma, int n,
                                  RegisterKind kind,
                                  const SearchOptions& options) {
  if (width < 1) throw OutOfRangeError("width must be at least 1");
  if (sigma < 2) throw OutOfRangeError("alphabet size must be at least 2");
  if (n < 2 || n > kMaxSearchN) {
    throw OutOfRangeError("process count must be in [2, " +
                          std::to_string(kMaxSearchN) + "]");
  }
  if (options.max_uses < 1) {
    throw OutOfRangeError("max_uses must be at least 1");
  }

  const auto start = std::chrono::steady_clock::now();
  const Alphabet alphabet(sigma);
  const std::vector<UpdateOp> universe = op_universe(width, alphabet, kind);
  const int universe_size = static_cast<int>(universe.size());
  const auto states_opt = state_space_size(alphabet, width);
  if (!states_opt) {
    throw OutOfRangeError("state space too large to search");
  }
  const std::uint64_t num_states = *states_opt;
  const bool fast = !options.force_generic && options.max_uses == 1 &&
                    num_states <= 64;
  TransitionTable table;
  if (fast) table = build_table(width, alphabet, universe);

  const std::uint64_t masks = (std::uint64_t{1} << n) - 2;
  const std::uint64_t total_branches = num_states * masks;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};

  // Evaluates one (q0, partition) branch; returns the first witness op
  // assignment in odometer order, if any.
  const auto run_branch =
      [&](std::uint64_t branch) -> std::optional<std::vector<int>> {
    const std::uint64_t q0_code = branch / masks;
    const std::uint32_t a_mask =
        static_cast<std::uint32_t>(branch % masks) + 1;
    const Word q0 = word_from_code(q0_code, alphabet, width);
    const std::vector<int> prev_same = prev_same_team_index(n, a_mask);
    std::vector<int> op_of_pid(n, 0);
    do {
      const std::uint64_t seen = nodes.fetch_add(1);
      if (options.budget && seen >= *options.budget) {
        budget_hit = true;
        nodes.fetch_sub(1);
        return std::nullopt;
      }
      bool hit;
      if (fast) {
        hit = check_config_fast(table, op_of_pid, n, a_mask,
                                static_cast<int>(q0_code));
      } else {
        hit = is_discerning_witness(
            assemble_config(kind, q0, n, a_mask, universe, op_of_pid),
            options.max_uses);
      }
      if (hit) return op_of_pid;
    } while (!budget_hit && advance_ops(op_of_pid, universe_size,
                                        options.symmetry_reduction,
                                        prev_same));
    return std::nullopt;
  };

  std::optional<BranchOutcome> best;
  if (options.jobs <= 1) {
    for (std::uint64_t b = 0; b < total_branches; ++b) {
      if (auto ops = run_branch(b)) {
        best = BranchOutcome{b, std::move(*ops)};
        break;
      }
      if (budget_hit) break;
    }
  } else {
    std::atomic<std::uint64_t> next_branch{0};
    std::atomic<std::uint64_t> best_branch{total_branches};
    std::mutex mu;
    std::map<std::uint64_t, std::vector<int>> found;
    const auto worker = [&] {
      for (;;) {
        const std::uint64_t b = next_branch.fetch_add(1);
        if (b >= total_branches || b > best_branch.load() || budget_hit) {
          return;
        }
        if (auto ops = run_branch(b)) {
          std::uint64_t cur = best_branch.load();
          while (b < cur && !best_branch.compare_exchange_weak(cur, b)) {
          }
          std::lock_guard<std::mutex> lock(mu);
          found.emplace(b, std::move(*ops));
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < options.jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!found.empty()) {
      best = BranchOutcome{found.begin()->first, found.begin()->second};
    }
  }

  SearchStats stats;
  stats.nodes = nodes.load();
  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (best) {
    const std::uint64_t q0_code = best->branch / masks;
    const std::uint32_t a_mask =
        static_cast<std::uint32_t>(best->branch % masks) + 1;
    DiscernConfig witness =
        assemble_config(kind, word_from_code(q0_code, alphabet, width), n,
                        a_mask, universe, best->op_of_pid);
    if (!is_discerning_witness(witness, options.max_uses)) {
      throw Error("internal: search and verifier disagree on a witness");
    }
    return DiscernDecision{true, std::move(witness), stats};
  }
  if (budget_hit) {
    throw BudgetExceededError(
        "search budget of " + std::to_string(*options.budget) +
            " configs exhausted before a decision",
        stats.nodes);
  }
  return DiscernDecision{false, std::nullopt, stats};
}

TableRow probe_consensus_number(int width, int sigma, RegisterKind kind,
                                int max_n, const SearchOptions& options) {
  if (max_n < 2) throw OutOfRangeError("max_n must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  TableRow row;
  row.width = width;
  row.kind = kind;
  for (int n = 2; n <= max_n; ++n) {
    DiscernDecision decision;
    try {
      decision = decide_discerning(width, sigma, n, kind, options);
    } catch (const BudgetExceededError& e) {
      throw BudgetExceededError(e.what(), row.nodes_searched + e.nodes());
    }
    row.nodes_searched += decision.stats.nodes;
    if (decision.discerning) {
      row.max_discerning_n = n;
    } else {
      row.first_non_discerning_n = n;
      break;
    }
  }
  row.capped = row.first_non_discerning_n == -1;
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return row;
}

}  // namespace shiftcons
