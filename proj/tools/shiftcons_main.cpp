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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftcons/checker.hpp"
#include "shiftcons/discern.hpp"
#include "shiftcons/json_out.hpp"
#include "shiftcons/protocol.hpp"
#include "shiftcons/refute.hpp"

namespace {

using namespace shiftcons;

constexpr int kExitOk = 0;
constexpr int kExitFailingVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotApplicable = 4;

struct Options {
  int width = 0;
  int alphabet = 2;
  int n = 0;
  std::string kind = "logical";
  bool json = false;
  int jobs = 1;
  bool fast = false;
  int repeats = 1;
  std::uint64_t budget = 0;  // 0 = unlimited
  std::string lemma;
  std::string config_path;
  std::string inputs_text;
  std::string schedule_text;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  int min_width = 1;
  int max_width = 1;
  int max_n = 0;  // 0 = per-kind default probe limit
  int invert_classify = 0;  // 0 = no fault injection
};

RegisterKind kind_of(const Options& opt) {
  return parse_register_kind(opt.kind);
}

SearchOptions search_options(const Options& opt) {
  SearchOptions s;
  if (opt.budget > 0) s.budget = opt.budget;
  s.jobs = opt.jobs;
  s.symmetry_reduction = opt.fast;
  s.max_uses = opt.repeats;
  return s;
}

std::vector<Value> parse_inputs(const std::string& text, int n) {
  std::vector<Value> inputs;
  if (text.empty()) {
    for (int i = 1; i <= n; ++i) inputs.push_back(i);
    return inputs;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      inputs.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad input value \"" + item + "\"");
    }
  }
  if (static_cast<int>(inputs.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " inputs, got " +
                     std::to_string(inputs.size()));
  }
  return inputs;
}

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> schedule;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      schedule.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad schedule entry \"" + item + "\"");
    }
  }
  return schedule;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_discern(const Options& opt) {
  const DiscernDecision decision = decide_discerning(
      opt.width, opt.alphabet, opt.n, kind_of(opt), search_options(opt));
  if (opt.json) {
    nlohmann::json out{{"discerning", decision.discerning},
                       {"n", opt.n},
                       {"width", opt.width},
                       {"alphabet", opt.alphabet},
                       {"kind", opt.kind},
                       {"nodes", decision.stats.nodes},
                       {"seconds", decision.stats.seconds}};
    out["witness"] =
        decision.witness ? config_json(*decision.witness) : nlohmann::json();
    emit(out);
  } else {
    std::cout << (decision.discerning ? "" : "NOT ") << opt.n
              << "-discerning (width=" << opt.width
              << ", alphabet=" << opt.alphabet << ", kind=" << opt.kind
              << ")\n";
    if (decision.witness) std::cout << config_str(*decision.witness);
    std::cout << "nodes=" << decision.stats.nodes
              << " seconds=" << decision.stats.seconds << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Options& opt) {
  const DiscernConfig config =
      canonical_witness(opt.width, opt.n, kind_of(opt));
  if (opt.json) {
    emit(nlohmann::json{{"config", config_json(config)},
                        {"view_sets", view_sets_json(view_sets(config))}});
  } else {
    std::cout << config_str(config);
  }
  return kExitOk;
}

int cmd_lemma(const Options& opt) {
  const DiscernConfig config = parse_config(read_file(opt.config_path));
  std::optional<Counterexample> ce;
  if (opt.lemma == "no-writes") {
    ce = refute_writes(config);
  } else if (opt.lemma == "direction") {
    ce = refute_same_direction(config);
  } else if (opt.lemma == "sizes") {
    ce = refute_shift_sizes(config);
  } else if (opt.lemma == "rllr") {
    ce = refute_rllr_auto(config);
  } else {
    throw ParseError("unknown lemma \"" + opt.lemma + "\"");
  }
  if (!ce) {
    std::cout << "lemma " << opt.lemma << ": not applicable to this config\n";
    return kExitNotApplicable;
  }
  if (opt.json) {
    emit(counterexample_json(*ce));
  } else {
    const auto print_exec = [&](const char* name, const Execution& exec) {
      std::cout << name << " =";
      for (int pid : exec) std::cout << ' ' << pid;
      std::cout << " -> " << replay_execution(config, exec).str() << '\n';
    };
    print_exec("exec A", ce->exec_a);
    print_exec("exec B", ce->exec_b);
    std::cout << "overlap process = " << ce->overlap_process << '\n';
  }
  return kExitOk;
}

int cmd_consensus(const Options& opt) {
  Protocol protocol = build_consensus(opt.n, kind_of(opt), opt.width);
  if (opt.invert_classify > 0) {
    protocol = protocol.with_inverted_classify(opt.invert_classify);
  }
  const std::vector<Value> inputs = parse_inputs(opt.inputs_text, opt.n);
  Verdict verdict;
  nlohmann::json extra;
  if (opt.mode == "exhaustive") {
    ExploreOptions options;
    if (opt.budget > 0) options.state_budget = opt.budget;
    const ExploreResult result =
        explore_all_schedules(protocol, inputs, options);
    verdict = result.verdict;
    extra["mode"] = "exhaustive";
    extra["states"] = result.states_visited;
  } else if (opt.mode == "random") {
    verdict = random_schedules(protocol, inputs, opt.seed, opt.samples);
    extra["mode"] = "random";
    extra["seed"] = opt.seed;
    extra["samples"] = opt.samples;
  } else {
    throw ParseError("unknown mode \"" + opt.mode + "\"");
  }
  if (opt.json) {
    nlohmann::json out = verdict_json(verdict, inputs);
    out.update(extra);
    emit(out);
  } else {
    std::cout << "mode=" << opt.mode;
    if (opt.mode == "random") {
      std::cout << " seed=" << opt.seed << " samples=" << opt.samples;
    }
    std::cout << '\n';
    std::cout << "agreement=" << (verdict.agreement ? "true" : "false")
              << " validity=" << (verdict.validity ? "true" : "false")
              << " schedules=" << u128_str(verdict.schedules)
              << " max_steps=" << verdict.max_steps << '\n';
    if (verdict.counterexample) {
      std::cout << "counterexample:\n";
      for (const std::string& line :
           format_trace(*verdict.counterexample, inputs)) {
        std::cout << "  " << line << '\n';
      }
    }
  }
  return verdict.agreement && verdict.validity ? kExitOk
                                               : kExitFailingVerdict;
}

int cmd_table(const Options& opt) {
  const RegisterKind kind = kind_of(opt);
  std::vector<TableRow> rows;
  for (int width = opt.min_width; width <= opt.max_width; ++width) {
    int max_n = opt.max_n;
    if (max_n == 0) {
      max_n = kind == RegisterKind::kLogical ? width + 1 : 6;
    }
    max_n = std::max(max_n, 2);
    rows.push_back(probe_consensus_number(width, opt.alphabet, kind, max_n,
                                          search_options(opt)));
  }
  if (opt.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const TableRow& row : rows) out.push_back(table_row_json(row));
    emit(out);
  } else {
    std::cout << kTableCsvHeader << '\n';
    for (const TableRow& row : rows) std::cout << table_row_csv(row) << '\n';
  }
  return kExitOk;
}

int cmd_trace_replay(const Options& opt) {
  const Protocol protocol = build_consensus(opt.n, kind_of(opt), opt.width);
  const std::vector<Value> inputs = parse_inputs(opt.inputs_text, opt.n);
  const std::vector<int> schedule = parse_schedule(opt.schedule_text);
  const RunResult result = run_schedule(protocol, inputs, schedule);
  if (opt.json) {
    nlohmann::json decisions = nlohmann::json::array();
    for (const auto& decision : result.decisions) {
      if (!decision) {
        decisions.push_back(nullptr);
      } else if (*decision == kEmptyValue) {
        decisions.push_back("nil");
      } else {
        decisions.push_back(inputs[*decision]);
      }
    }
    emit(nlohmann::json{{"trace", format_trace(result.trace, inputs)},
                        {"decisions", decisions}});
  } else {
    for (const std::string& line : format_trace(result.trace, inputs)) {
      std::cout << line << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shift-register consensus toolkit"};
  app.require_subcommand(1);
  Options opt;

  const auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind", opt.kind, "register kind")
        ->check(CLI::IsMember({"logical", "arithmetic"}))
        ->required();
  };
  const auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "machine-readable output");
  };

  CLI::App* discern = app.add_subcommand(
      "discern", "decide n-discernibility by exhaustive search");
  discern->add_option("--width", opt.width, "register width")->required();
  discern->add_option("--alphabet", opt.alphabet, "alphabet size");
  discern->add_option("--n", opt.n, "process count")->required();
  add_kind(discern);
  discern->add_option("--budget", opt.budget, "config budget (0 = none)");
  discern->add_option("--jobs", opt.jobs, "worker threads");
  discern->add_flag("--fast", opt.fast,
                    "dedup op assignments within each team");
  discern->add_option("--repeats", opt.repeats,
                      "ops per process per execution");
  add_json(discern);

  CLI::App* witness = app.add_subcommand(
      "witness", "print the known-good witness construction");
  witness->add_option("--width", opt.width, "register width")->required();
  witness->add_option("--n", opt.n, "process count")->required();
  add_kind(witness);
  add_json(witness);

  CLI::App* lemma =
      app.add_subcommand("lemma", "build a counterexample from a config");
  lemma->add_option("--lemma", opt.lemma, "no-writes|direction|sizes|rllr")
      ->check(CLI::IsMember({"no-writes", "direction", "sizes", "rllr"}))
      ->required();
  lemma->add_option("--config", opt.config_path, "config file path")
      ->required();
  add_json(lemma);

  CLI::App* consensus =
      app.add_subcommand("consensus", "model check the consensus protocol");
  consensus->add_option("--n", opt.n, "process count")->required();
  consensus->add_option("--width", opt.width, "register width")->required();
  add_kind(consensus);
  consensus->add_option("--inputs", opt.inputs_text,
                        "comma-separated inputs (default 1..n)");
  consensus->add_option("--mode", opt.mode, "exhaustive|random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  consensus->add_option("--seed", opt.seed, "random mode seed");
  consensus->add_option("--samples", opt.samples, "random mode sample count");
  consensus->add_option("--budget", opt.budget, "state budget (0 = none)");
  consensus->add_option("--invert-classify", opt.invert_classify,
                        "fault injection: flip one process's state reading");
  add_json(consensus);

  CLI::App* table =
      app.add_subcommand("table", "consensus-number table over widths");
  table->add_option("--min-width", opt.min_width, "first width")->required();
  table->add_option("--max-width", opt.max_width, "last width")->required();
  table->add_option("--alphabet", opt.alphabet, "alphabet size");
  add_kind(table);
  table->add_option("--max-n", opt.max_n,
                    "probe limit (0 = width+1 logical, 6 arithmetic)");
  table->add_option("--budget", opt.budget, "config budget (0 = none)");
  table->add_option("--jobs", opt.jobs, "worker threads");
  table->add_flag("--fast", opt.fast, "dedup op assignments within each team");
  add_json(table);

  CLI::App* replay =
      app.add_subcommand("trace-replay", "replay one schedule and print it");
  replay->add_option("--n", opt.n, "process count")->required();
  replay->add_option("--width", opt.width, "register width")->required();
  add_kind(replay);
  replay->add_option("--inputs", opt.inputs_text,
                     "comma-separated inputs (default 1..n)");
  replay->add_option("--schedule", opt.schedule_text,
                     "comma-separated process ids")
      ->required();
  add_json(replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (discern->parsed()) return cmd_discern(opt);
    if (witness->parsed()) return cmd_witness(opt);
    if (lemma->parsed()) return cmd_lemma(opt);
    if (consensus->parsed()) return cmd_consensus(opt);
    if (table->parsed()) return cmd_table(opt);
    if (replay->parsed()) return cmd_trace_replay(opt);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
