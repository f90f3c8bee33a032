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

#include "shiftcons/json_out.hpp"

#include <limits>
#include <sstream>

namespace shiftcons {

nlohmann::json config_json(const DiscernConfig& config) {
  nlohmann::json ops = nlohmann::json::object();
  for (int pid = 1; pid <= config.n(); ++pid) {
    ops[std::to_string(pid)] = config.ops[pid - 1].str();
  }
  return nlohmann::json{{"width", config.width()},
                        {"alphabet", config.q0.sigma()},
                        {"kind", register_kind_str(config.kind)},
                        {"q0", config.q0.str()},
                        {"team_a", config.team_a},
                        {"team_b", config.team_b},
                        {"ops", ops}};
}

namespace {

nlohmann::json side_json(const std::vector<std::set<Word>>& side) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t j = 0; j < side.size(); ++j) {
    std::vector<std::string> states;
    for (const Word& state : side[j]) states.push_back(state.str());
    out[std::to_string(j + 1)] = states;
  }
  return out;
}

}  // namespace

nlohmann::json view_sets_json(const ViewSets& views) {
  return nlohmann::json{{"r_a", side_json(views.r_a)},
                        {"r_b", side_json(views.r_b)}};
}

nlohmann::json counterexample_json(const Counterexample& ce) {
  return nlohmann::json{{"exec_a", ce.exec_a},
                        {"exec_b", ce.exec_b},
                        {"final_state", ce.final_state.str()},
                        {"overlap_process", ce.overlap_process}};
}

nlohmann::json verdict_json(const Verdict& verdict,
                            const std::vector<Value>& inputs) {
  nlohmann::json out{{"agreement", verdict.agreement},
                     {"validity", verdict.validity},
                     {"max_steps", verdict.max_steps}};
  if (verdict.schedules <=
      ScheduleCount{std::numeric_limits<std::uint64_t>::max()}) {
    out["schedules"] = static_cast<std::uint64_t>(verdict.schedules);
  } else {
    out["schedules"] = u128_str(verdict.schedules);
  }
  if (verdict.counterexample) {
    out["counterexample"] = format_trace(*verdict.counterexample, inputs);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

nlohmann::json table_row_json(const TableRow& row) {
  nlohmann::json out{{"width", row.width},
                     {"kind", register_kind_str(row.kind)},
                     {"max_discerning_n", row.max_discerning_n},
                     {"capped", row.capped},
                     {"nodes_searched", row.nodes_searched},
                     {"seconds", row.seconds}};
  if (row.first_non_discerning_n >= 0) {
    out["first_non_discerning_n"] = row.first_non_discerning_n;
  } else {
    out["first_non_discerning_n"] = nullptr;
  }
  return out;
}

const char kTableCsvHeader[] =
    "width,kind,max_discerning_n,first_non_discerning_n,nodes_searched,"
    "seconds";

std::string table_row_csv(const TableRow& row) {
  std::ostringstream out;
  out << row.width << ',' << register_kind_str(row.kind) << ',';
  if (row.capped) {
    out << ">=" << row.max_discerning_n << ",-";
  } else {
    out << row.max_discerning_n << ',' << row.first_non_discerning_n;
  }
  out << ',' << row.nodes_searched << ',' << row.seconds;
  return out.str();
}

}  // namespace shiftcons
