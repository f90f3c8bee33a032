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

#ifndef SHIFTCONS_JSON_OUT_HPP_
#define SHIFTCONS_JSON_OUT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "shiftcons/checker.hpp"
#include "shiftcons/discern.hpp"
#include "shiftcons/refute.hpp"

namespace shiftcons {

nlohmann::json config_json(const DiscernConfig& config);

nlohmann::json view_sets_json(const ViewSets& views);

// Includes both executions, the shared final state, and the overlap
// process.
nlohmann::json counterexample_json(const Counterexample& ce);

// Keys: agreement, validity, max_steps, schedules, counterexample.
// The schedule count is a JSON number while it fits 64 bits and a
// decimal string beyond that. The counterexample is an array of trace
// lines or null.
nlohmann::json verdict_json(const Verdict& verdict,
                            const std::vector<Value>& inputs);

nlohmann::json table_row_json(const TableRow& row);

extern const char kTableCsvHeader[];
std::string table_row_csv(const TableRow& row);

}  // namespace shiftcons

#endif  // SHIFTCONS_JSON_OUT_HPP_
