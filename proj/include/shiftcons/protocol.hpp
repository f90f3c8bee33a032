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

#ifndef SHIFTCONS_PROTOCOL_HPP_
#define SHIFTCONS_PROTOCOL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftcons/shift_object.hpp"

namespace shiftcons {

// Consensus inputs are opaque values compared only for equality.
using Value = std::int64_t;

// Register slots and locals hold either an input's index or this
// marker for "nothing written yet".
constexpr int kEmptyValue = -1;

enum class TeamSide { kTeamA, kTeamB };

// kTeamB iff the word is all-null: the left-shifting process moved
// first and flushed the register; any other state means a right
// shifter moved first.
TeamSide classify_state(const Word& x);

// Where a written or decided value comes from.
struct ValueSource {
  enum class Kind { kOwnInput, kLayerSelect };

  Kind kind = Kind::kOwnInput;
  // kLayerSelect picks between two register reads according to the
  // classification of a previously read object word.
  int word_local = -1;
  int a_local = -1;
  int b_local = -1;

  static ValueSource own_input() { return ValueSource{}; }
  static ValueSource layer_select(int word_local, int a_local, int b_local) {
    return ValueSource{Kind::kLayerSelect, word_local, a_local, b_local};
  }
};

// One atomic step of a process program.
struct Step {
  enum class Kind {
    kWriteRegister,
    kApplyObject,
    kReadObject,
    kReadRegister,
    kDecide,
  };

  Kind kind = Kind::kDecide;
  int target = -1;             // register or object index
  std::optional<UpdateOp> op;  // kApplyObject only
  int local = -1;              // destination local slot for reads
  ValueSource source;          // kWriteRegister / kDecide

  static Step write_register(int reg, ValueSource source);
  static Step apply_object(int object, UpdateOp op);
  static Step read_object(int object, int word_local);
  static Step read_register(int reg, int reg_local);
  static Step decide(ValueSource source);
};

struct ObjectSpec {
  RegisterKind kind;
  Word initial;
};

struct ProcessProgram {
  int pid = 0;
  std::vector<Step> steps;
  int word_local_count = 0;
  int reg_local_count = 0;
};

// A complete straight-line shared-memory protocol. Wait-freedom is
// structural: each process takes exactly its program length in steps.
struct Protocol {
  int n = 0;
  std::vector<ObjectSpec> objects;
  int register_count = 0;
  std::vector<ProcessProgram> programs;  // programs[pid - 1]
  // Fault injection: these pids evaluate layer selections with the
  // classification flipped.
  std::vector<int> inverted_classify;

  Protocol with_inverted_classify(int pid) const;
  int total_steps() const;
};

// Structural checks: indices and locals in range, ops legal for their
// objects, exactly one Decide per program and only as the last step,
// and every object op preceded by a register write (a decider reading
// after any op must find a candidate value).
void validate_protocol(const Protocol& protocol);

// One round of team consensus over a single shift register initialized
// to 1 0^{w-1}. Processes 1..n-1 write their candidate to the a-side
// register and right shift (r on logical registers, s on arithmetic
// ones); process n writes to the b-side register and left shifts.
// Everyone reads the object and both registers, then decides the
// a-side value when the object is nonzero and the b-side value when it
// is null. Logical registers support 2 <= n <= width; arithmetic ones
// any n >= 2 once width >= 2. The a-side register takes one write per
// member of team A, so a standalone run needs those processes to carry
// the same candidate (the runtime asserts this).
Protocol build_team_consensus(int n, RegisterKind kind, int width);

// Full n-process consensus by layering team consensus: layer l (for
// l = 2..n) settles processes 1..l, with 1..l-1 carrying the layer
// l-1 outcome as team A and process l entering as team B with its own
// input. Uses n-1 objects and 2(n-1) registers. n = 1 decides its own
// input directly.
Protocol build_consensus(int n, RegisterKind kind, int width);

// What one step observed, for traces.
struct Event {
  int pid = 0;
  Step::Kind kind = Step::Kind::kDecide;
  int target = -1;
  std::optional<Word> object_state;
  std::optional<int> value_index;  // kEmptyValue for "nothing"
};

// A protocol run in progress: shared memory plus per-process program
// counters, locals, and decisions. Copyable so explorers can branch.
class ProtocolInstance {
 public:
  ProtocolInstance(const Protocol& protocol, std::vector<Value> inputs);

  int n() const { return protocol_->n; }
  const Protocol& protocol() const { return *protocol_; }
  const std::vector<Value>& inputs() const { return inputs_; }

  bool done(int pid) const;
  bool all_done() const;
  int pc(int pid) const;

  // Executes the next step of pid's program. Throws AlreadyDoneError
  // past the end and ProtocolAssertionError on conflicting register
  // writes, classification instability, or a second decision.
  Event step(int pid);

  // nullopt while undecided; kEmptyValue when the process decided a
  // never-written register's content (only broken protocols do that).
  std::optional<int> decision(int pid) const;
  const std::vector<std::optional<int>>& decisions() const {
    return decisions_;
  }
  const Word& object_state(int index) const;

  // Byte string identifying the full configuration: objects, their
  // locked classifications, registers, program counters, locals, and
  // decisions. Equal keys mean indistinguishable futures.
  std::string state_key() const;

 private:
  int resolve(int pid, const ValueSource& source) const;

  const Protocol* protocol_;
  std::vector<Value> inputs_;
  std::vector<Word> objects_;
  std::vector<std::optional<TeamSide>> locked_class_;
  std::vector<int> registers_;
  std::vector<int> pcs_;
  std::vector<std::vector<int>> reg_locals_;
  std::vector<std::vector<std::optional<Word>>> word_locals_;
  std::vector<std::optional<int>> decisions_;
};

}  // namespace shiftcons

#endif  // SHIFTCONS_PROTOCOL_HPP_
