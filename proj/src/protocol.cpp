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

#include "shiftcons/protocol.hpp"

#include <algorithm>

namespace shiftcons {

TeamSide classify_state(const Word& x) {
  return x.is_zero() ? TeamSide::kTeamB : TeamSide::kTeamA;
}

Step Step::write_register(int reg, ValueSource source) {
  Step step;
  step.kind = Kind::kWriteRegister;
  step.target = reg;
  step.source = source;
  return step;
}

Step Step::apply_object(int object, UpdateOp op) {
  Step step;
  step.kind = Kind::kApplyObject;
  step.target = object;
  step.op = std::move(op);
  return step;
}

Step Step::read_object(int object, int word_local) {
  Step step;
  step.kind = Kind::kReadObject;
  step.target = object;
  step.local = word_local;
  return step;
}

Step Step::read_register(int reg, int reg_local) {
  Step step;
  step.kind = Kind::kReadRegister;
  step.target = reg;
  step.local = reg_local;
  return step;
}

Step Step::decide(ValueSource source) {
  Step step;
  step.kind = Kind::kDecide;
  step.source = source;
  return step;
}

Protocol Protocol::with_inverted_classify(int pid) const {
  if (pid < 1 || pid > n) {
    throw OutOfRangeError("no process " + std::to_string(pid));
  }
  Protocol copy = *this;
  if (std::find(copy.inverted_classify.begin(), copy.inverted_classify.end(),
                pid) == copy.inverted_classify.end()) {
    copy.inverted_classify.push_back(pid);
  }
  return copy;
}

int Protocol::total_steps() const {
  int total = 0;
  for (const ProcessProgram& program : programs) {
    total += static_cast<int>(program.steps.size());
  }
  return total;
}

namespace {

void check_source(const ValueSource& source, const ProcessProgram& program) {
  if (source.kind == ValueSource::Kind::kOwnInput) return;
  if (source.word_local < 0 || source.word_local >= program.word_local_count ||
      source.a_local < 0 || source.a_local >= program.reg_local_count ||
      source.b_local < 0 || source.b_local >= program.reg_local_count) {
    throw OutOfRangeError("layer selection uses an unknown local");
  }
}

}  // namespace

void validate_protocol(const Protocol& protocol) {
  if (protocol.n < 1) throw OutOfRangeError("protocol needs a process");
  if (static_cast<int>(protocol.programs.size()) != protocol.n) {
    throw OutOfRangeError("one program per process required");
  }
  for (int pid = 1; pid <= protocol.n; ++pid) {
    const ProcessProgram& program = protocol.programs[pid - 1];
    if (program.pid != pid) {
      throw OutOfRangeError("program order does not match pids");
    }
    if (program.steps.empty()) {
      throw OutOfRangeError("empty program for process " +
                            std::to_string(pid));
    }
    bool saw_write = false;
    for (std::size_t i = 0; i < program.steps.size(); ++i) {
      const Step& step = program.steps[i];
      const bool last = i + 1 == program.steps.size();
      switch (step.kind) {
        case Step::Kind::kWriteRegister:
          if (step.target < 0 || step.target >= protocol.register_count) {
            throw OutOfRangeError("write to unknown register");
          }
          check_source(step.source, program);
          saw_write = true;
          break;
        case Step::Kind::kApplyObject: {
          if (step.target < 0 ||
              step.target >= static_cast<int>(protocol.objects.size())) {
            throw OutOfRangeError("update of unknown object");
          }
          if (!step.op) throw OutOfRangeError("object update without an op");
          const ObjectSpec& spec = protocol.objects[step.target];
          if (!op_legal_for(spec.kind, *step.op)) {
            throw IllegalVariantError("op " + step.op->str() +
                                      " not legal on object " +
                                      std::to_string(step.target));
          }
          if (!saw_write) {
            throw OutOfRangeError(
                "object op before any register write in process " +
                std::to_string(pid));
          }
          break;
        }
        case Step::Kind::kReadObject:
          if (step.target < 0 ||
              step.target >= static_cast<int>(protocol.objects.size())) {
            throw OutOfRangeError("read of unknown object");
          }
          if (step.local < 0 || step.local >= program.word_local_count) {
            throw OutOfRangeError("object read into unknown local");
          }
          break;
        case Step::Kind::kReadRegister:
          if (step.target < 0 || step.target >= protocol.register_count) {
            throw OutOfRangeError("read of unknown register");
          }
          if (step.local < 0 || step.local >= program.reg_local_count) {
            throw OutOfRangeError("register read into unknown local");
          }
          break;
        case Step::Kind::kDecide:
          if (!last) {
            throw OutOfRangeError("decision before the end of the program");
          }
          check_source(step.source, program);
          break;
      }
      if (last && step.kind != Step::Kind::kDecide) {
        throw OutOfRangeError("program does not end with a decision");
      }
    }
  }
  for (int pid : protocol.inverted_classify) {
    if (pid < 1 || pid > protocol.n) {
      throw OutOfRangeError("inverted classification for unknown process");
    }
  }
}

namespace {

Word layer_initial(int width) {
  std::vector<std::uint8_t> digits(width, 0);
  digits[0] = 1;
  return Word(Alphabet(2), std::move(digits));
}

void check_build_range(int n, RegisterKind kind, int width) {
  if (width < 1) throw OutOfRangeError("width must be at least 1");
  if (kind == RegisterKind::kLogical && n > width) {
    throw OutOfRangeError("logical registers support at most width=" +
                          std::to_string(width) + " processes, got n=" +
                          std::to_string(n));
  }
  if (kind == RegisterKind::kArithmetic && width < 2) {
    throw OutOfRangeError("arithmetic construction needs width >= 2");
  }
}

UpdateOp team_a_op(RegisterKind kind) {
  return kind == RegisterKind::kLogical ? UpdateOp::r_shift_logical(1)
                                        : UpdateOp::r_shift_arith(1);
}

// The five steps of one layer participation, using participation block
// `block` of the process's locals. reg_a and reg_b are the layer's
// registers; my_reg is the one this process writes.
void append_layer_block(std::vector<Step>& steps, int object, int reg_a,
                        int reg_b, int my_reg, ValueSource candidate,
                        const UpdateOp& op, int block) {
  steps.push_back(Step::write_register(my_reg, candidate));
  steps.push_back(Step::apply_object(object, op));
  steps.push_back(Step::read_object(object, block));
  steps.push_back(Step::read_register(reg_a, 2 * block));
  steps.push_back(Step::read_register(reg_b, 2 * block + 1));
}

ValueSource select_of_block(int block) {
  return ValueSource::layer_select(block, 2 * block, 2 * block + 1);
}

}  // namespace

Protocol build_team_consensus(int n, RegisterKind kind, int width) {
  if (n < 2) throw OutOfRangeError("team consensus needs two processes");
  check_build_range(n, kind, width);

  Protocol protocol;
  protocol.n = n;
  protocol.objects.push_back(ObjectSpec{kind, layer_initial(width)});
  protocol.register_count = 2;
  for (int pid = 1; pid <= n; ++pid) {
    ProcessProgram program;
    program.pid = pid;
    program.word_local_count = 1;
    program.reg_local_count = 2;
    const bool team_b = pid == n;
    append_layer_block(program.steps, 0, 0, 1, team_b ? 1 : 0,
                       ValueSource::own_input(),
                       team_b ? UpdateOp::l_shift(1) : team_a_op(kind), 0);
    program.steps.push_back(Step::decide(select_of_block(0)));
    protocol.programs.push_back(std::move(program));
  }
  validate_protocol(protocol);
  return protocol;
}

Protocol build_consensus(int n, RegisterKind kind, int width) {
  if (n < 1) throw OutOfRangeError("need at least one process");
  if (n == 1) {
    Protocol protocol;
    protocol.n = 1;
    ProcessProgram program;
    program.pid = 1;
    program.steps.push_back(Step::decide(ValueSource::own_input()));
    protocol.programs.push_back(std::move(program));
    validate_protocol(protocol);
    return protocol;
  }
  check_build_range(n, kind, width);

  Protocol protocol;
  protocol.n = n;
  protocol.register_count = 2 * (n - 1);
  for (int layer = 2; layer <= n; ++layer) {
    protocol.objects.push_back(ObjectSpec{kind, layer_initial(width)});
  }
  const auto object_of = [](int layer) { return layer - 2; };
  const auto reg_a_of = [](int layer) { return 2 * (layer - 2); };
  const auto reg_b_of = [](int layer) { return 2 * (layer - 2) + 1; };

  for (int pid = 1; pid <= n; ++pid) {
    ProcessProgram program;
    program.pid = pid;
    const int first_layer = pid == 1 ? 2 : pid;
    program.word_local_count = n - first_layer + 1;
    program.reg_local_count = 2 * program.word_local_count;
    for (int layer = first_layer; layer <= n; ++layer) {
      const int block = layer - first_layer;
      const bool team_b = pid == layer && pid != 1;
      const ValueSource candidate =
          block == 0 ? ValueSource::own_input() : select_of_block(block - 1);
      append_layer_block(program.steps, object_of(layer), reg_a_of(layer),
                         reg_b_of(layer),
                         team_b ? reg_b_of(layer) : reg_a_of(layer), candidate,
                         team_b ? UpdateOp::l_shift(1) : team_a_op(kind),
                         block);
    }
    program.steps.push_back(
        Step::decide(select_of_block(n - first_layer)));
    protocol.programs.push_back(std::move(program));
  }
  validate_protocol(protocol);
  return protocol;
}

ProtocolInstance::ProtocolInstance(const Protocol& protocol,
                                   std::vector<Value> inputs)
    : protocol_(&protocol), inputs_(std::move(inputs)) {
  validate_protocol(protocol);
  if (static_cast<int>(inputs_.size()) != protocol.n) {
    throw OutOfRangeError("expected " + std::to_string(protocol.n) +
                          " inputs, got " + std::to_string(inputs_.size()));
  }
  for (const ObjectSpec& spec : protocol.objects) {
    objects_.push_back(spec.initial);
  }
  locked_class_.resize(protocol.objects.size());
  registers_.assign(protocol.register_count, kEmptyValue);
  pcs_.assign(protocol.n, 0);
  decisions_.resize(protocol.n);
  for (const ProcessProgram& program : protocol.programs) {
    reg_locals_.emplace_back(program.reg_local_count, kEmptyValue);
    word_locals_.emplace_back(program.word_local_count);
  }
}

bool ProtocolInstance::done(int pid) const {
  return pc(pid) >=
         static_cast<int>(protocol_->programs[pid - 1].steps.size());
}

bool ProtocolInstance::all_done() const {
  for (int pid = 1; pid <= protocol_->n; ++pid) {
    if (!done(pid)) return false;
  }
  return true;
}

int ProtocolInstance::pc(int pid) const {
  if (pid < 1 || pid > protocol_->n) {
    throw OutOfRangeError("no process " + std::to_string(pid));
  }
  return pcs_[pid - 1];
}

std::optional<int> ProtocolInstance::decision(int pid) const {
  if (pid < 1 || pid > protocol_->n) {
    throw OutOfRangeError("no process " + std::to_string(pid));
  }
  return decisions_[pid - 1];
}

const Word& ProtocolInstance::object_state(int index) const {
  if (index < 0 || index >= static_cast<int>(objects_.size())) {
    throw OutOfRangeError("no object " + std::to_string(index));
  }
  return objects_[index];
}

int ProtocolInstance::resolve(int pid, const ValueSource& source) const {
  if (source.kind == ValueSource::Kind::kOwnInput) return pid - 1;
  const auto& word = word_locals_[pid - 1][source.word_local];
  if (!word) {
    throw ProtocolAssertionError("layer selection before the object read");
  }
  TeamSide side = classify_state(*word);
  if (std::find(protocol_->inverted_classify.begin(),
                protocol_->inverted_classify.end(),
                pid) != protocol_->inverted_classify.end()) {
    side = side == TeamSide::kTeamA ? TeamSide::kTeamB : TeamSide::kTeamA;
  }
  return side == TeamSide::kTeamA ? reg_locals_[pid - 1][source.a_local]
                                  : reg_locals_[pid - 1][source.b_local];
}

Event ProtocolInstance::step(int pid) {
  if (done(pid)) {
    throw AlreadyDoneError("process " + std::to_string(pid) +
                           " already finished its program");
  }
  const Step& step = protocol_->programs[pid - 1].steps[pcs_[pid - 1]];
  Event event;
  event.pid = pid;
  event.kind = step.kind;
  event.target = step.target;

  switch (step.kind) {
    case Step::Kind::kWriteRegister: {
      const int value = resolve(pid, step.source);
      int& slot = registers_[step.target];
      if (slot != kEmptyValue &&
          (value == kEmptyValue || inputs_[slot] != inputs_[value])) {
        throw ProtocolAssertionError(
            "register " + std::to_string(step.target) +
            " rewritten with a different value by process " +
            std::to_string(pid));
      }
      slot = value;
      event.value_index = value;
      break;
    }
    case Step::Kind::kApplyObject: {
      Word& state = objects_[step.target];
      if (!op_legal_for(protocol_->objects[step.target].kind, *step.op)) {
        throw IllegalVariantError("illegal op for object");
      }
      state = apply_op(state, *step.op);
      const TeamSide side = classify_state(state);
      auto& lock = locked_class_[step.target];
      if (!lock) {
        lock = side;
      } else if (*lock != side) {
        throw ProtocolAssertionError(
            "object " + std::to_string(step.target) +
            " changed classification after the first op");
      }
      event.object_state = state;
      break;
    }
    case Step::Kind::kReadObject:
      word_locals_[pid - 1][step.local] = objects_[step.target];
      event.object_state = objects_[step.target];
      break;
    case Step::Kind::kReadRegister:
      reg_locals_[pid - 1][step.local] = registers_[step.target];
      event.value_index = registers_[step.target];
      break;
    case Step::Kind::kDecide: {
      if (decisions_[pid - 1]) {
        throw ProtocolAssertionError("process " + std::to_string(pid) +
                                     " decided twice");
      }
      const int value = resolve(pid, step.source);
      decisions_[pid - 1] = value;
      event.value_index = value;
      break;
    }
  }
  ++pcs_[pid - 1];
  return event;
}

std::string ProtocolInstance::state_key() const {
  std::string key;
  const auto put = [&key](int v) {
    key.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  };
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    for (std::uint8_t d : objects_[i].digits()) put(d);
    put(locked_class_[i] ? (*locked_class_[i] == TeamSide::kTeamA ? 1 : 2)
                         : 0);
  }
  for (int r : registers_) put(r + 2);
  for (int p : pcs_) put(p);
  for (std::size_t pid = 0; pid < reg_locals_.size(); ++pid) {
    for (int r : reg_locals_[pid]) put(r + 2);
    for (const auto& word : word_locals_[pid]) {
      // Length-prefixed so the whole key stays uniquely decodable.
      if (!word) {
        put(255);
      } else {
        put(word->width());
        for (std::uint8_t d : word->digits()) put(d);
      }
    }
  }
  for (const auto& decision : decisions_) {
    put(decision ? *decision + 2 : 0);
  }
  return key;
}

}  // namespace shiftcons
