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

#ifndef SHIFTCONS_SHIFT_OBJECT_HPP_
#define SHIFTCONS_SHIFT_OBJECT_HPP_

#include <string>

#include "shiftcons/update_op.hpp"

namespace shiftcons {

// Which right-shift flavour a register supports. A logical register
// offers l and r updates; an arithmetic register offers l and s.
// Writes are legal on both.
enum class RegisterKind {
  kLogical,
  kArithmetic,
};

std::string register_kind_str(RegisterKind kind);
RegisterKind parse_register_kind(const std::string& text);

// True when `op` may be applied to a register of the given kind.
bool op_legal_for(RegisterKind kind, const UpdateOp& op);

// A shared shift register: a fixed-width word plus the kind that
// selects the available update set. Reads return the whole word;
// updates return nothing.
class ShiftObject {
 public:
  ShiftObject(RegisterKind kind, Word initial);

  RegisterKind kind() const { return kind_; }
  int width() const { return state_.width(); }
  const Word& read() const { return state_; }

  // Applies one legal update in place. Illegal updates for this kind
  // throw IllegalVariantError; mismatched write widths throw
  // WidthMismatchError.
  void apply(const UpdateOp& op);

  void reset(Word state);

 private:
  RegisterKind kind_;
  Word state_;
};

}  // namespace shiftcons

#endif  // SHIFTCONS_SHIFT_OBJECT_HPP_
