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

#include "shiftcons/shift_object.hpp"

namespace shiftcons {

std::string register_kind_str(RegisterKind kind) {
  switch (kind) {
    case RegisterKind::kLogical:
      return "logical";
    case RegisterKind::kArithmetic:
      return "arithmetic";
  }
  throw IllegalVariantError("bad register kind");
}

RegisterKind parse_register_kind(const std::string& text) {
  if (text == "logical") return RegisterKind::kLogical;
  if (text == "arithmetic") return RegisterKind::kArithmetic;
  throw ParseError("bad register kind \"" + text + "\"");
}

bool op_legal_for(RegisterKind kind, const UpdateOp& op) {
  switch (op.kind()) {
    case UpdateOp::Kind::kLShift:
    case UpdateOp::Kind::kWrite:
      return true;
    case UpdateOp::Kind::kRShiftLogical:
      return kind == RegisterKind::kLogical;
    case UpdateOp::Kind::kRShiftArith:
      return kind == RegisterKind::kArithmetic;
  }
  return false;
}

ShiftObject::ShiftObject(RegisterKind kind, Word initial)
    : kind_(kind), state_(std::move(initial)) {}

void ShiftObject::apply(const UpdateOp& op) {
  if (!op_legal_for(kind_, op)) {
    throw IllegalVariantError("update " + op.str() + " not legal on a " +
                              register_kind_str(kind_) + " register");
  }
  state_ = apply_op(state_, op);
}

void ShiftObject::reset(Word state) {
  if (state.width() != state_.width() ||
      state.alphabet() != state_.alphabet()) {
    throw WidthMismatchError("reset state does not match register shape");
  }
  state_ = std::move(state);
}

}  // namespace shiftcons
