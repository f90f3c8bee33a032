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

#include "shiftcons/update_op.hpp"

#include <algorithm>

namespace shiftcons {

namespace {

UpdateOp make_shift(UpdateOp::Kind kind, int k) {
  if (k < 0) {
    throw OutOfRangeError("shift amount must be non-negative, got " +
                          std::to_string(k));
  }
  switch (kind) {
    case UpdateOp::Kind::kLShift:
      return UpdateOp::l_shift(k);
    case UpdateOp::Kind::kRShiftLogical:
      return UpdateOp::r_shift_logical(k);
    case UpdateOp::Kind::kRShiftArith:
      return UpdateOp::r_shift_arith(k);
    default:
      throw IllegalVariantError("not a shift kind");
  }
}

}  // namespace

UpdateOp UpdateOp::l_shift(int k) {
  if (k < 0) throw OutOfRangeError("shift amount must be non-negative");
  return UpdateOp(Kind::kLShift, k, std::nullopt);
}

UpdateOp UpdateOp::r_shift_logical(int k) {
  if (k < 0) throw OutOfRangeError("shift amount must be non-negative");
  return UpdateOp(Kind::kRShiftLogical, k, std::nullopt);
}

UpdateOp UpdateOp::r_shift_arith(int k) {
  if (k < 0) throw OutOfRangeError("shift amount must be non-negative");
  return UpdateOp(Kind::kRShiftArith, k, std::nullopt);
}

UpdateOp UpdateOp::write(Word value) {
  return UpdateOp(Kind::kWrite, 0, std::move(value));
}

int UpdateOp::amount() const {
  if (kind_ == Kind::kWrite) {
    throw IllegalVariantError("write updates have no shift amount");
  }
  return amount_;
}

const Word& UpdateOp::value() const {
  if (kind_ != Kind::kWrite) {
    throw IllegalVariantError("shift updates carry no word");
  }
  return *value_;
}

std::string UpdateOp::str() const {
  switch (kind_) {
    case Kind::kLShift:
      return "l^" + std::to_string(amount_);
    case Kind::kRShiftLogical:
      return "r^" + std::to_string(amount_);
    case Kind::kRShiftArith:
      return "s^" + std::to_string(amount_);
    case Kind::kWrite:
      return "w(" + value_->str() + ")";
  }
  throw IllegalVariantError("bad update kind");
}

UpdateOp UpdateOp::parse(const std::string& text, Alphabet alphabet) {
  if (text.size() >= 3 && text.compare(0, 2, "w(") == 0 &&
      text.back() == ')') {
    return write(Word::parse(text.substr(2, text.size() - 3), alphabet));
  }
  if (text.size() >= 3 && text[1] == '^') {
    Kind kind;
    switch (text[0]) {
      case 'l':
        kind = Kind::kLShift;
        break;
      case 'r':
        kind = Kind::kRShiftLogical;
        break;
      case 's':
        kind = Kind::kRShiftArith;
        break;
      default:
        throw ParseError("bad update \"" + text + "\"");
    }
    int k;
    try {
      std::size_t pos = 0;
      k = std::stoi(text.substr(2), &pos);
      if (pos != text.size() - 2) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ParseError("bad shift amount in \"" + text + "\"");
    }
    if (k < 1) {
      throw ParseError("shift amount must be >= 1 in \"" + text + "\"");
    }
    return make_shift(kind, k);
  }
  throw ParseError("bad update \"" + text + "\"");
}

UpdateOp canonicalize(const UpdateOp& op, int width) {
  if (!op.is_shift()) {
    throw IllegalVariantError("canonicalize applies to shift updates only");
  }
  if (width < 1) {
    throw OutOfRangeError("width must be positive");
  }
  return make_shift(op.kind(), std::min(op.amount(), width));
}

Word apply_op(const Word& state, const UpdateOp& op) {
  switch (op.kind()) {
    case UpdateOp::Kind::kLShift:
      return lshift(state, op.amount());
    case UpdateOp::Kind::kRShiftLogical:
      return rshift_logical(state, op.amount());
    case UpdateOp::Kind::kRShiftArith:
      return rshift_arith(state, op.amount());
    case UpdateOp::Kind::kWrite: {
      const Word& v = op.value();
      if (v.width() != state.width()) {
        throw WidthMismatchError("write of width " +
                                 std::to_string(v.width()) +
                                 " into register of width " +
                                 std::to_string(state.width()));
      }
      if (v.alphabet() != state.alphabet()) {
        throw WidthMismatchError("write alphabet does not match register");
      }
      return v;
    }
  }
  throw IllegalVariantError("bad update kind");
}

}  // namespace shiftcons
