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

#ifndef SHIFTCONS_UPDATE_OP_HPP_
#define SHIFTCONS_UPDATE_OP_HPP_

#include <compare>
#include <optional>
#include <string>

#include "shiftcons/word.hpp"

namespace shiftcons {

// A single-step register update. Shift operations carry an amount k;
// writes carry the full replacement word. Updates return nothing: a
// process learns about the register only through later reads.
class UpdateOp {
 public:
  enum class Kind {
    kLShift,         // x -> x l^k
    kRShiftLogical,  // x -> x r^k
    kRShiftArith,    // x -> x s^k
    kWrite,          // x -> v
  };

  static UpdateOp l_shift(int k);
  static UpdateOp r_shift_logical(int k);
  static UpdateOp r_shift_arith(int k);
  static UpdateOp write(Word value);

  Kind kind() const { return kind_; }
  bool is_shift() const { return kind_ != Kind::kWrite; }
  // Shift amount; only valid for shift kinds.
  int amount() const;
  // Written word; only valid for kWrite.
  const Word& value() const;

  // Textual form: "l^2", "r^1", "s^3", "w(100)".
  std::string str() const;
  // Parses the textual form. Shift amounts must be >= 1 here even
  // though the factories accept k = 0.
  static UpdateOp parse(const std::string& text, Alphabet alphabet);

  friend auto operator<=>(const UpdateOp&, const UpdateOp&) = default;

 private:
  UpdateOp(Kind kind, int amount, std::optional<Word> value)
      : kind_(kind), amount_(amount), value_(std::move(value)) {}

  Kind kind_;
  int amount_;
  std::optional<Word> value_;
};

// Applies one update to a register state, returning the new state.
// Write values must match the state's width and alphabet.
Word apply_op(const Word& state, const UpdateOp& op);

// Caps a shift amount at the width: shifting by more than w acts
// exactly like shifting by w on any width-w word. Only meaningful for
// shift variants; writes are rejected.
UpdateOp canonicalize(const UpdateOp& op, int width);

}  // namespace shiftcons

#endif  // SHIFTCONS_UPDATE_OP_HPP_
