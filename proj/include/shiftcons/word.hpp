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

#ifndef SHIFTCONS_WORD_HPP_
#define SHIFTCONS_WORD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftcons/errors.hpp"

namespace shiftcons {

// Symbol alphabet for register digits. Symbols are the integers
// 0..size-1; symbol 0 is the null symbol.
class Alphabet {
 public:
  // size must be in [2, 256]: at least one non-null symbol, and digits
  // must fit in a byte.
  explicit Alphabet(int size);

  int size() const { return size_; }

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

// A fixed-width string of digits x_{w-1} ... x_0 over an alphabet.
// Immutable value type; width never changes under any operation.
class Word {
 public:
  // digits are given in reading order, most significant first.
  Word(Alphabet alphabet, std::vector<std::uint8_t> digits_msb_first);

  static Word zeros(Alphabet alphabet, int width);

  int width() const { return static_cast<int>(digits_.size()); }
  Alphabet alphabet() const { return alphabet_; }
  int sigma() const { return alphabet_.size(); }

  // Digit x_i; index 0 is the least significant (rightmost) digit.
  std::uint8_t digit(int i) const { return digits_[digits_.size() - 1 - i]; }
  // The most significant digit x_{w-1}.
  std::uint8_t msb() const { return digits_.front(); }
  bool is_zero() const;

  // Digits in reading order, most significant first.
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  // Textual form: digits most-significant-first, no separator for
  // sigma <= 10 ("100"), comma-separated otherwise ("12,0,3").
  std::string str() const;
  static Word parse(const std::string& text, Alphabet alphabet);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> digits_;
};

// Left shift: x l^k = x_{w-k-1} ... x_0 0^k. k >= w yields the all-null
// word; k = 0 is the identity. k < 0 is rejected.
Word lshift(const Word& x, int k);

// Logical right shift: x r^k = 0^k x_{w-1} ... x_k.
Word rshift_logical(const Word& x, int k);

// Arithmetic right shift: x s^k = x_{w-1}^k x_{w-1} ... x_k. The most
// significant digit is replicated into the vacated positions.
Word rshift_arith(const Word& x, int k);

// Number of width-`width` words over `alphabet`, if it fits in 63 bits.
std::optional<std::uint64_t> state_space_size(Alphabet alphabet, int width);

// Base-sigma value of the word, most significant digit first. This
// matches the lexicographic order of the textual form. Throws
// OutOfRangeError when sigma^width does not fit in 63 bits.
std::uint64_t word_code(const Word& x);
Word word_from_code(std::uint64_t code, Alphabet alphabet, int width);

}  // namespace shiftcons

#endif  // SHIFTCONS_WORD_HPP_
