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

#include "shiftcons/word.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace shiftcons {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2 || size > 256) {
    throw OutOfRangeError("alphabet size must be in [2, 256], got " +
                          std::to_string(size));
  }
}

Word::Word(Alphabet alphabet, std::vector<std::uint8_t> digits_msb_first)
    : alphabet_(alphabet), digits_(std::move(digits_msb_first)) {
  if (digits_.empty()) {
    throw OutOfRangeError("word width must be positive");
  }
  for (std::uint8_t d : digits_) {
    if (d >= alphabet_.size()) {
      throw OutOfRangeError("digit " + std::to_string(d) +
                            " out of range for alphabet of size " +
                            std::to_string(alphabet_.size()));
    }
  }
}

Word Word::zeros(Alphabet alphabet, int width) {
  if (width <= 0) {
    throw OutOfRangeError("word width must be positive");
  }
  return Word(alphabet, std::vector<std::uint8_t>(width, 0));
}

bool Word::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](std::uint8_t d) { return d == 0; });
}

std::string Word::str() const {
  std::ostringstream out;
  if (sigma() <= 10) {
    for (std::uint8_t d : digits_) out << static_cast<int>(d);
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i > 0) out << ',';
      out << static_cast<int>(digits_[i]);
    }
  }
  return out.str();
}

Word Word::parse(const std::string& text, Alphabet alphabet) {
  if (text.empty()) {
    throw ParseError("empty word");
  }
  std::vector<std::uint8_t> digits;
  if (alphabet.size() <= 10) {
    digits.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("bad digit '") + c + "' in word \"" +
                         text + "\"");
      }
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      int value;
      try {
        std::size_t pos = 0;
        value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError("bad digit \"" + item + "\" in word \"" + text +
                         "\"");
      }
      if (value < 0 || value > 255) {
        throw ParseError("digit " + item + " out of byte range");
      }
      digits.push_back(static_cast<std::uint8_t>(value));
    }
    if (digits.empty()) {
      throw ParseError("empty word");
    }
  }
  for (std::uint8_t d : digits) {
    if (d >= alphabet.size()) {
      throw ParseError("digit " + std::to_string(d) +
                       " out of range for alphabet of size " +
                       std::to_string(alphabet.size()));
    }
  }
  return Word(alphabet, std::move(digits));
}

namespace {

void check_shift_amount(int k) {
  if (k < 0) {
    throw OutOfRangeError("shift amount must be non-negative, got " +
                          std::to_string(k));
  }
}

}  // namespace

Word lshift(const Word& x, int k) {
  check_shift_amount(k);
  const int w = x.width();
  std::vector<std::uint8_t> out(w, 0);
  for (int p = 0; p + k < w; ++p) {
    out[p] = x.digits()[p + k];
  }
  return Word(x.alphabet(), std::move(out));
}

Word rshift_logical(const Word& x, int k) {
  check_shift_amount(k);
  const int w = x.width();
  std::vector<std::uint8_t> out(w, 0);
  for (int p = k; p < w; ++p) {
    out[p] = x.digits()[p - k];
  }
  return Word(x.alphabet(), std::move(out));
}

Word rshift_arith(const Word& x, int k) {
  check_shift_amount(k);
  const int w = x.width();
  const std::uint8_t fill = x.msb();
  std::vector<std::uint8_t> out(w, fill);
  for (int p = k; p < w; ++p) {
    out[p] = x.digits()[p - k];
  }
  return Word(x.alphabet(), std::move(out));
}

std::optional<std::uint64_t> state_space_size(Alphabet alphabet, int width) {
  const std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t total = 1;
  for (int i = 0; i < width; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(alphabet.size());
    if (total > (limit - 1) / base) return std::nullopt;
    total *= base;
  }
  return total;
}

std::uint64_t word_code(const Word& x) {
  if (!state_space_size(x.alphabet(), x.width())) {
    throw OutOfRangeError("state space too large for word codes");
  }
  std::uint64_t code = 0;
  for (std::uint8_t d : x.digits()) {
    code = code * static_cast<std::uint64_t>(x.sigma()) + d;
  }
  return code;
}

Word word_from_code(std::uint64_t code, Alphabet alphabet, int width) {
  auto total = state_space_size(alphabet, width);
  if (!total) {
    throw OutOfRangeError("state space too large for word codes");
  }
  if (code >= *total) {
    throw OutOfRangeError("word code " + std::to_string(code) +
                          " out of range");
  }
  std::vector<std::uint8_t> digits(width, 0);
  for (int p = width - 1; p >= 0; --p) {
    digits[p] = static_cast<std::uint8_t>(code %
                                          static_cast<std::uint64_t>(
                                              alphabet.size()));
    code /= static_cast<std::uint64_t>(alphabet.size());
  }
  return Word(alphabet, std::move(digits));
}

}  // namespace shiftcons
