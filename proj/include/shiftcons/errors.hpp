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

#ifndef SHIFTCONS_ERRORS_HPP_
#define SHIFTCONS_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shiftcons {

// Base class for all shiftcons errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A Write value (or similar word argument) has the wrong width or alphabet.
class WidthMismatchError : public Error {
 public:
  using Error::Error;
};

// An update operation was applied to a register class that does not
// support it (arithmetic shift on a logical register or vice versa).
class IllegalVariantError : public Error {
 public:
  using Error::Error;
};

// A numeric argument is outside its documented range.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Textual input (word, operation, config file, ...) failed to parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A schedule does not respect the program lengths of the protocol.
class MalformedScheduleError : public Error {
 public:
  using Error::Error;
};

// A process was asked to step after its program finished.
class AlreadyDoneError : public Error {
 public:
  using Error::Error;
};

// A runtime assertion of the protocol machinery failed (conflicting
// register writes, classification instability, double decision).
class ProtocolAssertionError : public Error {
 public:
  using Error::Error;
};

// A search or exploration hit its node budget before resolving.
// Carries how many nodes were evaluated up to that point.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_(nodes) {}

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace shiftcons

#endif  // SHIFTCONS_ERRORS_HPP_
