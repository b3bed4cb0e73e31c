/*
    Copyright 2026 The corrforms Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corrforms {

/// Classifies every mathematical precondition failure the library reports.
enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  NotPLocalUnit,
  WildInput,
  Inseparable,
  WildRamification,
  NormalizationRequired,
  UnsupportedEqualDegrees,
  DegreeOrder,
  NotSemiInvariant,
  HypothesisNotMet,
  UnsupportedCharacteristic,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// A violated mathematical precondition. Never thrown for malformed text.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed textual input (rational literals, input documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace corrforms
