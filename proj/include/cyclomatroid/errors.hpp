// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOMATROID_ERRORS_HPP_
#define CYCLOMATROID_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclomatroid {

// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem-level precondition (usually a rank bound) does not hold.
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by contract() when the contracted set is not closed.
class NotAFlatError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(Format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
};

// Something that a theorem guarantees did not happen. For representable input
// this always means a bug in the toolkit.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t closures, std::uint64_t flats)
      : std::runtime_error("work budget exceeded after " +
                           std::to_string(closures) + " closure computations"),
        closures_(closures),
        flats_(flats) {}

  std::uint64_t closures() const { return closures_; }
  std::uint64_t flats_enumerated() const { return flats_; }

 private:
  std::uint64_t closures_;
  std::uint64_t flats_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_ERRORS_HPP_
