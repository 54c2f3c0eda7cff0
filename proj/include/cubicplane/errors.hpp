// Copyright 2026 The cubicplane Authors
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

#ifndef CUBICPLANE_ERRORS_HPP
#define CUBICPLANE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubicplane {

/// Malformed text input: rep files, polynomial expressions, config strings.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return "parse error at column " + std::to_string(column) + ": " + msg;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + msg;
  }
  int line_;
  int column_;
};

/// The input is well formed but violates a mathematical hypothesis
/// (asymmetric matrix, non-nodal sextic, degenerate net of conics, ...).
class MathRejection : public std::runtime_error {
 public:
  MathRejection(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// Two independent computations disagree. Always a bug or a broken invariant.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A resultant was requested for a polynomial that does not involve the
/// elimination variable.
class DegenerateResultant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A system of equations expected to have finitely many projective solutions
/// has a common component.
class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubicplane

#endif  // CUBICPLANE_ERRORS_HPP
