// Copyright 2026 The lcnns Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lcnns {

/// Caller supplied something that violates an operation's precondition
/// (bad index, malformed file, unknown architecture, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that failed to parse. Carries a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column = 0)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string pos = "line " + std::to_string(line);
    if (column > 0) pos += ", column " + std::to_string(column);
    return pos + ": " + what;
  }

  int line_;
  int column_;
};

/// An internal invariant failed. Seeing one of these is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcnns
