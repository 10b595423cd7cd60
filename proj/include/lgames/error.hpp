// Copyright 2026 The lgames Authors
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

#ifndef LGAMES_ERROR_HPP_
#define LGAMES_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgames {

// Malformed input: bad syntax, unknown identifiers, malformed files, bad
// parameters. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a semantic precondition (value outside an
// algebra's domain, constructor preconditions, ...). The CLI maps these to
// exit code 3.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lgames

#endif  // LGAMES_ERROR_HPP_
