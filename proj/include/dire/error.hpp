// Copyright 2026 The dire Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dire {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the 1-based line number and offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& message)
      : Error(Format(line, token, message)),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  static std::string Format(std::size_t line, const std::string& token,
                            const std::string& message) {
    std::string out = "line " + std::to_string(line) + ": " + message;
    if (!token.empty()) out += " (at '" + token + "')";
    return out;
  }

  std::size_t line_;
  std::string token_;
};

// Arguments that violate an operation's precondition: wrong committee size,
// unknown candidate, unsupported reduction parameters and so on.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the search space is above the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dire
