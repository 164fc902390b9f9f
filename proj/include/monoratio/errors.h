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

#ifndef MONORATIO_ERRORS_H_
#define MONORATIO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace monoratio {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input too large for an exhaustive / exact routine.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// No feasible object (e.g. a base avoiding an excluded set) exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. The message carries the offending line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The LP sub-solver failed; the message includes the iteration trace.
class LpError : public Error {
 public:
  using Error::Error;
};

// Unknown identifier or out-of-range parameter in a user-facing request.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace monoratio

#endif  // MONORATIO_ERRORS_H_
