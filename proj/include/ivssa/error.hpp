// Copyright 2026 The ivssa Authors.
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

namespace ivssa {

/// Error classes raised by the library. Each maps onto one CLI exit code
/// through exit_code().
enum class ErrorKind {
  kParse,              // malformed input file
  kInvalidValue,       // non-finite number, lo > hi
  kShape,              // dimension or length mismatch
  kParameter,          // argument out of its valid range
  kVerticality,        // ||pi||^2 >= 1, recurrence undefined
  kDegenerateSpectrum, // zero residual power
  kInvalidInput,       // e.g. non-symmetric covariance
  kConfig,             // inconsistent run configuration
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

/// 2 parse, 3 validation, 4 numerical, 5 config.
int exit_code(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ivssa
