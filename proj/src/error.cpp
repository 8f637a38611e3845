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

#include "ivssa/error.hpp"

namespace ivssa {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInvalidValue: return "invalid-value";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kVerticality: return "verticality";
    case ErrorKind::kDegenerateSpectrum: return "degenerate-spectrum";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kConfig: return "config";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse: return 2;
    case ErrorKind::kInvalidValue:
    case ErrorKind::kShape: return 3;
    case ErrorKind::kVerticality:
    case ErrorKind::kDegenerateSpectrum:
    case ErrorKind::kInvalidInput: return 4;
    case ErrorKind::kParameter:
    case ErrorKind::kConfig: return 5;
  }
  return 1;
}

}  // namespace ivssa
