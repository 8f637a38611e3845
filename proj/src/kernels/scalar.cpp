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

#include "ivssa/kernels.hpp"

namespace ivssa::kernels::scalar {

double pair_form(const double* x, const double* y, std::size_t pairs) {
  double same = 0.0;   // a c + b d
  double cross = 0.0;  // a d + b c
  for (std::size_t q = 0; q < pairs; ++q) {
    const double a = x[2 * q], b = x[2 * q + 1];
    const double c = y[2 * q], d = y[2 * q + 1];
    same += a * c + b * d;
    cross += a * d + b * c;
  }
  return 2.0 * same + cross;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace ivssa::kernels::scalar
