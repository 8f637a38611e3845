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

#include <arm_neon.h>

#include "ivssa/kernels.hpp"

namespace ivssa::kernels::neon {

double pair_form(const double* x, const double* y, std::size_t pairs) {
  // One pair per register: x * y -> (a c, b d); x * swap(y) -> (a d, b c).
  float64x2_t same = vdupq_n_f64(0.0);
  float64x2_t cross = vdupq_n_f64(0.0);
  for (std::size_t q = 0; q < pairs; ++q) {
    const float64x2_t vx = vld1q_f64(x + 2 * q);
    const float64x2_t vy = vld1q_f64(y + 2 * q);
    same = vfmaq_f64(same, vx, vy);
    cross = vfmaq_f64(cross, vx, vextq_f64(vy, vy, 1));
  }
  return 2.0 * vaddvq_f64(same) + vaddvq_f64(cross);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace ivssa::kernels::neon
