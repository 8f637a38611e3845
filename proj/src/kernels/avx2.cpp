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

// Built with -mavx2 -mfma; only reached after the dispatcher has checked
// the CPU flags.

#include <immintrin.h>

#include "ivssa/kernels.hpp"

namespace ivssa::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double pair_form(const double* x, const double* y, std::size_t pairs) {
  // Two pairs per register: x = (a0, b0, a1, b1), y = (c0, d0, c1, d1).
  // x * y accumulates (a c, b d); x * swap(y) accumulates (a d, b c).
  __m256d same0 = _mm256_setzero_pd(), cross0 = _mm256_setzero_pd();
  __m256d same1 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  const std::size_t n = 2 * pairs;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(x + i);
    const __m256d y0 = _mm256_loadu_pd(y + i);
    const __m256d x1 = _mm256_loadu_pd(x + i + 4);
    const __m256d y1 = _mm256_loadu_pd(y + i + 4);
    same0 = _mm256_fmadd_pd(x0, y0, same0);
    cross0 = _mm256_fmadd_pd(x0, _mm256_permute_pd(y0, 0b0101), cross0);
    same1 = _mm256_fmadd_pd(x1, y1, same1);
    cross1 = _mm256_fmadd_pd(x1, _mm256_permute_pd(y1, 0b0101), cross1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(x + i);
    const __m256d y0 = _mm256_loadu_pd(y + i);
    same0 = _mm256_fmadd_pd(x0, y0, same0);
    cross0 = _mm256_fmadd_pd(x0, _mm256_permute_pd(y0, 0b0101), cross0);
  }
  double same = hsum(_mm256_add_pd(same0, same1));
  double cross = hsum(_mm256_add_pd(cross0, cross1));
  for (; i < n; i += 2) {
    same += x[i] * y[i] + x[i + 1] * y[i + 1];
    cross += x[i] * y[i + 1] + x[i + 1] * y[i];
  }
  return 2.0 * same + cross;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace ivssa::kernels::avx2
