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

// Test-only reference implementation of classical (scalar) SSA. Written
// with plain loops and its own cyclic Jacobi eigensolver so that it shares
// no code path with the library under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

struct Eigen {
  std::vector<double> values;          // descending
  std::vector<std::vector<double>> vectors;   // vectors[i] = eigenvector i
};

/// Cyclic Jacobi rotations until the off-diagonal mass vanishes.
inline Eigen jacobi_eigen(Matrix a) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  Eigen out;
  for (std::size_t idx : order) {
    out.values.push_back(a[idx][idx]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][idx];
    std::size_t arg = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(col[k]) > std::abs(col[arg])) arg = k;
    if (col[arg] < 0)
      for (auto& x : col) x = -x;
    out.vectors.push_back(col);
  }
  return out;
}

struct Ssa {
  std::size_t window = 0, k = 0;
  Matrix trajectory;              // L x K
  Eigen eig;
  std::vector<Matrix> elementary; // u u^T X
  std::vector<std::vector<double>> ercs;
};

inline Matrix gram(const Matrix& x) {
  const std::size_t l = x.size(), k = x[0].size();
  Matrix g(l, std::vector<double>(l, 0.0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t q = 0; q < k; ++q) g[i][j] += x[i][q] * x[j][q];
  return g;
}

inline std::vector<double> hankelize(const Matrix& m) {
  const std::size_t l = m.size(), k = m[0].size();
  std::vector<double> sum(l + k - 1, 0.0), count(l + k - 1, 0.0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      sum[i + j] += m[i][j];
      count[i + j] += 1.0;
    }
  for (std::size_t s = 0; s < sum.size(); ++s) sum[s] /= count[s];
  return sum;
}

inline Ssa classical_ssa(const std::vector<double>& x, std::size_t window, std::size_t components) {
  Ssa out;
  out.window = window;
  out.k = x.size() - window + 1;
  out.trajectory.assign(window, std::vector<double>(out.k));
  for (std::size_t i = 0; i < window; ++i)
    for (std::size_t j = 0; j < out.k; ++j) out.trajectory[i][j] = x[i + j];
  out.eig = jacobi_eigen(gram(out.trajectory));
  for (std::size_t c = 0; c < components; ++c) {
    const auto& u = out.eig.vectors[c];
    std::vector<double> w(out.k, 0.0);
    for (std::size_t j = 0; j < out.k; ++j)
      for (std::size_t i = 0; i < window; ++i) w[j] += u[i] * out.trajectory[i][j];
    Matrix e(window, std::vector<double>(out.k));
    for (std::size_t i = 0; i < window; ++i)
      for (std::size_t j = 0; j < out.k; ++j) e[i][j] = u[i] * w[j];
    out.ercs.push_back(hankelize(e));
    out.elementary.push_back(std::move(e));
  }
  return out;
}

/// Coefficients R with g_{t} = sum_{j=0}^{L-2} R_j g_{t-L+1+j} (chronological
/// order, oldest lag first).
inline std::vector<double> lrr(const Eigen& eig, std::size_t window, std::size_t m) {
  double nu2 = 0.0;
  std::vector<double> r(window - 1, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    const auto& u = eig.vectors[c];
    nu2 += u[window - 1] * u[window - 1];
    for (std::size_t j = 0; j + 1 < window; ++j) r[j] += u[window - 1] * u[j];
  }
  for (auto& v : r) v /= (1.0 - nu2);
  return r;
}

inline std::vector<double> recurrent_forecast(std::vector<double> series, const std::vector<double>& r,
                                              std::size_t horizon) {
  std::vector<double> out;
  for (std::size_t h = 0; h < horizon; ++h) {
    const std::size_t t = series.size();
    double v = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) v += r[j] * series[t - r.size() + j];
    series.push_back(v);
    out.push_back(v);
  }
  return out;
}

}  // namespace oracle
