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

#include <cstddef>
#include <vector>

#include "ivssa/decomposition.hpp"
#include "ivssa/interval.hpp"

namespace ivssa {

/// e_t = phi(a_t - a~_t, b_t - b~_t). Throws kShape on length mismatch.
IntervalSeries interval_residuals(const IntervalSeries& y, const IntervalSeries& ytilde);

/// gamma_e(h) = 1/(6n) sum_{t < n-h} [2 L_t L_{t+h} + L_t U_{t+h} + U_t L_{t+h} + 2 U_t U_{t+h}]
/// with no mean correction. Requires 0 <= h <= n - 1.
double autocov(const IntervalSeries& e, std::size_t lag);

struct PeriodogramOptions {
  /// Subtract the endpoint means before the autocovariances.
  bool center = false;
};

struct PeriodogramResult {
  std::size_t n = 0;
  std::size_t harmonics = 0;          // J = floor((n - 1) / 2)
  std::vector<double> frequencies;    // omega_j = 2 pi j / n, j = 1..J
  std::vector<double> ordinates;      // f(omega_j), clipped at 0
  std::vector<double> cumulative;     // C(omega_j)
  double ks_stat = 0.0;               // sqrt(J) max_j |C(omega_j) - j/J|
  std::size_t clipped = 0;            // ordinates raised from < 0 to 0
};

/// Interval periodogram at the Fourier frequencies and its cumulative
/// Kolmogorov-Smirnov statistic. Requires n >= 4. Zero total power raises
/// kDegenerateSpectrum (a perfect fit).
PeriodogramResult periodogram(const IntervalSeries& e, const PeriodogramOptions& options = {});

/// Asymptotic Kolmogorov critical value c with P(K > c) = alpha, so
/// ks_critical_value(0.05) = 1.358.
double ks_critical_value(double alpha);

struct SelectionOptions {
  double alpha = 0.05;
  /// Upper bound on m; 0 means min(d, 40).
  std::size_t max_m = 0;
  PeriodogramOptions periodogram;
  /// Residual power at or below this fraction of the data power counts as
  /// a perfect fit and accepts white noise.
  double perfect_fit_ratio = 1e-20;
};

struct SelectionResult {
  std::size_t m = 0;
  bool converged = false;
  double critical_value = 0.0;
  std::vector<double> ks_trace;   // ks statistic for i = 1..m
  std::size_t clipped = 0;        // clip events over the scan
};

/// Targeted grouping: adds components i = 1, 2, ... until the cumulative
/// periodogram of e = phi(y - y~) passes the KS white-noise test.
SelectionResult select_components(const Decomposition& dec, const IntervalSeries& y,
                                  std::size_t series_index, const SelectionOptions& options = {});

SelectionResult select_components(const IntervalSeries& y, std::size_t window,
                                  const SelectionOptions& options = {});

}  // namespace ivssa
