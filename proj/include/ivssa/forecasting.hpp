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
#include <limits>
#include <vector>

#include "ivssa/decomposition.hpp"
#include "ivssa/interval.hpp"
#include "ivssa/reconstruction.hpp"

namespace ivssa {

/// Linear recurrence a_i = sum_j alpha_j a_{i-j}, j = 1..l-1, applied to
/// both pair channels.
struct RecurrenceCoefficients {
  std::vector<double> alpha;   // alpha[0] multiplies lag 1
  double verticality = 0.0;    // ||pi||^2 over the selected eigenvectors
};

/// alpha = M [Pi ⊙ (pi ⊗ 1)] 1_m / (1 - ||pi||^2): the reversed sum of the
/// selected eigenvectors' leading l-1 entries, each weighted by its last
/// entry. Throws kVerticality when ||pi||^2 >= 1 - 1e-10.
RecurrenceCoefficients recurrence_coefficients(const EigenPairs& eig, const Grouping& grouping);

struct ForecastResult {
  std::size_t horizon = 0;
  std::size_t origin = 0;   // number of in-sample observations
  IntervalSeries values;
};

/// Runs the recurrence forward from the last l-1 trendline values. Each
/// step is passed through phi and fed back as (lo, hi).
ForecastResult forecast_recurrent(const IntervalSeries& trendline,
                                  const RecurrenceCoefficients& coef, std::size_t horizon);

/// Decompose, group I, reconstruct, forecast: the univariate pipeline.
ForecastResult forecast(const IntervalSeries& y, std::size_t window, const Grouping& grouping,
                        std::size_t horizon);

struct OosCell {
  std::size_t window = 0;
  std::size_t m = 0;
  double objective = std::numeric_limits<double>::infinity();
  /// Cutoffs w at which the fit failed (verticality or m > d).
  std::size_t failures = 0;
  bool flagged() const noexcept { return failures > 0; }
};

struct OosResult {
  std::size_t window = 0;   // l*
  std::size_t m = 0;        // m*
  double objective = 0.0;
  std::vector<OosCell> table;   // l-major, m-minor in grid order
};

struct OosOptions {
  std::size_t first_window = 0;   // w0
  std::size_t steps = 1;          // p
  std::size_t stride = 1;         // thins the w loop
};

/// Expanding-window search of (l, m) minimizing the summed Hausdorff
/// distance of p-step forecasts. Ties go to smaller m, then smaller l.
OosResult select_params_oos(const IntervalSeries& y, const std::vector<std::size_t>& l_grid,
                            const std::vector<std::size_t>& m_grid, const OosOptions& options);

/// {ceil(n/5), ceil(n/4), ceil(n/3), ceil(n/2)} restricted to 2 <= l < w0.
std::vector<std::size_t> default_l_grid(std::size_t n, std::size_t first_window);
/// {1, ..., 8}
std::vector<std::size_t> default_m_grid();

}  // namespace ivssa
