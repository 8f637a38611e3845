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


#include "ivssa/forecasting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ivssa/error.hpp"
#include "ivssa/parallel.hpp"

namespace ivssa {

RecurrenceCoefficients recurrence_coefficients(const EigenPairs& eig, const Grouping& grouping) {
  grouping.validate(eig.rank);
  const std::size_t l = eig.dim;
  if (l < 2) fail(ErrorKind::kParameter, "recurrence needs window length >= 2");

  double nu2 = 0.0;
  std::vector<double> r(l - 1, 0.0);
  for (std::size_t c : grouping.components()) {
    const auto u = eig.vector(c - 1);
    const double last = u[l - 1];
    nu2 += last * last;
    for (std::size_t j = 0; j + 1 < l; ++j) r[j] += last * u[j];
  }
  if (nu2 >= 1.0 - 1e-10)
    fail(ErrorKind::kVerticality, "verticality condition violated: ||pi||^2 = " + std::to_string(nu2));

  RecurrenceCoefficients out;
  out.verticality = nu2;
  out.alpha.resize(l - 1);
  for (std::size_t j = 0; j + 1 < l; ++j) out.alpha[j] = r[l - 2 - j] / (1.0 - nu2);
  return out;
}

ForecastResult forecast_recurrent(const IntervalSeries& trendline,
                                  const RecurrenceCoefficients& coef, std::size_t horizon) {
  const std::size_t lags = coef.alpha.size();
  if (horizon == 0) fail(ErrorKind::kParameter, "forecast horizon must be positive");
  if (trendline.size() < lags)
    fail(ErrorKind::kParameter, "forecast needs " + std::to_string(lags) + " past values, have " +
                                    std::to_string(trendline.size()));

  std::vector<double> lo, hi;
  lo.reserve(trendline.size() + horizon);
  hi.reserve(trendline.size() + horizon);
  for (const auto& v : trendline) {
    lo.push_back(v.lo());
    hi.push_back(v.hi());
  }

  std::vector<Interval> values;
  values.reserve(horizon);
  for (std::size_t step = 0; step < horizon; ++step) {
    const std::size_t t = lo.size();
    double a = 0.0, b = 0.0;
    for (std::size_t j = 1; j <= lags; ++j) {
      a += coef.alpha[j - 1] * lo[t - j];
      b += coef.alpha[j - 1] * hi[t - j];
    }
    const Interval next = phi(a, b);
    values.push_back(next);
    lo.push_back(next.lo());
    hi.push_back(next.hi());
  }

  ForecastResult out;
  out.horizon = horizon;
  out.origin = trendline.size();
  out.values = IntervalSeries(std::move(values));
  return out;
}

ForecastResult forecast(const IntervalSeries& y, std::size_t window, const Grouping& grouping,
                        std::size_t horizon) {
  const Decomposition dec = decompose(y, window);
  const RecurrenceCoefficients coef = recurrence_coefficients(dec.eig(), grouping);
  return forecast_recurrent(trendline(dec, grouping), coef, horizon);
}

std::vector<std::size_t> default_l_grid(std::size_t n, std::size_t first_window) {
  std::vector<std::size_t> grid;
  for (std::size_t div : {5, 4, 3, 2}) {
    const std::size_t l = (n + div - 1) / div;
    if (l >= 2 && l < first_window && std::find(grid.begin(), grid.end(), l) == grid.end())
      grid.push_back(l);
  }
  return grid;
}

std::vector<std::size_t> default_m_grid() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

OosResult select_params_oos(const IntervalSeries& y, const std::vector<std::size_t>& l_grid,
                            const std::vector<std::size_t>& m_grid, const OosOptions& options) {
  const std::size_t n = y.size();
  const std::size_t w0 = options.first_window, p = options.steps;
  if (l_grid.empty() || m_grid.empty()) fail(ErrorKind::kParameter, "empty (l, m) grid");
  if (p < 1) fail(ErrorKind::kParameter, "forecast steps p must be >= 1");
  if (options.stride < 1) fail(ErrorKind::kParameter, "stride must be >= 1");
  const std::size_t max_l = *std::max_element(l_grid.begin(), l_grid.end());
  if (w0 <= max_l)
    fail(ErrorKind::kParameter, "first training size w0 = " + std::to_string(w0) +
                                    " must exceed the largest window " + std::to_string(max_l));
  if (w0 + p > n)
    fail(ErrorKind::kParameter, "w0 + p = " + std::to_string(w0 + p) + " exceeds n = " +
                                    std::to_string(n));
  for (std::size_t l : l_grid)
    if (l < 2) fail(ErrorKind::kParameter, "window lengths must be >= 2");
  for (std::size_t m : m_grid)
    if (m < 1) fail(ErrorKind::kParameter, "component counts must be >= 1");

  std::vector<std::size_t> cutoffs;
  for (std::size_t w = w0; w + p <= n; w += options.stride) cutoffs.push_back(w);

  const std::size_t L = l_grid.size(), M = m_grid.size(), W = cutoffs.size();
  // loss[(li * W + wi) * M + mi]; negative marks a failed fit.
  std::vector<double> loss(L * W * M, 0.0);
  parallel_for(L * W, [&](std::size_t task) {
    const std::size_t li = task / W, wi = task % W;
    const std::size_t l = l_grid[li], w = cutoffs[wi];
    const IntervalSeries train = y.head(w);
    const Decomposition dec = decompose(train, l);
    for (std::size_t mi = 0; mi < M; ++mi) {
      double& slot = loss[task * M + mi];
      const std::size_t m = m_grid[mi];
      if (m > dec.rank()) {
        slot = -1.0;
        continue;
      }
      try {
        const Grouping grouping = Grouping::prefix(m);
        const RecurrenceCoefficients coef = recurrence_coefficients(dec.eig(), grouping);
        const ForecastResult f = forecast_recurrent(trendline(dec, grouping), coef, p);
        double sum = 0.0;
        for (std::size_t h = 0; h < p; ++h) sum += hausdorff(y[w + h], f.values[h]);
        slot = sum;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::kVerticality) throw;
        slot = -1.0;
      }
    }
  });

  OosResult out;
  out.table.reserve(L * M);
  for (std::size_t li = 0; li < L; ++li)
    for (std::size_t mi = 0; mi < M; ++mi) {
      OosCell cell;
      cell.window = l_grid[li];
      cell.m = m_grid[mi];
      double sum = 0.0;
      for (std::size_t wi = 0; wi < W; ++wi) {
        const double v = loss[(li * W + wi) * M + mi];
        if (v < 0.0) ++cell.failures;
        else sum += v;
      }
      cell.objective = cell.failures > 0 ? std::numeric_limits<double>::infinity() : sum;
      out.table.push_back(cell);
    }

  const OosCell* best = nullptr;
  for (const auto& cell : out.table) {
    if (!std::isfinite(cell.objective)) continue;
    if (best == nullptr || cell.objective < best->objective ||
        (cell.objective == best->objective &&
         (cell.m < best->m || (cell.m == best->m && cell.window < best->window))))
      best = &cell;
  }
  if (best == nullptr) fail(ErrorKind::kVerticality, "no (l, m) cell admits a forecast");
  out.window = best->window;
  out.m = best->m;
  out.objective = best->objective;
  return out;
}

}  // namespace ivssa
