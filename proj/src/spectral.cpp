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


#include "ivssa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ivssa/error.hpp"
#include "ivssa/kernels.hpp"
#include "ivssa/reconstruction.hpp"

namespace ivssa {

IntervalSeries interval_residuals(const IntervalSeries& y, const IntervalSeries& ytilde) {
  if (y.size() != ytilde.size())
    fail(ErrorKind::kShape, "interval_residuals: lengths " + std::to_string(y.size()) + " and " +
                                std::to_string(ytilde.size()));
  std::vector<Interval> e;
  e.reserve(y.size());
  for (std::size_t t = 0; t < y.size(); ++t)
    e.push_back(phi(y[t].lo() - ytilde[t].lo(), y[t].hi() - ytilde[t].hi()));
  return IntervalSeries(std::move(e));
}

namespace {

double autocov_flat(const std::vector<double>& flat, std::size_t n, std::size_t lag) {
  const std::size_t pairs = n - lag;
  const std::span<const double> x(flat.data(), 2 * pairs);
  const std::span<const double> z(flat.data() + 2 * lag, 2 * pairs);
  return kernels::pair_form(x, z) / (6.0 * static_cast<double>(n));
}

}  // namespace

double autocov(const IntervalSeries& e, std::size_t lag) {
  const std::size_t n = e.size();
  if (n == 0 || lag >= n)
    fail(ErrorKind::kParameter, "autocov: lag " + std::to_string(lag) + " outside [0, n-1]");
  return autocov_flat(e.interleaved(), n, lag);
}

PeriodogramResult periodogram(const IntervalSeries& e, const PeriodogramOptions& options) {
  const std::size_t n = e.size();
  if (n < 4) fail(ErrorKind::kParameter, "periodogram needs n >= 4");

  std::vector<double> flat = e.interleaved();
  if (options.center) {
    double ml = 0.0, mu = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      ml += flat[2 * t];
      mu += flat[2 * t + 1];
    }
    ml /= static_cast<double>(n);
    mu /= static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) {
      flat[2 * t] -= ml;
      flat[2 * t + 1] -= mu;
    }
  }

  std::vector<double> gamma(n);
  for (std::size_t h = 0; h < n; ++h) gamma[h] = autocov_flat(flat, n, h);
  if (!(gamma[0] > 0.0)) fail(ErrorKind::kDegenerateSpectrum, "periodogram: zero residual power");

  // cos(h omega_j) = cos(2 pi (h j mod n) / n), tabulated once.
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> table(n);
  for (std::size_t m = 0; m < n; ++m)
    table[m] = std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n));

  PeriodogramResult out;
  out.n = n;
  out.harmonics = (n - 1) / 2;
  const std::size_t J = out.harmonics;
  out.frequencies.resize(J);
  out.ordinates.resize(J);
  std::vector<double> weights(n);
  weights[0] = 0.0;
  for (std::size_t j = 1; j <= J; ++j) {
    for (std::size_t h = 1; h < n; ++h) weights[h] = table[(h * j) % n];
    const double f = (gamma[0] + 2.0 * kernels::dot(gamma, weights)) / two_pi;
    out.frequencies[j - 1] = two_pi * static_cast<double>(j) / static_cast<double>(n);
    if (f < 0.0) {
      out.ordinates[j - 1] = 0.0;
      ++out.clipped;
    } else {
      out.ordinates[j - 1] = f;
    }
  }

  double total = 0.0;
  for (double f : out.ordinates) total += f;
  if (!(total > 0.0)) fail(ErrorKind::kDegenerateSpectrum, "periodogram: zero total power");

  out.cumulative.resize(J);
  double running = 0.0, dev = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    running += out.ordinates[j];
    out.cumulative[j] = j + 1 == J ? 1.0 : running / total;
    dev = std::max(dev, std::abs(out.cumulative[j] - static_cast<double>(j + 1) / static_cast<double>(J)));
  }
  out.ks_stat = std::sqrt(static_cast<double>(J)) * dev;
  return out;
}

namespace {

// P(K > c) for the Kolmogorov distribution.
double kolmogorov_tail(double c) {
  if (c <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * c * c);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::kParameter, "alpha must lie in (0, 1)");
  // The tail is decreasing in c; bisect on [0.2, 5].
  double lo = 0.2, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_tail(mid) > alpha) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

SelectionResult select_components(const Decomposition& dec, const IntervalSeries& y,
                                  std::size_t series_index, const SelectionOptions& options) {
  if (y.size() != dec.series_length())
    fail(ErrorKind::kShape, "select_components: series length does not match decomposition");
  const std::size_t d = dec.rank();
  if (d == 0) fail(ErrorKind::kDegenerateSpectrum, "select_components: decomposition has rank 0");
  const std::size_t max_m = options.max_m == 0 ? std::min<std::size_t>(d, 40) : options.max_m;
  if (max_m > d)
    fail(ErrorKind::kParameter, "max_m " + std::to_string(max_m) + " exceeds d = " + std::to_string(d));

  SelectionResult out;
  out.critical_value = ks_critical_value(options.alpha);
  const double data_power = autocov(y, 0);

  PairSeries running(y.size());
  for (std::size_t i = 1; i <= max_m; ++i) {
    const PairSeries part = component_pairs(dec, i - 1, series_index);
    for (std::size_t t = 0; t < running.size(); ++t) {
      running[t].a += part[t].a;
      running[t].b += part[t].b;
    }
    const IntervalSeries e = interval_residuals(y, IntervalSeries::from_pairs(running));
    out.m = i;

    double ks = 0.0;
    bool perfect = autocov(e, 0) <= options.perfect_fit_ratio * data_power;
    if (!perfect) {
      try {
        const PeriodogramResult p = periodogram(e, options.periodogram);
        ks = p.ks_stat;
        out.clipped += p.clipped;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::kDegenerateSpectrum) throw;
        perfect = true;
      }
    }
    out.ks_trace.push_back(ks);
    if (perfect || ks <= out.critical_value) {
      out.converged = true;
      break;
    }
  }
  return out;
}

SelectionResult select_components(const IntervalSeries& y, std::size_t window,
                                  const SelectionOptions& options) {
  const Decomposition dec = decompose(y, window);
  return select_components(dec, y, 0, options);
}

}  // namespace ivssa
