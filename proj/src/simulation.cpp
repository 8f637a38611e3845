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


#include "ivssa/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "ivssa/decomposition.hpp"
#include "ivssa/embedding.hpp"
#include "ivssa/error.hpp"
#include "ivssa/parallel.hpp"
#include "ivssa/reconstruction.hpp"
#include "ivssa/spectral.hpp"

namespace ivssa {

std::string_view to_string(Scenario scenario) noexcept {
  return scenario == Scenario::kA ? "A" : "B";
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kIvssa: return "IVSSA";
    case Method::kVertical: return "vMIVSSA";
    case Method::kHorizontal: return "hMIVSSA";
  }
  return "unknown";
}

ScenarioConfig ScenarioConfig::make(Scenario scenario, std::size_t n, std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.n = n;
  cfg.rho = scenario == Scenario::kA ? 0.0 : 0.5;
  cfg.sigma2 = 1.0;
  cfg.seed = seed;
  return cfg;
}

void ScenarioConfig::validate() const {
  if (n < 4) fail(ErrorKind::kParameter, "scenario length n must be >= 4");
  if (!(sigma2 >= 0.0) || !(std::abs(rho) <= sigma2))
    fail(ErrorKind::kParameter, "scenario covariance [[s2, rho], [rho, s2]] needs |rho| <= s2");
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(seed) {}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Uniforms on (0, 1] from the top 53 bits.
  constexpr double kScale = 1.0 / 9007199254740992.0;
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
  const double u2 = (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

SimulatedPair simulate_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const double sigma = std::sqrt(cfg.sigma2);
  const double l21 = sigma > 0.0 ? cfg.rho / sigma : 0.0;
  const double l22 = sigma > 0.0 ? std::sqrt(std::max(0.0, cfg.sigma2 - l21 * l21)) : 0.0;

  NormalStream normal(cfg.seed);
  std::vector<Interval> x, y, xm, ym;
  x.reserve(cfg.n);
  y.reserve(cfg.n);
  xm.reserve(cfg.n);
  ym.reserve(cfg.n);
  const double pi = std::numbers::pi;
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    const double t = 2.0 * static_cast<double>(i) * pi / static_cast<double>(cfg.n);
    const double mu_x = 8.0 + t + std::sin(pi * t);
    const double mu_y = std::sqrt(t) + std::cos(pi * t / 2.0);
    const double z1 = normal.next();
    const double z2 = normal.next();
    const double ex = sigma * z1;
    const double ey = l21 * z1 + l22 * z2;
    x.emplace_back(mu_x + ex, mu_x + 2.0 + ex);
    y.emplace_back(mu_y + ey, 2.0 * (mu_y + 1.0) + ey);
    xm.emplace_back(mu_x, mu_x + 2.0);
    ym.emplace_back(mu_y, 2.0 * (mu_y + 1.0));
  }
  return {IntervalSeries(std::move(x)), IntervalSeries(std::move(y)), IntervalSeries(std::move(xm)),
          IntervalSeries(std::move(ym))};
}

double hausdorff_residual_mean(const IntervalSeries& truth, const IntervalSeries& estimate) {
  if (truth.size() != estimate.size())
    fail(ErrorKind::kShape, "hausdorff_residual_mean: lengths " + std::to_string(truth.size()) +
                                " and " + std::to_string(estimate.size()));
  if (truth.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t t = 0; t < truth.size(); ++t) sum += hausdorff(truth[t], estimate[t]);
  return sum / static_cast<double>(truth.size());
}

namespace {

StackingMode mode_of(Method method) {
  switch (method) {
    case Method::kIvssa: return StackingMode::kUnivariate;
    case Method::kVertical: return StackingMode::kVertical;
    case Method::kHorizontal: return StackingMode::kHorizontal;
  }
  return StackingMode::kUnivariate;
}

struct TaskOutput {
  std::vector<McCell> cells;
  std::vector<McSelection> selections;
};

TaskOutput run_replication(const McConfig& config, Scenario scenario, std::size_t n, std::size_t rep) {
  const SimulatedPair data =
      simulate_scenario(ScenarioConfig::make(scenario, n, config.base_seed + rep));
  const IntervalSeries both[2] = {data.x, data.y};

  TaskOutput out;
  for (Method method : config.methods) {
    const bool multi = method != Method::kIvssa;
    const std::size_t count = multi ? 2 : 1;
    const StackingMode mode = mode_of(method);

    std::optional<Decomposition> dec;
    try {
      dec.emplace(decompose(std::span<const IntervalSeries>(both, count),
                            default_window(n, count, mode), mode));
    } catch (const Error&) {
    }

    for (std::size_t m : config.m_list) {
      McCell cell{};
      cell.scenario = scenario;
      cell.n = n;
      cell.method = method;
      cell.rep = rep;
      cell.m = m;
      if (!dec || m > dec->rank()) {
        cell.missing = true;
      } else {
        const Grouping grouping = Grouping::prefix(m);
        cell.hr_x = hausdorff_residual_mean(data.x_mean, trendline(*dec, grouping, 0));
        if (multi) cell.hr_y = hausdorff_residual_mean(data.y_mean, trendline(*dec, grouping, 1));
      }
      out.cells.push_back(cell);
    }

    McSelection sel{};
    sel.scenario = scenario;
    sel.n = n;
    sel.method = method;
    sel.rep = rep;
    if (!dec) {
      sel.missing = true;
    } else {
      try {
        SelectionOptions options;
        options.alpha = config.alpha;
        options.max_m = config.max_m == 0 ? 0 : std::min(config.max_m, dec->rank());
        const SelectionResult r = select_components(*dec, data.x, 0, options);
        sel.m = r.m;
        sel.converged = r.converged;
      } catch (const Error&) {
        sel.missing = true;
      }
    }
    out.selections.push_back(sel);
  }
  return out;
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

McReport run_monte_carlo(const McConfig& config) {
  if (config.reps < 1) fail(ErrorKind::kParameter, "Monte Carlo needs at least one replication");
  if (config.scenarios.empty() || config.n_list.empty() || config.m_list.empty() ||
      config.methods.empty())
    fail(ErrorKind::kParameter, "Monte Carlo grids must be nonempty");
  for (std::size_t n : config.n_list)
    if (n < 4) fail(ErrorKind::kParameter, "Monte Carlo sample sizes must be >= 4");

  const std::size_t S = config.scenarios.size(), N = config.n_list.size(), R = config.reps;
  std::vector<TaskOutput> results(S * N * R);
  parallel_for(results.size(), [&](std::size_t task) {
    const std::size_t si = task / (N * R), ni = (task / R) % N, rep = task % R;
    results[task] = run_replication(config, config.scenarios[si], config.n_list[ni], rep);
  });

  McReport report;
  report.config = config;
  for (auto& r : results) {
    report.cells.insert(report.cells.end(), r.cells.begin(), r.cells.end());
    report.selections.insert(report.selections.end(), r.selections.begin(), r.selections.end());
  }

  for (Scenario scenario : config.scenarios)
    for (std::size_t n : config.n_list)
      for (Method method : config.methods) {
        McGroupSummary group{};
        group.scenario = scenario;
        group.n = n;
        group.method = method;
        bool have_best = false;
        for (std::size_t m : config.m_list) {
          std::vector<double> hx, hy;
          for (const auto& c : report.cells)
            if (c.scenario == scenario && c.n == n && c.method == method && c.m == m && !c.missing) {
              hx.push_back(c.hr_x);
              if (c.hr_y) hy.push_back(*c.hr_y);
            }
          McSummary s{};
          s.scenario = scenario;
          s.n = n;
          s.method = method;
          s.m = m;
          s.count = hx.size();
          if (!hx.empty()) {
            double sum = 0.0;
            for (double v : hx) sum += v;
            s.mean_hr_x = sum / static_cast<double>(hx.size());
            s.q25_hr_x = quantile(hx, 0.25);
            s.median_hr_x = quantile(hx, 0.5);
            s.q75_hr_x = quantile(hx, 0.75);
            if (!hy.empty()) {
              double sy = 0.0;
              for (double v : hy) sy += v;
              s.mean_hr_y = sy / static_cast<double>(hy.size());
              s.mean_hr_avg = 0.5 * (s.mean_hr_x + *s.mean_hr_y);
            }
            if (!have_best || s.mean_hr_x < group.best_mean_hr_x) {
              group.best_m = m;
              group.best_mean_hr_x = s.mean_hr_x;
              have_best = true;
            }
          }
          report.summaries.push_back(s);
        }

        for (const auto& sel : report.selections)
          if (sel.scenario == scenario && sel.n == n && sel.method == method && !sel.missing) {
            if (group.histogram.size() <= sel.m) group.histogram.resize(sel.m + 1, 0);
            ++group.histogram[sel.m];
          }
        std::size_t best_count = 0;
        for (std::size_t m = 0; m < group.histogram.size(); ++m)
          if (group.histogram[m] > best_count) {
            best_count = group.histogram[m];
            group.selected_mode = m;
          }
        report.groups.push_back(std::move(group));
      }
  return report;
}

}  // namespace ivssa
