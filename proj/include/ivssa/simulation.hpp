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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ivssa/interval.hpp"

namespace ivssa {

enum class Scenario { kA, kB };

std::string_view to_string(Scenario scenario) noexcept;

struct ScenarioConfig {
  std::size_t n = 100;
  double rho = 0.0;
  double sigma2 = 1.0;
  std::uint64_t seed = 0;

  /// Scenario A: rho = 0, sigma2 = 1. Scenario B: rho = 1/2, sigma2 = 1.
  static ScenarioConfig make(Scenario scenario, std::size_t n, std::uint64_t seed);
  /// Throws kParameter unless |rho| <= sigma2, sigma2 >= 0 and n >= 4.
  void validate() const;
};

struct SimulatedPair {
  IntervalSeries x, y;            // observed
  IntervalSeries x_mean, y_mean;  // E(x_t) = [mu_x, mu_x + 2], E(y_t) = [mu_y, 2(mu_y + 1)]
};

/// Draws the interval processes on t_i = 2 i pi / n, i = 1..n. Noise pairs
/// come from mt19937_64 seeded with cfg.seed, standard normals by
/// Box-Muller, correlated through the lower-triangular square root of
/// [[s2, rho], [rho, s2]].
SimulatedPair simulate_scenario(const ScenarioConfig& cfg);

/// Standard normal stream used by simulate_scenario.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// HR = (1/n) sum_t D_H(truth_t, estimate_t).
double hausdorff_residual_mean(const IntervalSeries& truth, const IntervalSeries& estimate);

enum class Method { kIvssa, kVertical, kHorizontal };

std::string_view to_string(Method method) noexcept;

struct McConfig {
  std::vector<Scenario> scenarios{Scenario::kA, Scenario::kB};
  std::vector<std::size_t> n_list{100, 250};
  std::vector<std::size_t> m_list{1, 2, 3, 4, 5, 6};
  std::vector<Method> methods{Method::kIvssa, Method::kVertical, Method::kHorizontal};
  std::size_t reps = 200;
  std::uint64_t base_seed = 1;
  double alpha = 0.05;
  std::size_t max_m = 0;   // 0: min(d, 40)
};

/// HR of one fitted trendline for one replication.
struct McCell {
  Scenario scenario;
  std::size_t n;
  Method method;
  std::size_t rep;
  std::size_t m;
  bool missing = false;   // fit failed or m > d
  double hr_x = 0.0;
  std::optional<double> hr_y;   // multivariate methods only
};

/// ERC count chosen by the periodogram criterion for series x.
struct McSelection {
  Scenario scenario;
  std::size_t n;
  Method method;
  std::size_t rep;
  std::size_t m = 0;
  bool converged = false;
  bool missing = false;
};

struct McSummary {
  Scenario scenario;
  std::size_t n;
  Method method;
  std::size_t m;
  std::size_t count = 0;
  double mean_hr_x = 0.0;
  double q25_hr_x = 0.0, median_hr_x = 0.0, q75_hr_x = 0.0;
  std::optional<double> mean_hr_y;
  std::optional<double> mean_hr_avg;
};

struct McGroupSummary {
  Scenario scenario;
  std::size_t n;
  Method method;
  std::size_t best_m = 0;          // argmin over m of mean HR_x
  double best_mean_hr_x = 0.0;
  std::vector<std::size_t> histogram;   // histogram[m] = runs selecting m
  std::size_t selected_mode = 0;        // smallest m among ties
};

struct McReport {
  McConfig config;
  std::vector<McCell> cells;
  std::vector<McSelection> selections;
  std::vector<McSummary> summaries;
  std::vector<McGroupSummary> groups;
};

/// Replication r uses seed base_seed + r. Output is independent of the
/// worker count.
McReport run_monte_carlo(const McConfig& config);

}  // namespace ivssa
