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


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "ivssa/simulation.hpp"
#include "support.hpp"

using namespace ivssa;
using testing::kind_of;

TEST_CASE("scenario shapes") {
  const SimulatedPair d = simulate_scenario(ScenarioConfig::make(Scenario::kB, 100, 4));
  REQUIRE(d.x.size() == 100);
  for (std::size_t t = 0; t < 100; ++t) {
    CHECK(d.x[t].width() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.x_mean[t].width() == doctest::Approx(2.0).epsilon(1e-12));
    const double ti = 2.0 * (t + 1) * std::numbers::pi / 100;
    CHECK(d.x_mean[t].lo() == doctest::Approx(8 + ti + std::sin(std::numbers::pi * ti)));
    const double mu_y = std::sqrt(ti) + std::cos(std::numbers::pi * ti / 2);
    CHECK(d.y_mean[t] == Interval(mu_y, 2 * (mu_y + 1)));
    CHECK(d.y[t].hi() - d.y[t].lo() == doctest::Approx(mu_y + 2).epsilon(1e-9));
  }
}

TEST_CASE("zero noise reproduces the means") {
  ScenarioConfig cfg;
  cfg.n = 50;
  cfg.sigma2 = 0.0;
  const SimulatedPair d = simulate_scenario(cfg);
  CHECK(d.x == d.x_mean);
  CHECK(d.y == d.y_mean);
  CHECK(hausdorff_residual_mean(d.x, d.x_mean) == 0.0);
}

TEST_CASE("noise has the requested moments") {
  const std::size_t n = 100000;
  const SimulatedPair d = simulate_scenario(ScenarioConfig::make(Scenario::kB, n, 77));
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double ex = d.x[t].lo() - d.x_mean[t].lo();
    const double ey = d.y[t].lo() - d.y_mean[t].lo();
    sx += ex;
    sy += ey;
    sxx += ex * ex;
    syy += ey * ey;
    sxy += ex * ey;
  }
  const double mx = sx / n, my = sy / n;
  const double vx = sxx / n - mx * mx, vy = syy / n - my * my;
  CHECK(std::abs(mx) < 0.02);
  CHECK(vx == doctest::Approx(1.0).epsilon(0.02));
  CHECK(vy == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs((sxy / n - mx * my) / std::sqrt(vx * vy) - 0.5) <= 0.02);
}

TEST_CASE("same seed, same draws") {
  const auto a = simulate_scenario(ScenarioConfig::make(Scenario::kA, 30, 9));
  const auto b = simulate_scenario(ScenarioConfig::make(Scenario::kA, 30, 9));
  const auto c = simulate_scenario(ScenarioConfig::make(Scenario::kA, 30, 10));
  CHECK(a.x == b.x);
  CHECK(!(a.x == c.x));

  ScenarioConfig bad;
  bad.rho = 2.0;
  CHECK(kind_of([&] { simulate_scenario(bad); }) == ErrorKind::kParameter);
}

TEST_CASE("Hausdorff residual") {
  const IntervalSeries t({Interval(0, 1), Interval(2, 3)});
  const IntervalSeries e({Interval(0.5, 1), Interval(2, 5)});
  CHECK(hausdorff_residual_mean(t, e) == doctest::Approx(1.25));
  CHECK(kind_of([&] { hausdorff_residual_mean(t, e.head(1)); }) == ErrorKind::kShape);
}

TEST_CASE("Monte Carlo is independent of the worker count") {
  McConfig cfg;
  cfg.n_list = {40};
  cfg.reps = 6;
  cfg.m_list = {1, 2, 3};
  setenv("IVSSA_THREADS", "1", 1);
  const McReport one = run_monte_carlo(cfg);
  setenv("IVSSA_THREADS", "4", 1);
  const McReport four = run_monte_carlo(cfg);
  unsetenv("IVSSA_THREADS");

  REQUIRE(one.cells.size() == 2 * 6 * 3 * 3);
  REQUIRE(one.cells.size() == four.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].hr_x == four.cells[i].hr_x);
    CHECK(one.cells[i].hr_y == four.cells[i].hr_y);
  }
  for (std::size_t i = 0; i < one.selections.size(); ++i)
    CHECK(one.selections[i].m == four.selections[i].m);
  CHECK(one.summaries.size() == 2 * 3 * 3);
  CHECK(one.groups.size() == 2 * 3);
  for (const auto& c : one.cells) CHECK(c.hr_y.has_value() == (c.method != Method::kIvssa));
}

TEST_CASE("Monte Carlo argument checks") {
  McConfig cfg;
  cfg.reps = 0;
  CHECK(kind_of([&] { run_monte_carlo(cfg); }) == ErrorKind::kParameter);
  cfg.reps = 1;
  cfg.n_list = {3};
  CHECK(kind_of([&] { run_monte_carlo(cfg); }) == ErrorKind::kParameter);
}
