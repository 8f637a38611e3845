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

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "ivssa/error.hpp"
#include "ivssa/interval.hpp"
#include "ivssa/pair_matrix.hpp"

namespace testing {

template <class Fn>
ivssa::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const ivssa::Error& e) {
    return e.kind();
  }
  FAIL("expected ivssa::Error");
  return ivssa::ErrorKind::kConfig;
}

/// Random walk with random nonnegative widths.
inline ivssa::IntervalSeries random_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, 1.0);
  std::exponential_distribution<double> width(0.5);
  std::vector<ivssa::Interval> v;
  double level = 10.0;
  for (std::size_t t = 0; t < n; ++t) {
    level += step(rng);
    const double w = width(rng);
    v.emplace_back(level, level + w);
  }
  return ivssa::IntervalSeries(std::move(v));
}

inline std::vector<double> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(n);
  double level = 0.0;
  for (auto& v : x) {
    level += 0.3 * g(rng);
    v = level + g(rng);
  }
  return x;
}

inline ivssa::PairMatrix random_pair_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 3.0);
  ivssa::PairMatrix m(rows, cols);
  for (double& v : m.data()) v = g(rng);
  return m;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

}  // namespace testing
