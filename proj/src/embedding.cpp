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

#include "ivssa/embedding.hpp"

#include <algorithm>
#include <string>

#include "ivssa/error.hpp"

namespace ivssa {

std::string_view to_string(StackingMode mode) noexcept {
  switch (mode) {
    case StackingMode::kUnivariate: return "univariate";
    case StackingMode::kVertical: return "vertical";
    case StackingMode::kHorizontal: return "horizontal";
  }
  return "unknown";
}

void check_window(std::size_t n, std::size_t window) {
  if (n < 3 || window < 2 || window > n - 1)
    fail(ErrorKind::kParameter, "window length " + std::to_string(window) +
                                    " outside [2, n-1] for n = " + std::to_string(n));
}

std::size_t common_length(std::span<const IntervalSeries> series) {
  if (series.empty()) fail(ErrorKind::kShape, "no series supplied");
  const std::size_t n = series.front().size();
  for (const auto& s : series)
    if (s.size() != n)
      fail(ErrorKind::kShape, "multivariate series must share one length (" +
                                  std::to_string(n) + " vs " + std::to_string(s.size()) + ")");
  return n;
}

PairMatrix trajectory(const IntervalSeries& y, std::size_t window) {
  const std::size_t n = y.size();
  check_window(n, window);
  const std::size_t k = n - window + 1;
  const std::vector<double> flat = y.interleaved();
  PairMatrix out(window, k);
  for (std::size_t i = 0; i < window; ++i) {
    auto row = out.row(i);
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(2 * i), 2 * k, row.begin());
  }
  return out;
}

PairMatrix stack(std::span<const IntervalSeries> series, std::size_t window, StackingMode mode) {
  const std::size_t n = common_length(series);
  const std::size_t count = series.size();
  check_window(n, window);
  if (mode == StackingMode::kUnivariate && count != 1)
    fail(ErrorKind::kShape, "univariate stacking takes exactly one series");
  if (count == 1) return trajectory(series.front(), window);

  const std::size_t k = n - window + 1;
  const bool vertical = mode == StackingMode::kVertical;
  PairMatrix out(vertical ? window * count : window, vertical ? k : k * count);
  for (std::size_t s = 0; s < count; ++s) {
    const PairMatrix block = trajectory(series[s], window);
    for (std::size_t i = 0; i < window; ++i) {
      const auto src = block.row(i);
      auto dst = vertical ? out.row(s * window + i) : out.row(i).subspan(2 * s * k, 2 * k);
      std::copy(src.begin(), src.end(), dst.begin());
    }
  }
  return out;
}

std::size_t default_window(std::size_t n, std::size_t series_count, StackingMode mode) {
  const std::size_t d = std::max<std::size_t>(series_count, 1);
  std::size_t l = 0;
  switch (mode) {
    case StackingMode::kUnivariate: l = (n + 2) / 2; break;
    case StackingMode::kVertical: l = (n + 1 + d) / (d + 1); break;
    case StackingMode::kHorizontal: l = (d * (n + 1) + d) / (d + 1); break;
  }
  const std::size_t upper = n > 2 ? n - 1 : 2;
  return std::clamp<std::size_t>(l, 2, upper);
}

}  // namespace ivssa
