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
#include <span>
#include <string_view>

#include "ivssa/interval.hpp"
#include "ivssa/pair_matrix.hpp"

namespace ivssa {

enum class StackingMode { kUnivariate, kVertical, kHorizontal };

std::string_view to_string(StackingMode mode) noexcept;

/// l x (n - l + 1) Hankel matrix of ordered pairs, column j holding the
/// window y_j .. y_{j+l-1}. Requires 2 <= l <= n - 1.
PairMatrix trajectory(const IntervalSeries& y, std::size_t window);

/// Block trajectory matrix of D equal-length series: Vertical stacks the
/// per-series matrices as a (lD) x k column, Horizontal as an l x (kD) row.
/// Univariate requires exactly one series.
PairMatrix stack(std::span<const IntervalSeries> series, std::size_t window, StackingMode mode);

/// Window-length rule: ceil((n+1)/2) for one series, ceil((n+1)/(D+1))
/// vertical, ceil(D(n+1)/(D+1)) horizontal; clamped to [2, n - 1].
std::size_t default_window(std::size_t n, std::size_t series_count, StackingMode mode);

/// Validates 2 <= l <= n - 1; throws kParameter otherwise.
void check_window(std::size_t n, std::size_t window);

/// Common length of a non-empty list of series; throws kShape if they differ.
std::size_t common_length(std::span<const IntervalSeries> series);

}  // namespace ivssa
