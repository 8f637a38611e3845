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

#include "ivssa/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ivssa/error.hpp"

namespace ivssa {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    fail(ErrorKind::kInvalidValue, "interval bounds must be finite");
  if (lo > hi)
    fail(ErrorKind::kInvalidValue, "interval lower bound " + std::to_string(lo) +
                                       " exceeds upper bound " + std::to_string(hi));
}

Interval phi(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    fail(ErrorKind::kInvalidValue, "phi: non-finite input");
  return Interval(std::min(x, y), std::max(x, y));
}

double hausdorff(const Interval& x, const Interval& y) noexcept {
  return std::max(std::abs(x.lo() - y.lo()), std::abs(x.hi() - y.hi()));
}

IntervalSeries::IntervalSeries(std::vector<Interval> values) : values_(std::move(values)) {}

IntervalSeries::IntervalSeries(std::vector<Interval> values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != values_.size())
    fail(ErrorKind::kShape, "series labels and values differ in length");
}

IntervalSeries IntervalSeries::degenerate(std::span<const double> points) {
  std::vector<Interval> v;
  v.reserve(points.size());
  for (double x : points) v.emplace_back(x, x);
  return IntervalSeries(std::move(v));
}

IntervalSeries IntervalSeries::from_pairs(std::span<const OrderedPair> pairs) {
  std::vector<Interval> v;
  v.reserve(pairs.size());
  for (const auto& p : pairs) v.push_back(phi(p));
  return IntervalSeries(std::move(v));
}

std::vector<double> IntervalSeries::interleaved() const {
  std::vector<double> out;
  out.reserve(2 * values_.size());
  for (const auto& v : values_) {
    out.push_back(v.lo());
    out.push_back(v.hi());
  }
  return out;
}

IntervalSeries IntervalSeries::head(std::size_t count) const {
  count = std::min(count, values_.size());
  std::vector<Interval> v(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count));
  if (labels_.empty()) return IntervalSeries(std::move(v));
  std::vector<std::string> l(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(count));
  return IntervalSeries(std::move(v), std::move(l));
}

}  // namespace ivssa
