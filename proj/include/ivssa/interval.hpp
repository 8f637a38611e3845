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

#include <span>
#include <string>
#include <vector>

namespace ivssa {

/// Unconstrained real pair (a, b). Entries of intermediate matrices; a > b
/// is allowed.
struct OrderedPair {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
};

/// Pre-phi pair series, e.g. an antidiagonal-mean sequence.
using PairSeries = std::vector<OrderedPair>;

/// Closed real interval [lo, hi] with lo <= hi.
class Interval {
 public:
  Interval() = default;
  /// Throws kInvalidValue if lo > hi or either bound is not finite.
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double mid() const noexcept { return 0.5 * (lo_ + hi_); }

  OrderedPair as_pair() const noexcept { return {lo_, hi_}; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// phi(x, y) = [min(x, y), max(x, y)]. The only route from pairs to intervals.
Interval phi(double x, double y);
inline Interval phi(const OrderedPair& p) { return phi(p.a, p.b); }

/// max(|x.lo - y.lo|, |x.hi - y.hi|)
double hausdorff(const Interval& x, const Interval& y) noexcept;

/// Time-indexed interval sequence with optional opaque labels.
class IntervalSeries {
 public:
  IntervalSeries() = default;
  explicit IntervalSeries(std::vector<Interval> values);
  /// labels must be empty or match values in length.
  IntervalSeries(std::vector<Interval> values, std::vector<std::string> labels);

  /// Builds from degenerate points a_t = b_t = x_t.
  static IntervalSeries degenerate(std::span<const double> points);
  /// Applies phi to every pair.
  static IntervalSeries from_pairs(std::span<const OrderedPair> pairs);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const Interval& operator[](std::size_t t) const { return values_[t]; }
  const std::vector<Interval>& values() const noexcept { return values_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }

  /// Interleaved lo_1, hi_1, lo_2, hi_2, ... as consumed by the kernels.
  std::vector<double> interleaved() const;

  /// First `count` observations; labels are carried along.
  IntervalSeries head(std::size_t count) const;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const IntervalSeries&, const IntervalSeries&) = default;

 private:
  std::vector<Interval> values_;
  std::vector<std::string> labels_;
};

}  // namespace ivssa
