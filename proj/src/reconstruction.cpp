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


#include "ivssa/reconstruction.hpp"

#include <algorithm>
#include <string>

#include "ivssa/error.hpp"
#include "ivssa/kernels.hpp"

namespace ivssa {

Grouping::Grouping(std::initializer_list<std::size_t> components)
    : Grouping(std::vector<std::size_t>(components)) {}

Grouping::Grouping(std::vector<std::size_t> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

Grouping Grouping::prefix(std::size_t m) {
  std::vector<std::size_t> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = i + 1;
  return Grouping(std::move(c));
}

void Grouping::validate(std::size_t d) const {
  if (components_.empty()) fail(ErrorKind::kParameter, "grouping is empty");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::size_t c = components_[i];
    if (c < 1 || c > d)
      fail(ErrorKind::kParameter,
           "component " + std::to_string(c) + " outside [1, " + std::to_string(d) + "]");
    if (i > 0 && components_[i - 1] == c)
      fail(ErrorKind::kParameter, "duplicate component " + std::to_string(c));
  }
}

PairMatrix group(std::span<const PairMatrix> elementary, const Grouping& grouping) {
  grouping.validate(elementary.size());
  PairMatrix out = elementary[grouping.components().front() - 1];
  for (std::size_t i = 1; i < grouping.size(); ++i) out += elementary[grouping.components()[i] - 1];
  return out;
}

PairMatrix group(const Decomposition& dec, const Grouping& grouping) {
  grouping.validate(dec.rank());
  PairMatrix out(dec.trajectory().rows(), dec.trajectory().cols());
  for (std::size_t c : grouping.components()) {
    const auto u = dec.left(c - 1);
    const auto w = dec.projection(c - 1);
    for (std::size_t r = 0; r < u.size(); ++r) kernels::axpy(u[r], w, out.row(r));
  }
  return out;
}

PairSeries diagonal_average_pairs(const PairMatrix& y) {
  if (y.empty()) fail(ErrorKind::kShape, "diagonal_average: empty matrix");
  const std::size_t l = y.rows(), k = y.cols();
  std::vector<double> sums(2 * (l + k - 1), 0.0);
  for (std::size_t i = 0; i < l; ++i) {
    const auto row = y.row(i);
    std::span<double> dst(sums.data() + 2 * i, 2 * k);
    for (std::size_t q = 0; q < 2 * k; ++q) dst[q] += row[q];
  }
  PairSeries out(l + k - 1);
  for (std::size_t s = 0; s < out.size(); ++s) {
    const std::size_t lo = s + 1 > k ? s + 1 - k : 0;
    const std::size_t hi = std::min(s, l - 1);
    const double count = static_cast<double>(hi - lo + 1);
    out[s] = {sums[2 * s] / count, sums[2 * s + 1] / count};
  }
  return out;
}

IntervalSeries diagonal_average(const PairMatrix& y) {
  const PairSeries p = diagonal_average_pairs(y);
  return IntervalSeries::from_pairs(p);
}

PairSeries hankelize_rank_one(std::span<const double> u, std::span<const double> w) {
  const std::size_t l = u.size(), k = w.size() / 2;
  if (l == 0 || k == 0) fail(ErrorKind::kShape, "hankelize_rank_one: empty factor");
  std::vector<double> sums(2 * (l + k - 1), 0.0);
  for (std::size_t i = 0; i < l; ++i)
    kernels::axpy(u[i], w, std::span<double>(sums.data() + 2 * i, 2 * k));
  PairSeries out(l + k - 1);
  for (std::size_t s = 0; s < out.size(); ++s) {
    const std::size_t lo = s + 1 > k ? s + 1 - k : 0;
    const std::size_t hi = std::min(s, l - 1);
    const double count = static_cast<double>(hi - lo + 1);
    out[s] = {sums[2 * s] / count, sums[2 * s + 1] / count};
  }
  return out;
}

namespace {

void check_series_index(const Decomposition& dec, std::size_t series_index) {
  if (series_index >= dec.series_count())
    fail(ErrorKind::kParameter, "series index " + std::to_string(series_index) +
                                    " out of range for D = " + std::to_string(dec.series_count()));
}

}  // namespace

PairMatrix extract_series(const PairMatrix& y, const Decomposition& dec, std::size_t series_index) {
  check_series_index(dec, series_index);
  if (y.rows() != dec.trajectory().rows() || y.cols() != dec.trajectory().cols())
    fail(ErrorKind::kShape, "extract_series: matrix shape does not match decomposition");
  const std::size_t l = dec.window(), k = dec.k();
  switch (dec.mode()) {
    case StackingMode::kUnivariate: return y;
    case StackingMode::kVertical: return y.block(series_index * l, 0, l, k);
    case StackingMode::kHorizontal: return y.block(0, series_index * k, l, k);
  }
  return y;
}

PairSeries component_pairs(const Decomposition& dec, std::size_t component,
                           std::size_t series_index) {
  check_series_index(dec, series_index);
  if (component >= dec.rank())
    fail(ErrorKind::kParameter, "component index " + std::to_string(component + 1) +
                                    " outside [1, " + std::to_string(dec.rank()) + "]");
  auto u = dec.left(component);
  auto w = dec.projection(component);
  const std::size_t l = dec.window(), k = dec.k();
  if (dec.mode() == StackingMode::kVertical) u = u.subspan(series_index * l, l);
  if (dec.mode() == StackingMode::kHorizontal) w = w.subspan(2 * series_index * k, 2 * k);
  return hankelize_rank_one(u, w);
}

PairSeries trendline_pairs(const Decomposition& dec, const Grouping& grouping,
                           std::size_t series_index) {
  grouping.validate(dec.rank());
  PairSeries out(dec.series_length());
  for (std::size_t c : grouping.components()) {
    const PairSeries part = component_pairs(dec, c - 1, series_index);
    for (std::size_t t = 0; t < out.size(); ++t) {
      out[t].a += part[t].a;
      out[t].b += part[t].b;
    }
  }
  return out;
}

IntervalSeries ErcSet::component(std::size_t c, std::size_t series_index) const {
  return IntervalSeries::from_pairs(pairs.at(c).at(series_index));
}

ErcSet reconstruct_ercs(const Decomposition& dec, std::size_t count) {
  if (count < 1 || count > dec.rank())
    fail(ErrorKind::kParameter, "ERC count " + std::to_string(count) + " outside [1, " +
                                    std::to_string(dec.rank()) + "]");
  ErcSet out;
  out.series_count = dec.series_count();
  out.pairs.resize(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.pairs[c].reserve(dec.series_count());
    for (std::size_t s = 0; s < dec.series_count(); ++s) out.pairs[c].push_back(component_pairs(dec, c, s));
  }
  return out;
}

IntervalSeries trendline(const Decomposition& dec, const Grouping& grouping,
                         std::size_t series_index) {
  return IntervalSeries::from_pairs(trendline_pairs(dec, grouping, series_index));
}

std::vector<IntervalSeries> trendline(const Decomposition& dec, std::span<const Grouping> groupings) {
  const std::size_t count = dec.series_count();
  if (groupings.size() != 1 && groupings.size() != count)
    fail(ErrorKind::kParameter, "need one grouping per series or a single shared grouping");
  std::vector<IntervalSeries> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s)
    out.push_back(trendline(dec, groupings.size() == 1 ? groupings[0] : groupings[s], s));
  return out;
}

}  // namespace ivssa
