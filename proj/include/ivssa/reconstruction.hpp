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
#include <initializer_list>
#include <span>
#include <vector>

#include "ivssa/decomposition.hpp"
#include "ivssa/interval.hpp"
#include "ivssa/pair_matrix.hpp"

namespace ivssa {

/// Set of component numbers I, 1-based as in I = {1, ..., m}. Kept sorted.
class Grouping {
 public:
  Grouping() = default;
  Grouping(std::initializer_list<std::size_t> components);
  explicit Grouping(std::vector<std::size_t> components);

  /// {1, ..., m}
  static Grouping prefix(std::size_t m);

  const std::vector<std::size_t>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  /// Throws kParameter unless nonempty, duplicate-free and within [1, d].
  void validate(std::size_t d) const;

 private:
  std::vector<std::size_t> components_;
};

/// Minkowski sum of the selected elementary matrices.
PairMatrix group(std::span<const PairMatrix> elementary, const Grouping& grouping);
PairMatrix group(const Decomposition& dec, const Grouping& grouping);

/// Antidiagonal means (alpha*_s, beta*_s), s = 0..l+k-2, before phi. This
/// is the C-norm-closest Hankel matrix of ordered pairs.
PairSeries diagonal_average_pairs(const PairMatrix& y);

/// phi applied to diagonal_average_pairs.
IntervalSeries diagonal_average(const PairMatrix& y);

/// Antidiagonal means of the rank-one matrix u w^T (w holds pairs).
PairSeries hankelize_rank_one(std::span<const double> u, std::span<const double> w);

/// Rows (Vertical) or columns (Horizontal) of y belonging to series
/// `series_index` (zero-based). Univariate decompositions return y.
PairMatrix extract_series(const PairMatrix& y, const Decomposition& dec, std::size_t series_index);

/// Pre-phi reconstructed component (zero-based `component`) for one series.
PairSeries component_pairs(const Decomposition& dec, std::size_t component,
                           std::size_t series_index = 0);

/// Pre-phi trendline for one series from a grouping.
PairSeries trendline_pairs(const Decomposition& dec, const Grouping& grouping,
                           std::size_t series_index = 0);

/// Elementary reconstructed components, one per leading elementary matrix
/// and per series.
struct ErcSet {
  std::size_t series_count = 0;
  /// pairs[c][s]: component c (zero-based) of series s, before phi.
  std::vector<std::vector<PairSeries>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  IntervalSeries component(std::size_t c, std::size_t series_index = 0) const;
};

/// ERCs of the first `count` components, 1 <= count <= d.
ErcSet reconstruct_ercs(const Decomposition& dec, std::size_t count);

/// One trendline per series. `groupings` holds either one grouping per
/// series or a single grouping shared by all.
std::vector<IntervalSeries> trendline(const Decomposition& dec, std::span<const Grouping> groupings);
IntervalSeries trendline(const Decomposition& dec, const Grouping& grouping,
                         std::size_t series_index = 0);

}  // namespace ivssa
