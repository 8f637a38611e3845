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
#include <vector>

#include "ivssa/embedding.hpp"
#include "ivssa/interval.hpp"
#include "ivssa/pair_matrix.hpp"

namespace ivssa {

inline constexpr double kDefaultRankEps = 1e-10;

/// Dense symmetric real matrix, row-major.
class SymbolicCovariance {
 public:
  SymbolicCovariance() = default;
  explicit SymbolicCovariance(std::size_t size) : size_(size), data_(size * size, 0.0) {}
  SymbolicCovariance(std::size_t size, std::vector<double> data);

  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  double trace() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<double> data_;
};

/// Eigenpairs in descending eigenvalue order. Vectors are stored column by
/// column; each is sign-normalized so its largest-magnitude entry is
/// positive (first such entry on ties).
struct EigenPairs {
  std::vector<double> values;
  std::vector<double> vectors;  // dim x dim, column i = eigenvector i
  std::size_t dim = 0;
  std::size_t rank = 0;         // d = max{i : lambda_i > eps * lambda_1}

  std::span<const double> vector(std::size_t i) const {
    return {vectors.data() + i * dim, dim};
  }
};

/// S_jj' = 1/6 sum_q [2 a_jq a_j'q + a_jq b_j'q + b_jq a_j'q + 2 b_jq b_j'q].
/// Upper triangle computed, lower mirrored, so S is exactly symmetric.
SymbolicCovariance symbolic_covariance(const PairMatrix& y);

/// Covariance of the stacked trajectory matrix computed block by block
/// from the series: Vertical gives the (lD) x (lD) matrix of cross blocks
/// S_ii', Horizontal the l x l sum of the diagonal blocks S_ii.
SymbolicCovariance stacked_covariance(std::span<const IntervalSeries> series, std::size_t window,
                                      StackingMode mode);

/// Full symmetric eigendecomposition. Throws kInvalidInput if S is not
/// symmetric to 1e-12 relative to its largest entry.
EigenPairs eigen_sym(const SymbolicCovariance& s, double rank_eps = kDefaultRankEps);

/// w = u^T Y, one pair per column of Y.
std::vector<double> project(const PairMatrix& y, std::span<const double> u);

/// Y_i = u_i u_i^T Y applied to the a-grid and b-grid separately, for
/// i = 1..d in descending eigenvalue order.
std::vector<PairMatrix> elementary_matrices(const PairMatrix& y, const EigenPairs& eig);

/// Result of the embedding + symbolic SVD steps. Each elementary matrix is
/// kept in factored form (u_i, w_i = u_i^T Y); elementary(i) expands it.
class Decomposition {
 public:
  Decomposition(StackingMode mode, std::size_t window, std::size_t series_count,
                std::size_t series_length, PairMatrix trajectory, EigenPairs eig);

  StackingMode mode() const noexcept { return mode_; }
  std::size_t window() const noexcept { return window_; }
  /// Columns per series block, n - l + 1.
  std::size_t k() const noexcept { return k_; }
  std::size_t series_count() const noexcept { return series_count_; }
  std::size_t series_length() const noexcept { return series_length_; }
  /// Number of elementary matrices, d.
  std::size_t rank() const noexcept { return eig_.rank; }

  const PairMatrix& trajectory() const noexcept { return trajectory_; }
  const EigenPairs& eig() const noexcept { return eig_; }

  /// Zero-based component index i < rank().
  std::span<const double> left(std::size_t i) const { return eig_.vector(i); }
  std::span<const double> projection(std::size_t i) const { return projections_[i]; }
  PairMatrix elementary(std::size_t i) const;

 private:
  StackingMode mode_;
  std::size_t window_;
  std::size_t k_;
  std::size_t series_count_;
  std::size_t series_length_;
  PairMatrix trajectory_;
  EigenPairs eig_;
  std::vector<std::vector<double>> projections_;
};

/// Embedding plus symbolic SVD of one series.
Decomposition decompose(const IntervalSeries& y, std::size_t window,
                        double rank_eps = kDefaultRankEps);

/// Embedding plus symbolic SVD of D equal-length series under the given stacking mode.
/// A single series with any mode is the univariate case.
Decomposition decompose(std::span<const IntervalSeries> series, std::size_t window,
                        StackingMode mode, double rank_eps = kDefaultRankEps);

/// Expands u w^T into a rows x cols pair matrix (w holds cols pairs).
PairMatrix outer(std::span<const double> u, std::span<const double> w);

}  // namespace ivssa
