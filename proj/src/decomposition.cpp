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


#include "ivssa/decomposition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "ivssa/error.hpp"
#include "ivssa/kernels.hpp"

namespace ivssa {

SymbolicCovariance::SymbolicCovariance(std::size_t size, std::vector<double> data)
    : size_(size), data_(std::move(data)) {
  if (data_.size() != size * size) fail(ErrorKind::kShape, "covariance storage size mismatch");
}

double SymbolicCovariance::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < size_; ++i) t += data_[i * size_ + i];
  return t;
}

SymbolicCovariance symbolic_covariance(const PairMatrix& y) {
  if (y.empty()) fail(ErrorKind::kShape, "symbolic_covariance: empty matrix");
  const std::size_t l = y.rows();
  SymbolicCovariance s(l);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t jp = j; jp < l; ++jp) {
      const double v = kernels::pair_form(y.row(j), y.row(jp)) / 6.0;
      s(j, jp) = v;
      s(jp, j) = v;
    }
  }
  return s;
}

SymbolicCovariance stacked_covariance(std::span<const IntervalSeries> series, std::size_t window,
                                      StackingMode mode) {
  const std::size_t n = common_length(series);
  check_window(n, window);
  const std::size_t count = series.size();
  if (mode == StackingMode::kUnivariate && count != 1)
    fail(ErrorKind::kShape, "univariate stacking takes exactly one series");
  const std::size_t k = n - window + 1;

  std::vector<std::vector<double>> flat;
  flat.reserve(count);
  for (const auto& s : series) flat.push_back(s.interleaved());

  // [S_ii']_jj' = 1/6 sum_q form(y_i[j + q], y_i'[j' + q]), q = 0..k-1.
  auto entry = [&](std::size_t i, std::size_t ip, std::size_t j, std::size_t jp) {
    const std::span<const double> x(flat[i].data() + 2 * j, 2 * k);
    const std::span<const double> z(flat[ip].data() + 2 * jp, 2 * k);
    return kernels::pair_form(x, z) / 6.0;
  };

  if (mode == StackingMode::kHorizontal || count == 1) {
    SymbolicCovariance s(window);
    for (std::size_t j = 0; j < window; ++j)
      for (std::size_t jp = j; jp < window; ++jp) {
        double v = 0.0;
        for (std::size_t i = 0; i < count; ++i) v += entry(i, i, j, jp);
        s(j, jp) = v;
        s(jp, j) = v;
      }
    return s;
  }

  const std::size_t dim = window * count;
  SymbolicCovariance s(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) {
      const double v = entry(r / window, c / window, r % window, c % window);
      s(r, c) = v;
      s(c, r) = v;
    }
  return s;
}

EigenPairs eigen_sym(const SymbolicCovariance& s, double rank_eps) {
  const std::size_t dim = s.size();
  if (dim == 0) fail(ErrorKind::kShape, "eigen_sym: empty matrix");

  double scale = 0.0, asym = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      scale = std::max(scale, std::abs(s(i, j)));
      asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
    }
  if (asym > 1e-12 * scale)
    fail(ErrorKind::kInvalidInput, "eigen_sym: matrix is not symmetric");

  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(s.data().data(), static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(m),
                                                              Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::kInvalidInput, "eigen_sym: eigensolver did not converge");

  EigenPairs out;
  out.dim = dim;
  out.values.resize(dim);
  out.vectors.resize(dim * dim);
  // Eigen returns ascending order.
  for (std::size_t i = 0; i < dim; ++i) {
    const auto src = static_cast<Eigen::Index>(dim - 1 - i);
    out.values[i] = solver.eigenvalues()[src];
    double* col = out.vectors.data() + i * dim;
    std::size_t arg = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      col[r] = solver.eigenvectors()(static_cast<Eigen::Index>(r), src);
      if (std::abs(col[r]) > std::abs(col[arg])) arg = r;
    }
    if (col[arg] < 0.0)
      for (std::size_t r = 0; r < dim; ++r) col[r] = -col[r];
  }

  const double lead = out.values.front();
  out.rank = 0;
  if (lead > 0.0)
    for (std::size_t i = 0; i < dim; ++i)
      if (out.values[i] > rank_eps * lead) out.rank = i + 1;
  return out;
}

std::vector<double> project(const PairMatrix& y, std::span<const double> u) {
  if (u.size() != y.rows()) fail(ErrorKind::kShape, "projection: vector length != matrix rows");
  std::vector<double> w(2 * y.cols(), 0.0);
  for (std::size_t r = 0; r < y.rows(); ++r) kernels::axpy(u[r], y.row(r), w);
  return w;
}

PairMatrix outer(std::span<const double> u, std::span<const double> w) {
  PairMatrix out(u.size(), w.size() / 2);
  for (std::size_t r = 0; r < u.size(); ++r) kernels::axpy(u[r], w, out.row(r));
  return out;
}

std::vector<PairMatrix> elementary_matrices(const PairMatrix& y, const EigenPairs& eig) {
  if (eig.dim != y.rows())
    fail(ErrorKind::kShape, "elementary_matrices: eigenbasis dimension != trajectory rows");
  std::vector<PairMatrix> out;
  out.reserve(eig.rank);
  for (std::size_t i = 0; i < eig.rank; ++i) out.push_back(outer(eig.vector(i), project(y, eig.vector(i))));
  return out;
}

Decomposition::Decomposition(StackingMode mode, std::size_t window, std::size_t series_count,
                             std::size_t series_length, PairMatrix trajectory, EigenPairs eig)
    : mode_(mode),
      window_(window),
      k_(series_length - window + 1),
      series_count_(series_count),
      series_length_(series_length),
      trajectory_(std::move(trajectory)),
      eig_(std::move(eig)) {
  if (eig_.dim != trajectory_.rows())
    fail(ErrorKind::kShape, "decomposition: eigenbasis dimension != trajectory rows");
  projections_.reserve(eig_.rank);
  for (std::size_t i = 0; i < eig_.rank; ++i) projections_.push_back(project(trajectory_, eig_.vector(i)));
}

PairMatrix Decomposition::elementary(std::size_t i) const {
  if (i >= rank()) fail(ErrorKind::kParameter, "elementary index out of range");
  return outer(left(i), projection(i));
}

Decomposition decompose(const IntervalSeries& y, std::size_t window, double rank_eps) {
  return decompose(std::span<const IntervalSeries>(&y, 1), window, StackingMode::kUnivariate,
                   rank_eps);
}

Decomposition decompose(std::span<const IntervalSeries> series, std::size_t window,
                        StackingMode mode, double rank_eps) {
  const std::size_t n = common_length(series);
  if (series.size() == 1) mode = StackingMode::kUnivariate;
  PairMatrix y = stack(series, window, mode);
  EigenPairs eig = eigen_sym(symbolic_covariance(y), rank_eps);
  return Decomposition(mode, window, series.size(), n, std::move(y), std::move(eig));
}

}  // namespace ivssa
