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

#include "ivssa/pair_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ivssa/error.hpp"

namespace ivssa {

namespace {

void require_same_shape(const PairMatrix& x, const PairMatrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    fail(ErrorKind::kShape, std::string(op) + ": " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) +
                                "x" + std::to_string(y.cols()));
}

}  // namespace

PairMatrix::PairMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(2 * rows * cols, 0.0) {
  if (rows == 0 || cols == 0) fail(ErrorKind::kShape, "pair matrix dimensions must be positive");
}

PairMatrix::PairMatrix(std::initializer_list<std::initializer_list<OrderedPair>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) fail(ErrorKind::kShape, "pair matrix dimensions must be positive");
  data_.reserve(2 * rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::kShape, "ragged pair matrix initializer");
    for (const auto& p : r) {
      data_.push_back(p.a);
      data_.push_back(p.b);
    }
  }
}

PairMatrix PairMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                             std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_)
    fail(ErrorKind::kShape, "pair matrix block out of bounds");
  PairMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = row(row0 + r).subspan(2 * col0, 2 * cols);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

PairMatrix& PairMatrix::operator+=(const PairMatrix& other) {
  require_same_shape(*this, other, "minkowski_add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

PairMatrix& PairMatrix::operator-=(const PairMatrix& other) {
  require_same_shape(*this, other, "minkowski_sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

PairMatrix minkowski_add(const PairMatrix& lhs, const PairMatrix& rhs) {
  PairMatrix out = lhs;
  out += rhs;
  return out;
}

PairMatrix minkowski_sub(const PairMatrix& lhs, const PairMatrix& rhs) {
  PairMatrix out = lhs;
  out -= rhs;
  return out;
}

double c_norm(const PairMatrix& m) {
  double s = 0.0;
  for (double v : m.data()) s += v * v;
  return std::sqrt(0.5 * s);
}

bool is_hankel(const PairMatrix& m, double tol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diagonals = rows + cols - 1;
  std::vector<OrderedPair> lo(diagonals), hi(diagonals);
  std::vector<bool> seen(diagonals, false);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t s = i + j;
      const OrderedPair v = m(i, j);
      if (!seen[s]) {
        lo[s] = hi[s] = v;
        seen[s] = true;
        continue;
      }
      lo[s] = {std::min(lo[s].a, v.a), std::min(lo[s].b, v.b)};
      hi[s] = {std::max(hi[s].a, v.a), std::max(hi[s].b, v.b)};
    }
  }
  for (std::size_t s = 0; s < diagonals; ++s)
    if (hi[s].a - lo[s].a > tol || hi[s].b - lo[s].b > tol) return false;
  return true;
}

bool is_hankel(const PairMatrix& m) { return is_hankel(m, 1e-9 * c_norm(m)); }

}  // namespace ivssa
