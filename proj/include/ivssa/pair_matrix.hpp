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

#include "ivssa/interval.hpp"

namespace ivssa {

/// Dense row-major matrix of ordered pairs. Storage is interleaved: row r
/// holds a_{r,0}, b_{r,0}, a_{r,1}, b_{r,1}, ...
class PairMatrix {
 public:
  PairMatrix() = default;
  /// Zero-filled rows x cols matrix; both dimensions must be positive.
  PairMatrix(std::size_t rows, std::size_t cols);
  PairMatrix(std::initializer_list<std::initializer_list<OrderedPair>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  OrderedPair operator()(std::size_t r, std::size_t c) const {
    const double* p = &data_[2 * (r * cols_ + c)];
    return {p[0], p[1]};
  }
  void set(std::size_t r, std::size_t c, OrderedPair value) {
    double* p = &data_[2 * (r * cols_ + c)];
    p[0] = value.a;
    p[1] = value.b;
  }

  /// 2 * cols() interleaved doubles.
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + 2 * r * cols_, 2 * cols_};
  }
  std::span<double> row(std::size_t r) {
    return {data_.data() + 2 * r * cols_, 2 * cols_};
  }
  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  /// Contiguous sub-block copy.
  PairMatrix block(std::size_t row0, std::size_t col0, std::size_t rows,
                   std::size_t cols) const;

  PairMatrix& operator+=(const PairMatrix& other);
  PairMatrix& operator-=(const PairMatrix& other);

  friend bool operator==(const PairMatrix&, const PairMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Entrywise (a + c, b + d). No reordering.
PairMatrix minkowski_add(const PairMatrix& lhs, const PairMatrix& rhs);
/// Entrywise (a - c, b - d). No reordering.
PairMatrix minkowski_sub(const PairMatrix& lhs, const PairMatrix& rhs);

/// (1/sqrt 2) * sqrt(sum a^2 + b^2); equals Frobenius on a == b matrices.
double c_norm(const PairMatrix& m);

/// True when every antidiagonal i + j = s is constant to within `tol` in
/// both pair components.
bool is_hankel(const PairMatrix& m, double tol);

/// is_hankel with the default tolerance 1e-9 * c_norm(m).
bool is_hankel(const PairMatrix& m);

}  // namespace ivssa
