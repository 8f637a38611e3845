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


#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ivssa/error.hpp"
#include "ivssa/interval.hpp"
#include "ivssa/pair_matrix.hpp"
#include "support.hpp"

using namespace ivssa;

using testing::kind_of;

TEST_CASE("interval constructor enforces lo <= hi") {
  CHECK(Interval(1, 2).width() == 2 - 1);
  CHECK(kind_of([] { Interval(3, 2); }) == ErrorKind::kInvalidValue);
  CHECK(kind_of([] { Interval(std::nan(""), 2); }) == ErrorKind::kInvalidValue);
}

TEST_CASE("phi orders its arguments") {
  CHECK(phi(2, -1) == Interval(-1, 2));
  CHECK(phi(3, 3) == Interval(3, 3));
  CHECK(phi(-0.5, 4.25) == Interval(-0.5, 4.25));
  CHECK(kind_of([] { phi(std::numeric_limits<double>::infinity(), 0); }) == ErrorKind::kInvalidValue);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), y = u(rng);
    CHECK(phi(x, y) == phi(y, x));
  }
}

TEST_CASE("minkowski add and sub act entrywise without reordering") {
  const PairMatrix a{{{5, 7}}}, b{{{1, 4}}};
  CHECK(minkowski_sub(a, b)(0, 0) == OrderedPair{4, 3});
  const PairMatrix c{{{1, 2}}}, d{{{3, 4}}};
  CHECK(minkowski_add(c, d)(0, 0) == OrderedPair{4, 6});

  const PairMatrix m{{{1, -2}, {3.5, 4}}, {{0, 9}, {-1, -1}}};
  const PairMatrix zero = minkowski_sub(m, m);
  for (double v : zero.data()) CHECK(v == 0.0);
  CHECK(c_norm(zero) == 0.0);

  CHECK(kind_of([&] { minkowski_add(m, a); }) == ErrorKind::kShape);
}

TEST_CASE("minkowski add is commutative and associative") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    PairMatrix x(3, 4), y(3, 4), z(3, 4);
    for (auto* m : {&x, &y, &z})
      for (double& v : m->data()) v = g(rng);
    const PairMatrix xy = minkowski_add(x, y), yx = minkowski_add(y, x);
    const PairMatrix left = minkowski_add(minkowski_add(x, y), z);
    const PairMatrix right = minkowski_add(x, minkowski_add(y, z));
    for (std::size_t i = 0; i < xy.data().size(); ++i) {
      CHECK(xy.data()[i] == yx.data()[i]);
      CHECK(left.data()[i] == doctest::Approx(right.data()[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("c_norm") {
  CHECK(c_norm(PairMatrix{{{3, 3}}}) == doctest::Approx(3.0));
  CHECK(c_norm(PairMatrix{{{3, 4}}}) == doctest::Approx(std::sqrt(12.5)));
  CHECK(c_norm(PairMatrix(2, 3)) == 0.0);

  // Degenerate matrices: equals the Frobenius norm of the scalar matrix.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    PairMatrix m(4, 5);
    double fro = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 5; ++c) {
        const double v = g(rng);
        m.set(r, c, {v, v});
        fro += v * v;
      }
    CHECK(c_norm(m) == doctest::Approx(std::sqrt(fro)).epsilon(1e-15));
  }
}

TEST_CASE("hausdorff distance") {
  CHECK(hausdorff(Interval(0, 2), Interval(1, 5)) == 3.0);
  CHECK(hausdorff(Interval(1, 1), Interval(1, 1)) == 0.0);
  CHECK(hausdorff(Interval(-2, 0), Interval(0, 0)) == 2.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  auto draw = [&] { return phi(u(rng), u(rng)); };
  for (int i = 0; i < 500; ++i) {
    const Interval x = draw(), y = draw(), z = draw();
    CHECK(hausdorff(x, y) == hausdorff(y, x));
    CHECK(hausdorff(x, z) <= hausdorff(x, y) + hausdorff(y, z) + 1e-12);
  }
}

TEST_CASE("is_hankel") {
  const PairMatrix h{{{1, 2}, {3, 4}}, {{3, 4}, {5, 6}}};
  CHECK(is_hankel(h, 0.0));
  const PairMatrix not_h{{{1, 2}, {3, 4}}, {{9, 9}, {5, 6}}};
  CHECK_FALSE(is_hankel(not_h, 0.0));
  CHECK(is_hankel(not_h, 6.0));
  CHECK(is_hankel(h));
}

TEST_CASE("interval series") {
  const std::vector<double> pts{1, 2, 3};
  const auto s = IntervalSeries::degenerate(pts);
  CHECK(s.size() == 3);
  CHECK(s[1] == Interval(2, 2));
  CHECK(s.interleaved() == std::vector<double>{1, 1, 2, 2, 3, 3});
  CHECK(kind_of([] { IntervalSeries({Interval(0, 1)}, {"a", "b"}); }) == ErrorKind::kShape);
  const PairSeries crossed{{2, 1}, {0, 0}};
  CHECK(IntervalSeries::from_pairs(crossed)[0] == Interval(1, 2));
  const IntervalSeries labelled({Interval(0, 1), Interval(1, 2), Interval(2, 3)}, {"a", "b", "c"});
  CHECK(labelled.head(2).labels() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("error kinds map onto exit codes") {
  CHECK(exit_code(ErrorKind::kParse) == 2);
  CHECK(exit_code(ErrorKind::kInvalidValue) == 3);
  CHECK(exit_code(ErrorKind::kShape) == 3);
  CHECK(exit_code(ErrorKind::kVerticality) == 4);
  CHECK(exit_code(ErrorKind::kDegenerateSpectrum) == 4);
  CHECK(exit_code(ErrorKind::kConfig) == 5);
  CHECK(exit_code(ErrorKind::kParameter) == 5);
}
