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

#include <filesystem>
#include <fstream>
#include <string>

#include "ivssa/io.hpp"
#include "support.hpp"

using namespace ivssa;
using testing::kind_of;

namespace {

std::string message_of(std::string_view text) {
  try {
    io::parse_csv(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse the long layout") {
  const auto s = io::parse_csv("date,lo,hi\n2020-01,1,2\n2020-02,1.5,1.5\n2020-03,-3,4e1\n2020-04,0,1\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].size() == 4);
  CHECK(s[0][2] == Interval(-3, 40));
  CHECK(s[0].labels()[1] == "2020-02");
}

TEST_CASE("parse the wide layout with CRLF and blank lines") {
  const auto s = io::parse_csv("t,LO_1,HI_1,lo_2,hi_2\r\n1,0,1,5,6\r\n\r\n2,0,2,5,7\n3,0,3,5,8\n4,0,4,5,9\n");
  REQUIRE(s.size() == 2);
  CHECK(s[1][3] == Interval(5, 9));
  CHECK(s[0].labels() == s[1].labels());
}

TEST_CASE("parse errors name the line") {
  CHECK(kind_of([] { io::parse_csv("t,lo,hi\n1,0,1\n2,x,1\n3,0,1\n4,0,1\n"); }) == ErrorKind::kParse);
  CHECK(message_of("t,lo,hi\n1,0,1\n2,x,1\n3,0,1\n4,0,1\n").find("line 3") != std::string::npos);
  CHECK(kind_of([] { io::parse_csv("t,lo,hi\n1,0,1\n2,3,1\n3,0,1\n4,0,1\n"); }) ==
        ErrorKind::kInvalidValue);
  CHECK(message_of("t,lo,hi\n1,0,1\n\n2,3,1\n3,0,1\n4,0,1\n").find("line 4") != std::string::npos);
  CHECK(kind_of([] { io::parse_csv("t,lo,hi\n1,0,1\n2,0\n3,0,1\n4,0,1\n"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::parse_csv("t,hi,lo\n1,0,1\n"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::parse_csv("t,lo,hi\n1,0,1\n2,0,1\n3,0,1\n"); }) == ErrorKind::kInvalidValue);
  CHECK(kind_of([] { io::parse_csv("t,lo,hi\n1,nan,1\n2,0,1\n3,0,1\n4,0,1\n"); }) ==
        ErrorKind::kInvalidValue);
  CHECK(kind_of([] { io::parse_csv(""); }) == ErrorKind::kParse);
  CHECK(kind_of([] { io::read_csv("/nonexistent/file.csv"); }) == ErrorKind::kParse);
}

TEST_CASE("format and parse round trip") {
  const IntervalSeries a = testing::random_series(25, 1), b = testing::random_series(25, 2);
  const std::vector<IntervalSeries> both{a, b};
  const auto back = io::parse_csv(io::format_csv(both));
  REQUIRE(back.size() == 2);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 25; ++t) {
      CHECK(back[s][t].lo() == doctest::Approx(both[s][t].lo()).epsilon(1e-11));
      CHECK(back[s][t].hi() == doctest::Approx(both[s][t].hi()).epsilon(1e-11));
    }
  CHECK(back[0].labels().front() == "1");
  CHECK(io::format_csv({a}).rfind("label,lo,hi\n", 0) == 0);
  CHECK(io::format_number(1.0 / 3.0, 12) == "0.333333333333");
}

TEST_CASE("atomic write replaces the target") {
  const auto dir = std::filesystem::temp_directory_path() / "ivssa_test_io";
  std::filesystem::remove_all(dir);
  const auto path = dir / "sub" / "out.txt";
  io::write_file_atomic(path, "first");
  io::write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string got;
  std::getline(in, got);
  CHECK(got == "second");
  CHECK(!std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}
