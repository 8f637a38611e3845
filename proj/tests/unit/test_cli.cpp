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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivssa/cli.hpp"
#include "ivssa/error.hpp"
#include "ivssa/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = IVSSA_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ivssa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ivssa::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ivssa_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void skeleton(const json& j, const std::string& prefix, std::set<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      out.insert(prefix + "/" + k);
      skeleton(v, prefix + "/" + k, out);
    }
  } else if (j.is_array() && !j.empty()) {
    skeleton(j.front(), prefix + "[]", out);
  }
}

}  // namespace

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  const auto bad_row = write(dir / "bad.csv", "t,lo,hi\n1,0,1\n2,5,2\n3,0,1\n4,0,1\n");
  const auto garbage = write(dir / "garbage.csv", "t,lo,hi\n1,0,1\n2,zz,2\n3,0,1\n4,0,1\n");
  const auto flat = write(dir / "flat.csv", "t,lo,hi\n1,0,0\n2,0,0\n3,0,0\n4,0,0\n5,0,0\n");
  const std::string fixture = (kFixtures / "degenerate.csv").string();

  CHECK(invoke({"decompose", "--input", garbage.string()}).code == 2);
  const Run r = invoke({"decompose", "--input", bad_row.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(invoke({"decompose", "--input", flat.string()}).code == 4);
  CHECK(invoke({"decompose", "--input", fixture, "--grouping", "fixed:0"}).code == 5);
  CHECK(invoke({"decompose", "--input", fixture, "--window", "abc"}).code == 5);
  CHECK(invoke({"decompose"}).code == 5);
  CHECK(invoke({"frobnicate"}).code == 5);
  CHECK(invoke({"forecast", "--input", fixture, "--window", "2", "--grouping", "fixed:2"}).code == 4);
  CHECK(invoke({"simulate", "--n", "8"}).code == 0);

  const std::string cmd = std::string(IVSSA_CLI_PATH) + " decompose --input " + bad_row.string() +
                          " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("decompose with all components round-trips the input") {
  const fs::path dir = scratch("roundtrip");
  const auto input = kFixtures / "weekly_index.csv";
  const Run r = invoke({"decompose", "--input", input.string(), "--grouping", "all", "--window", "40",
                        "--out", dir.string()});
  REQUIRE(r.code == 0);
  const json doc = json::parse(slurp(dir / "decompose.json"));
  const auto y = ivssa::io::read_csv(input).front();
  const std::size_t n = y.size();
  std::vector<double> a(n, 0.0), b(n, 0.0);
  for (const auto& erc : doc["ercs"])
    for (std::size_t t = 0; t < n; ++t) {
      a[t] += erc["series"][0]["a"][t].get<double>();
      b[t] += erc["series"][0]["b"][t].get<double>();
    }
  double worst = 0.0;
  for (std::size_t t = 0; t < n; ++t)
    worst = std::max({worst, std::abs(a[t] - y[t].lo()) / std::abs(y[t].lo()),
                      std::abs(b[t] - y[t].hi()) / std::abs(y[t].hi())});
  CHECK(worst <= 1e-8);
  CHECK(doc["labels"][0] == "2019-01-04");
  CHECK(doc["window_rule"] == "user");
  CHECK(doc["ivssa_version"] == ivssa::cli::kVersion);
}

TEST_CASE("decompose of point data matches the classical SSA fixture") {
  const json ref = json::parse(slurp(kFixtures / "degenerate_ssa.json"));
  const std::size_t window = ref["window"];
  const json doc = ivssa::cli::cmd_decompose([&] {
    ivssa::cli::RunConfig c;
    c.command = "decompose";
    c.input = kFixtures / "degenerate.csv";
    c.window = window;
    c.grouping = ivssa::cli::GroupingSpec::parse("fixed:4");
    return c;
  }());
  const double top = ref["eigenvalues"][0];
  for (std::size_t i = 0; i < window; ++i)
    CHECK(std::abs(doc["eigenvalues"][i].get<double>() - ref["eigenvalues"][i].get<double>()) <=
          1e-9 * top);
  for (std::size_t c = 0; c < ref["ercs"].size(); ++c) {
    const auto& want = ref["ercs"][c];
    const auto& got = doc["ercs"][c]["series"][0];
    for (std::size_t t = 0; t < want.size(); ++t) {
      CHECK(std::abs(got["lo"][t].get<double>() - want[t].get<double>()) <= 1e-8);
      CHECK(std::abs(got["hi"][t].get<double>() - want[t].get<double>()) <= 1e-8);
    }
  }
}

TEST_CASE("forecast on the weekly fixture") {
  const fs::path dir = scratch("forecast");
  const Run r = invoke({"forecast", "--input", (kFixtures / "weekly_index.csv").string(), "--horizon",
                        "12", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote forecast") != std::string::npos);
  const json doc = json::parse(slurp(dir / "forecast.json"));
  REQUIRE(doc["forecast"]["lo"].size() == 12);
  for (std::size_t h = 0; h < 12; ++h) {
    CHECK(doc["forecast"]["lo"][h].get<double>() <= doc["forecast"]["hi"][h].get<double>());
    CHECK(std::isfinite(doc["forecast"]["lo"][h].get<double>()));
  }
  CHECK(doc["window"] == 125);
  CHECK(doc["window_rule"] == "auto");
  const auto csv = ivssa::io::read_csv(dir / "forecast.csv");
  CHECK(csv.front().size() == 12);
  CHECK(csv.front().labels().front() == "t+1");
}

TEST_CASE("select-params and oos grouping") {
  const std::string input = (kFixtures / "weekly_index.csv").string();
  const Run r = invoke({"select-params", "--input", input, "--horizon", "1", "--l-grid", "20,40",
                        "--m-grid", "1,2", "--stride", "10"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["oos"]["table"].size() == 4);
  CHECK(doc["oos"]["w0"] == 126);
  const Run f = invoke({"forecast", "--input", input, "--grouping", "oos", "--horizon", "2",
                        "--l-grid", "20,40", "--m-grid", "1,2", "--stride", "20"});
  REQUIRE(f.code == 0);
  const json fd = json::parse(f.out);
  CHECK(fd["m"] == fd["oos"]["m_star"]);
  CHECK(fd["window"] == fd["oos"]["l_star"]);
}

TEST_CASE("multivariate decompose and csv output") {
  const fs::path dir = scratch("multi");
  const Run sim = invoke({"simulate", "--scenario", "B", "--n", "60", "--seed", "3", "--out",
                          dir.string(), "--format", "csv"});
  REQUIRE(sim.code == 0);
  for (const char* stack : {"vertical", "horizontal"}) {
    const Run r = invoke({"decompose", "--input", (dir / "simulate.csv").string(), "--stack", stack,
                          "--out", dir.string(), "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto trends = ivssa::io::read_csv(dir / "decompose_trendline.csv");
    CHECK(trends.size() == 2);
    CHECK(trends[0].size() == 60);
  }
  const Run sel = invoke({"select", "--input", (dir / "simulate.csv").string()});
  REQUIRE(sel.code == 0);
  CHECK(json::parse(sel.out)["selection"].size() == 2);
}

TEST_CASE("mc output is deterministic") {
  const fs::path a = scratch("mc_a"), b = scratch("mc_b");
  const std::vector<std::string> args{"mc", "--reps", "3", "--seed", "7", "--n-list", "30",
                                      "--m-list", "1,2"};
  auto with = [&](const fs::path& dir) {
    auto v = args;
    v.push_back("--out");
    v.push_back(dir.string());
    return v;
  };
  REQUIRE(invoke(with(a)).code == 0);
  setenv("IVSSA_THREADS", "3", 1);
  REQUIRE(invoke(with(b)).code == 0);
  unsetenv("IVSSA_THREADS");
  CHECK(slurp(a / "mc.json") == slurp(b / "mc.json"));
  CHECK(slurp(a / "mc.csv") == slurp(b / "mc.csv"));
  const json doc = json::parse(slurp(a / "mc.json"));
  CHECK(doc["config"]["seed"] == 7);
  CHECK(doc["groups"].size() == 6);
}

TEST_CASE("decompose JSON keys match the golden skeleton") {
  ivssa::cli::RunConfig c;
  c.command = "decompose";
  c.input = kFixtures / "degenerate.csv";
  std::set<std::string> keys;
  skeleton(ivssa::cli::cmd_decompose(c), "", keys);
  std::string got;
  for (const auto& k : keys) got += k + "\n";

  const fs::path golden = kFixtures / "decompose_keys.golden";
  if (std::getenv("IVSSA_UPDATE_GOLDEN")) std::ofstream(golden) << got;
  CHECK(got == slurp(golden));
}

TEST_CASE("validate_intervals catches inverted output") {
  const json good = {{"x", {{"lo", {1, 2}}, {"hi", {1, 3}}}}};
  ivssa::cli::validate_intervals(good);
  const json bad = {{"x", json::array({{{"lo", {1, 4}}, {"hi", {1, 3}}}})}};
  CHECK_THROWS_AS(ivssa::cli::validate_intervals(bad), ivssa::Error);
}
