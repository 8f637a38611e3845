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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivssa/embedding.hpp"
#include "ivssa/simulation.hpp"

namespace ivssa::cli {

inline constexpr const char* kVersion = "0.1.0";

struct GroupingSpec {
  enum class Kind { kPeriodogram, kFixed, kAll, kOos };
  Kind kind = Kind::kPeriodogram;
  std::size_t m = 0;   // kFixed only

  /// "periodogram", "fixed:M", "all" or "oos"; throws kConfig otherwise.
  static GroupingSpec parse(const std::string& text);
  std::string str() const;
};

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::optional<std::size_t> window;   // empty = auto
  GroupingSpec grouping;
  double alpha = 0.05;
  std::size_t horizon = 12;
  StackingMode stack = StackingMode::kVertical;
  std::uint64_t seed = 1;
  std::size_t reps = 200;
  bool full_study = false;             // mc: reps = 1000, n in {100, 250, 1000}
  std::optional<std::filesystem::path> out_dir;
  OutputFormat format = OutputFormat::kJson;
  std::size_t max_m = 0;
  std::optional<std::size_t> ercs;     // decompose: ERCs emitted (default all)
  bool center = false;
  // select-params
  std::optional<std::size_t> first_window;
  std::vector<std::size_t> l_grid, m_grid;
  std::size_t stride = 1;
  // simulate / mc
  std::vector<Scenario> scenarios{Scenario::kA, Scenario::kB};
  std::size_t n = 100;
  std::vector<std::size_t> n_list{100, 250};
  std::vector<std::size_t> m_list{1, 2, 3, 4, 5, 6};
  std::vector<Method> methods{Method::kIvssa, Method::kVertical, Method::kHorizontal};

  /// Throws kConfig on inconsistent settings.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Each command returns the JSON document it emits and writes its
/// artifacts under out_dir when one is set.
nlohmann::json cmd_decompose(const RunConfig& config);
nlohmann::json cmd_select(const RunConfig& config);
nlohmann::json cmd_forecast(const RunConfig& config);
nlohmann::json cmd_select_params(const RunConfig& config);
nlohmann::json cmd_simulate(const RunConfig& config);
nlohmann::json cmd_mc(const RunConfig& config);

/// Throws kInvalidValue if any {"lo": [...], "hi": [...]} object in the
/// document has lo > hi.
void validate_intervals(const nlohmann::json& doc);

/// Parses argv, runs the subcommand and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ivssa::cli
