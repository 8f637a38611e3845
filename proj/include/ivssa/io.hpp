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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ivssa/interval.hpp"

namespace ivssa::io {

/// Parses `label,lo,hi` or the wide `label,lo_1,hi_1,...,lo_D,hi_D` layout.
/// The header row is required. Malformed rows raise kParse and rows with
/// lo > hi raise kInvalidValue, both naming the 1-based line number. Fewer
/// than 4 data rows raise kInvalidValue.
std::vector<IntervalSeries> parse_csv(std::string_view text);
std::vector<IntervalSeries> read_csv(const std::filesystem::path& path);

/// Same layout as parse_csv accepts. Labels come from the first series, or
/// are 1-based row numbers when it has none. Numbers use 12 significant
/// digits.
std::string format_csv(const std::vector<IntervalSeries>& series);

/// printf("%.*g") rendering.
std::string format_number(double value, int significant_digits);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ivssa::io
