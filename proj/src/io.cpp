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


#include "ivssa/io.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ivssa/error.hpp"

namespace ivssa::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<IntervalSeries> parse_csv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t series_count = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Interval>> values;
  std::size_t line_no = 0;
  bool have_header = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    const auto fields = split(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (fields.size() < 3 || fields.size() % 2 == 0)
        fail(ErrorKind::kParse, where + "header must be label,lo,hi or label,lo_1,hi_1,...");
      for (std::size_t f = 1; f < fields.size(); ++f) {
        const std::string name = lower(fields[f]);
        const char* want = f % 2 == 1 ? "lo" : "hi";
        if (name.rfind(want, 0) != 0)
          fail(ErrorKind::kParse, where + "expected a '" + want + "' column, found '" +
                                      std::string(fields[f]) + "'");
      }
      series_count = (fields.size() - 1) / 2;
      values.resize(series_count);
      have_header = true;
      continue;
    }

    if (fields.size() != 2 * series_count + 1)
      fail(ErrorKind::kParse, where + "expected " + std::to_string(2 * series_count + 1) +
                                  " fields, found " + std::to_string(fields.size()));
    labels.emplace_back(fields[0]);
    for (std::size_t s = 0; s < series_count; ++s) {
      double lo = 0.0, hi = 0.0;
      if (!parse_double(fields[1 + 2 * s], lo) || !parse_double(fields[2 + 2 * s], hi))
        fail(ErrorKind::kParse, where + "non-numeric interval bound");
      if (!std::isfinite(lo) || !std::isfinite(hi))
        fail(ErrorKind::kInvalidValue, where + "non-finite interval bound");
      if (lo > hi)
        fail(ErrorKind::kInvalidValue, where + "lower bound exceeds upper bound (series " +
                                           std::to_string(s + 1) + ")");
      values[s].emplace_back(lo, hi);
    }
  }
  if (!have_header) fail(ErrorKind::kParse, "empty CSV input");
  if (labels.size() < 4)
    fail(ErrorKind::kInvalidValue, "need at least 4 data rows, found " + std::to_string(labels.size()));

  std::vector<IntervalSeries> out;
  out.reserve(series_count);
  for (auto& v : values) out.emplace_back(std::move(v), labels);
  return out;
}

std::vector<IntervalSeries> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::string format_number(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

std::string format_csv(const std::vector<IntervalSeries>& series) {
  if (series.empty()) return {};
  std::string out = "label";
  if (series.size() == 1) {
    out += ",lo,hi\n";
  } else {
    for (std::size_t s = 1; s <= series.size(); ++s)
      out += ",lo_" + std::to_string(s) + ",hi_" + std::to_string(s);
    out += '\n';
  }
  const std::size_t n = series.front().size();
  for (std::size_t t = 0; t < n; ++t) {
    out += series.front().has_labels() ? series.front().labels()[t] : std::to_string(t + 1);
    for (const auto& s : series) {
      out += ',' + format_number(s[t].lo(), 12);
      out += ',' + format_number(s[t].hi(), 12);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::kConfig, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(ErrorKind::kConfig, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ivssa::io
