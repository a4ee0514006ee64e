// Copyright 2026 The rsmax Authors
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

#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace rsmax::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto p = s.find(sep);
    out.push_back(trim(s.substr(0, p)));
    if (p == std::string_view::npos) return out;
    s.remove_prefix(p + 1);
  }
}

int axis_index(std::string_view name) {
  if (name == "x0") return 0;
  if (name == "x1") return 1;
  if (name == "x2") return 2;
  if (name == "x3") return 3;
  throw ConfigError("unknown axis '" + std::string(name) + "' (expected x0..x3)");
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || p != text.data() + text.size() || !std::isfinite(v))
    throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

int parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  int v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || p != text.data() + text.size())
    throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap kv;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    kv[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return kv;
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const auto& r : ranges)
    if (r) n *= static_cast<std::size_t>(r->count);
  return n;
}

std::array<double, 4> GridSpec::point(std::size_t index) const {
  std::array<double, 4> x = fixed;
  for (int a = 3; a >= 0; --a) {
    const auto& r = ranges[static_cast<std::size_t>(a)];
    if (!r) continue;
    const auto n = static_cast<std::size_t>(r->count);
    const std::size_t i = index % n;
    index /= n;
    x[static_cast<std::size_t>(a)] =
        r->count == 1 ? r->min
                      : r->min + (r->max - r->min) * static_cast<double>(i) /
                                     static_cast<double>(r->count - 1);
  }
  return x;
}

GridSpec parse_grid(std::string_view grid, std::string_view fix) {
  GridSpec g;
  std::array<bool, 4> fixed_seen{};
  if (!trim(fix).empty()) {
    for (std::string_view item : split(fix, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError("fix entry '" + std::string(item) + "' must be axis=value");
      const int a = axis_index(trim(item.substr(0, eq)));
      if (fixed_seen[static_cast<std::size_t>(a)])
        throw ConfigError("axis fixed twice in '" + std::string(fix) + "'");
      fixed_seen[static_cast<std::size_t>(a)] = true;
      g.fixed[static_cast<std::size_t>(a)] = parse_number(item.substr(eq + 1), "fix value");
    }
  }
  if (!trim(grid).empty()) {
    for (std::string_view item : split(grid, ',')) {
      const auto parts = split(item, ':');
      if (parts.size() != 4)
        throw ConfigError("grid entry '" + std::string(item) + "' must be axis:min:max:count");
      const int a = axis_index(parts[0]);
      const auto ua = static_cast<std::size_t>(a);
      if (g.ranges[ua]) throw ConfigError("axis " + std::string(parts[0]) + " ranged twice");
      if (fixed_seen[ua])
        throw ConfigError("axis " + std::string(parts[0]) + " is both ranged and fixed");
      AxisRange r{parse_number(parts[1], "grid min"), parse_number(parts[2], "grid max"),
                  parse_count(parts[3], "grid count")};
      if (r.count < 0) throw ConfigError("grid count must be >= 0");
      if (r.min > r.max) throw ConfigError("grid min must not exceed max");
      g.ranges[ua] = r;
    }
  }
  return g;
}

LambdaSelection parse_lambda(std::string_view text) {
  text = trim(text);
  LambdaSelection s;
  if (text == "solve") return s;
  if (text.substr(0, 6) == "basis:") {
    s.mode = LambdaMode::Basis;
    s.index = parse_count(text.substr(6), "basis index");
    if (s.index < 0) throw ConfigError("basis index must be >= 0");
    return s;
  }
  const auto parts = split(text, ',');
  if (parts.size() != 8)
    throw ConfigError("lambda must be 'solve', 'basis:N' or eight numbers "
                      "re0,im0,re1,im1,re2,im2,re3,im3");
  s.mode = LambdaMode::Explicit;
  for (std::size_t i = 0; i < 8; ++i) s.values[i] = parse_number(parts[i], "lambda");
  return s;
}

OutputFormat parse_format(std::string_view text) {
  text = trim(text);
  if (text == "csv") return OutputFormat::Csv;
  if (text == "jsonl") return OutputFormat::Jsonl;
  throw ConfigError("format must be csv or jsonl, got '" + std::string(text) + "'");
}

}  // namespace rsmax::cli
