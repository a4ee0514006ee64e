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

// Run configuration for the command-line tool: a flat key=value file whose
// run keys can be overridden by flags.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsmax::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ConfigMap = std::map<std::string, std::string, std::less<>>;

/// "key = value" lines; '#' comments; blank lines ignored.
ConfigMap parse_config_text(std::string_view text);

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
};

/// Ranged axes are swept; the others sit at their fixed value (default 0).
/// Points are ordered lexicographically with x0 slowest and x3 fastest.
struct GridSpec {
  std::array<std::optional<AxisRange>, 4> ranges;
  std::array<double, 4> fixed{};

  std::size_t size() const;
  std::array<double, 4> point(std::size_t index) const;
};

/// grid: "x1:-1:1:11,x3:0:2:5"; fix: "x0=0,x2=0.5". An axis may not be both.
GridSpec parse_grid(std::string_view grid, std::string_view fix);

enum class LambdaMode { Explicit, Basis, Solve };

struct LambdaSelection {
  LambdaMode mode = LambdaMode::Solve;
  int index = 0;
  /// Interleaved (re0, im0, re1, im1, re2, im2, re3, im3).
  std::array<double, 8> values{};
};

/// "basis:N", "solve" (first physical basis vector) or eight numbers.
LambdaSelection parse_lambda(std::string_view text);

enum class OutputFormat { Csv, Jsonl };
OutputFormat parse_format(std::string_view text);

struct RunConfig {
  std::string seed_text;
  LambdaSelection lambda;
  GridSpec grid;
  double h = 1e-4;
  double tol = 1e-6;
  double tol_rank = 1e-9;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
  std::optional<double> c;
};

/// Run keys recognised in the seed file.
inline constexpr std::array<std::string_view, 9> kRunKeys{
    "lambda", "grid", "fix", "h", "tol", "tol_rank", "format", "out", "c"};

double parse_number(std::string_view text, std::string_view what);
int parse_count(std::string_view text, std::string_view what);

}  // namespace rsmax::cli
