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

// Property suite over the whole library: one entry per acceptance property
// that can be checked in-process. Each check draws its random inputs from a
// std::mt19937_64 seeded from the options, so runs are reproducible.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsmax {

struct InvariantResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Worst measured quantity against its threshold, plus any failed sub-checks.
  std::string detail;
  std::vector<std::string> failures;
};

struct InvariantOptions {
  std::uint64_t seed = 0x5253'4d41'5801ULL;
};

inline constexpr int kInvariantCount = 10;

/// Runs check `id` in 1..kInvariantCount; throws UsageError otherwise.
InvariantResult run_invariant(int id, const InvariantOptions& options = {});
std::vector<InvariantResult> run_invariants(const InvariantOptions& options = {});

}  // namespace rsmax
