// Copyright 2026 The leafspace Authors
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

#ifndef LEAFSPACE_TOOLS_BATTERY_HPP_
#define LEAFSPACE_TOOLS_BATTERY_HPP_

// The invariant battery behind `leafspace check`.

#include <cstddef>
#include <string>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace::cli {

struct CheckResult {
  std::string name;
  std::size_t count = 0;     // queries evaluated
  std::size_t failures = 0;
  std::string witness;       // first failure, as a rerunnable command
};

struct BatteryReport {
  std::vector<CheckResult> checks;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  bool passed() const;
};

/// Brute-force maximal cliques (size >= 2) of the non-separation relation
/// on vertices, with vertices and edge midpoints as separating
/// candidates. Each clique sorted by identifier, list sorted.
std::vector<std::vector<std::string>> nonseparation_cliques(const LeafSpace& space);

/// `file` is used only to phrase witness lines.
BatteryReport run_battery(const LeafSpace& space, const std::string& file);

}  // namespace leafspace::cli

#endif  // LEAFSPACE_TOOLS_BATTERY_HPP_
