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

#ifndef LEAFSPACE_CORPUS_HPP_
#define LEAFSPACE_CORPUS_HPP_

// Named example models, the seeded random generator, the .lsp text
// format and graph export.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace {

/// line, y-neg, y-pos, y3, two-sided, figure-alpha (alias figure-α),
/// figure-ends. Throws UnknownName.
LeafSpace builtin(std::string_view name);
std::vector<std::string> builtin_names();

constexpr std::size_t kMaxGeneratedJunctions = 64;

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t junction_count = 0;
  std::size_t max_arity = 3;
  double sign_bias = 0.5;  // probability of a positive junction
};

/// Starts from the line model and inserts junctions one at a time, each
/// splitting a uniformly chosen edge. Deterministic in the config.
/// Throws ConfigBound.
LeafSpace generate(const GeneratorConfig& cfg);

/// Configs for a seeded corpus: junction counts cycle through
/// 0..max_junctions, biases through a fixed list.
std::vector<GeneratorConfig> corpus_configs(std::size_t count, std::uint64_t base_seed, std::size_t max_junctions,
                                            std::size_t max_arity);

/// Parses the .lsp text format. Throws SyntaxError ("line N: ...").
Description parse_description(std::string_view text);

/// parse_description() followed by validation; a bad model throws
/// ValidationFailed carrying the full report.
LeafSpace parse(std::string_view text);

/// Canonical text: vertices, edges, junctions, each sorted by identifier.
std::string serialize(const LeafSpace& space);
std::string serialize(const Description& d);

/// Graphviz DOT. With `annotate`, positive ends carry their rank in the
/// end order (1 = least).
std::string export_graph(const LeafSpace& space, bool annotate = false);

}  // namespace leafspace

#endif  // LEAFSPACE_CORPUS_HPP_
