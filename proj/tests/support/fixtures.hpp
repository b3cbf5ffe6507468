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

#ifndef LEAFSPACE_TESTS_SUPPORT_FIXTURES_HPP_
#define LEAFSPACE_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <vector>

#include "leafspace/corpus.hpp"

namespace leafspace::fixture {

inline Attachment v(std::string id) { return VertexEnd{std::move(id)}; }
inline Attachment j(std::string id) { return JunctionStem{std::move(id)}; }
inline Attachment f(std::string id) { return Free{std::move(id)}; }

inline Description y_neg() { return builtin("y-neg").description(); }

// Two positive junctions hanging off the two members of J. Without member
// orders the u- and v-branches could be swapped.
inline Description mirror() {
  return {{"w", "u", "v", "a", "a2", "b", "b2"},
          {{"e0", f("n0"), v("w")},
           {"e1", v("w"), j("J")},
           {"e2", v("u"), v("a")},
           {"e3", v("v"), v("b")},
           {"e4", j("P"), f("Y1")},
           {"e5", j("Q"), f("Y2")},
           {"e6", f("m1"), v("a2")},
           {"e7", f("m2"), v("b2")}},
          {{"J", {"u", "v"}}, {"P", {"a", "a2"}}, {"Q", {"b2", "b"}}}};
}

inline std::vector<LeafSpace> seeded(std::size_t count, std::size_t max_junctions, std::size_t arity,
                                     std::uint64_t base = 1000) {
  std::vector<LeafSpace> out;
  for (const GeneratorConfig& c : corpus_configs(count, base, max_junctions, arity)) out.push_back(generate(c));
  return out;
}

}  // namespace leafspace::fixture

#endif  // LEAFSPACE_TESTS_SUPPORT_FIXTURES_HPP_
