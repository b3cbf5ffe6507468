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

#ifndef LEAFSPACE_TESTS_SUPPORT_ORACLES_HPP_
#define LEAFSPACE_TESTS_SUPPORT_ORACLES_HPP_

// Reference computations for tests. They work on the raw description
// with a plain adjacency list and share no code with the library's
// incidence tree.

#include <map>
#include <string>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace::oracle {

/// Node names: "v:<id>", "j:<id>", "free:<end>", and "e:<id>" for the
/// interior of each edge.
class Graph {
 public:
  explicit Graph(const Description& d);

  /// Unique simple path between two nodes, both ends included.
  std::vector<std::string> path(const std::string& a, const std::string& b) const;

  const std::vector<std::string>& neighbours(const std::string& node) const { return adj_.at(node); }
  const std::vector<std::string>& members(const std::string& junction) const { return members_.at(junction); }
  bool is_member(const std::string& vertex, const std::string& junction) const;

 private:
  std::map<std::string, std::vector<std::string>> adj_;
  std::map<std::string, std::vector<std::string>> members_;
};

/// a, b not separated by any point: their path is a, j:J, b.
bool nonseparated(const Graph& g, const std::string& va, const std::string& vb);

/// Maximal cliques (size >= 2) of `nonseparated` on vertices, each sorted,
/// list sorted.
std::vector<std::vector<std::string>> cataclysm_sets(const LeafSpace& space);

/// Same cliques, but the relation is taken from the library's separates()
/// over all vertices and edge midpoints.
std::vector<std::vector<std::string>> cataclysm_sets_via_separates(const LeafSpace& space);

struct Count {
  int positive = 0;
  int negative = 0;
  int n() const { return positive - negative; }
};

/// Concatenates the walk x1 -> base with base -> x2 (base: the first
/// vertex, or the edge interior for junction-free models), deletes
/// back-tracks, and counts member-to-member junction jumps.
Count cusps_between_ends(const LeafSpace& space, const std::string& x1, const std::string& x2);

/// Positive ends sorted so that x precedes y iff n(x, y) < 0, using the
/// number of ends below each end.
std::vector<std::string> end_order(const LeafSpace& space);

/// Sign of a junction read straight off its stem edge.
Sign stem_sign(const Description& d, const std::string& junction);

}  // namespace leafspace::oracle

#endif  // LEAFSPACE_TESTS_SUPPORT_ORACLES_HPP_
