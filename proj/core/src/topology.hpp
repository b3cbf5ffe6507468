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

#ifndef LEAFSPACE_SRC_TOPOLOGY_HPP_
#define LEAFSPACE_SRC_TOPOLOGY_HPP_

// Incidence tree of a validated model. Private to the core library.

#include <string>
#include <unordered_map>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace::detail {

enum class NodeKind { Vertex, Junction, End };
enum class ArcKind { Edge, Membership };

struct Arc {
  int to = -1;
  ArcKind kind = ArcKind::Edge;
  int edge = -1;      // ArcKind::Edge
  int junction = -1;  // ArcKind::Membership
  int member = -1;    // ArcKind::Membership, vertex index
  bool up = true;     // travelling along this arc follows the orientation
};

struct Node {
  NodeKind kind;
  int index;
  std::vector<Arc> arcs;
};

/// A position in the tree: a node (vertex or end marker) or a point in
/// the interior of an edge.
struct Location {
  int node = -1;
  int edge = -1;
  Rational pos{0};

  bool on_edge() const { return edge >= 0; }
  friend bool operator==(const Location& a, const Location& b) {
    return a.node == b.node && a.edge == b.edge &&
           (a.edge < 0 || a.pos == b.pos);
  }
};

/// One traversed arc. Partial edge traversals start or stop inside an
/// edge, in which case from/to is -1. Positions are edge coordinates.
struct Step {
  Arc arc;
  int from = -1;
  int to = -1;
  Rational from_pos{0};
  Rational to_pos{0};
};

struct Topology {
  Description canonical;

  std::unordered_map<std::string, int> vertex_index;
  std::unordered_map<std::string, int> edge_index;
  std::unordered_map<std::string, int> junction_index;
  std::unordered_map<std::string, int> end_index;

  std::vector<Sign> junction_signs;
  std::vector<int> stem_edge;
  std::vector<EndRef> end_refs;  // sorted by name

  std::vector<Node> nodes;
  std::vector<int> edge_lower_node;
  std::vector<int> edge_upper_node;

  std::vector<int> parent;
  std::vector<int> depth;

  int vertex_count() const { return static_cast<int>(canonical.vertices.size()); }
  int junction_count() const { return static_cast<int>(canonical.junctions.size()); }
  int vertex_node(int v) const { return v; }
  int junction_node(int j) const { return vertex_count() + j; }
  int end_node(int k) const { return vertex_count() + junction_count() + k; }

  int vertex_of(std::string_view id) const;
  int edge_of(std::string_view id) const;
  int junction_of(std::string_view id) const;

  Location locate(const PointRef& p) const;
  Location locate(const EndRef& x) const;

  std::vector<int> node_path(int a, int b) const;
  const Arc& arc_between(int a, int b) const;

  /// Unique simple walk between two distinct locations.
  std::vector<Step> walk(const Location& a, const Location& b) const;

  std::string node_label(int node) const;
};

}  // namespace leafspace::detail

#endif  // LEAFSPACE_SRC_TOPOLOGY_HPP_
