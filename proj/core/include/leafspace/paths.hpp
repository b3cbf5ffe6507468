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

#ifndef LEAFSPACE_PATHS_HPP_
#define LEAFSPACE_PATHS_HPP_

// Broken paths: the unique alternating chain of monotone segments and
// cusps joining two points (or two ends) of a model.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace {

/// Endpoint of a broken path or segment: a point of the model or an end.
using Endpoint = std::variant<AtVertex, OnEdge, EndRef>;

std::string to_string(const Endpoint& e);

/// Part of a segment's itinerary: a vertex, or a closed span [lo, hi] of
/// an edge in edge coordinates (0 = lower extremity, 1 = upper).
struct Piece {
  enum class Kind { Vertex, EdgeSpan };
  Kind kind;
  std::string id;
  Rational lo{0};
  Rational hi{0};
  friend bool operator==(const Piece& a, const Piece& b) {
    return a.kind == b.kind && a.id == b.id && a.lo == b.lo && a.hi == b.hi;
  }
};

struct Segment {
  int index = 0;  // 1-based
  Endpoint from;
  Endpoint to;
  Sign orientation = Sign::Positive;
  bool trivial = false;
  std::vector<Piece> itinerary;  // in traversal order
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A jump between two members of one junction. Positive iff `from`
/// precedes `to` in the junction's member list.
struct Cusp {
  int index = 0;  // 1-based
  std::string from;
  std::string to;
  std::string junction;
  Sign sign = Sign::Positive;
  Sign junction_sign = Sign::Negative;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

struct BrokenPath {
  Endpoint source;
  Endpoint target;
  std::vector<Segment> segments;
  std::vector<Cusp> cusps;  // segments.size() - 1 entries

  /// True iff the point lies on some segment.
  bool contains(const PointRef& p) const;

  /// The same path walked backwards: orientations and cusp signs flip.
  BrokenPath reversed() const;

  int positive_cusps() const;
  int negative_cusps() const;

  friend bool operator==(const BrokenPath&, const BrokenPath&) = default;
};

BrokenPath broken_path(const LeafSpace& space, const PointRef& u, const PointRef& v);

/// Broken curve between two distinct ends. In a tree the simple path
/// between the free extremities is the curve left after deleting the
/// self-intersections of ray + path + ray.
BrokenPath broken_path_ends(const LeafSpace& space, const EndRef& x1, const EndRef& x2);

/// Orientations of the first and last segments.
std::pair<Sign, Sign> first_last_orientation(const BrokenPath& path);

/// One line per element, in path order:
///   seg k <from> <to> orient=<+|-> trivial=<0|1>
///   cusp k <from> <to> at=<jid> sign=<+|->
std::string render(const BrokenPath& path);

}  // namespace leafspace

#endif  // LEAFSPACE_PATHS_HPP_
