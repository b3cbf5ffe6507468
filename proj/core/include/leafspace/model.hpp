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

#ifndef LEAFSPACE_MODEL_HPP_
#define LEAFSPACE_MODEL_HPP_

// Combinatorial model of an oriented, simply connected, possibly
// non-Hausdorff 1-manifold.
//
// A model is a finite tree built from three kinds of nodes:
//   * vertices, which are points of the manifold and own two ports
//     (lower and upper);
//   * junctions, which glue two or more member vertices that cannot be
//     separated by any other point (a cataclysm);
//   * free extremities of edges, which stand for ends of the manifold.
// Edges are oriented lower -> upper. A junction node is not a point:
// passing from one member to another through it is a jump, passing
// between a member and the stem edge is continuous.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "leafspace/error.hpp"

namespace leafspace {

using Rational = boost::rational<std::int64_t>;

/// Sign of a junction, orientation of a path, side of a point, or sign
/// of a cusp. All four share the same two values.
enum class Sign { Negative, Positive };

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr char sign_char(Sign s) noexcept {
  return s == Sign::Positive ? '+' : '-';
}

enum class Extremity { Lower, Upper };

// Attachments of an edge extremity.
struct VertexEnd {
  std::string vertex;
  friend bool operator==(const VertexEnd&, const VertexEnd&) = default;
};
struct JunctionStem {
  std::string junction;
  friend bool operator==(const JunctionStem&, const JunctionStem&) = default;
};
struct Free {
  std::string end;
  friend bool operator==(const Free&, const Free&) = default;
};
using Attachment = std::variant<VertexEnd, JunctionStem, Free>;

struct Edge {
  std::string id;
  Attachment lower;
  Attachment upper;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Members are listed least first in the cataclysm order.
struct Junction {
  std::string id;
  std::vector<std::string> members;
  friend bool operator==(const Junction&, const Junction&) = default;
};

/// Unvalidated model description, as read from a file or built by hand.
struct Description {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Junction> junctions;
};

/// A free edge extremity. Upper extremities are positive ends.
struct EndRef {
  std::string edge;
  Extremity extremity = Extremity::Upper;
  std::string name;

  bool positive() const noexcept { return extremity == Extremity::Upper; }
  friend bool operator==(const EndRef&, const EndRef&) = default;
};

struct AtVertex {
  std::string vertex;
  friend bool operator==(const AtVertex&, const AtVertex&) = default;
};

/// Point in the interior of an edge; position is in (0,1), lower -> upper.
struct OnEdge {
  std::string edge;
  Rational position;
  friend bool operator==(const OnEdge& a, const OnEdge& b) {
    return a.edge == b.edge && a.position == b.position;
  }
};

using PointRef = std::variant<AtVertex, OnEdge>;

struct Violation {
  ErrorCode code;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool has(ErrorCode code) const;
  std::string to_string() const;
};

namespace detail {
struct Topology;
}

/// Sealed, immutable, validated model. Copies share the same storage.
class LeafSpace {
 public:
  /// Checks every structural invariant. Returns the sealed model or a
  /// report listing each violation.
  static std::variant<LeafSpace, ValidationReport> validate(
      const Description& raw);

  /// Like validate(), but throws Error(ValidationFailed) on a bad model.
  static LeafSpace from(const Description& raw);

  // Sorted by identifier.
  const std::vector<std::string>& vertices() const;
  const std::vector<Edge>& edges() const;
  const std::vector<Junction>& junctions() const;

  /// Canonical description (every list sorted by identifier).
  const Description& description() const;

  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;
  bool has_junction(std::string_view id) const;
  bool has_end(std::string_view name) const;

  const Edge& edge(std::string_view id) const;
  const Junction& junction(std::string_view id) const;
  EndRef end(std::string_view name) const;

  /// Number of nodes of the incidence tree (vertices, junctions, ends).
  std::size_t node_count() const;

  const detail::Topology& topology() const { return *impl_; }

  friend bool operator==(const LeafSpace& a, const LeafSpace& b);

 private:
  explicit LeafSpace(std::shared_ptr<const detail::Topology> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::Topology> impl_;
};

/// Derived from the stem direction; never stored.
Sign junction_sign(const LeafSpace& space, std::string_view junction);

/// Side of t on which p lies: Positive iff the path from t to p leaves t
/// in the positive direction.
Sign side_of(const LeafSpace& space, const PointRef& t, const PointRef& p);

/// True iff u and v lie in different components of the model minus t.
bool separates(const LeafSpace& space, const PointRef& t, const PointRef& u,
               const PointRef& v);

struct Cataclysm {
  std::string junction;
  Sign sign;
  std::vector<std::string> members;
  friend bool operator==(const Cataclysm&, const Cataclysm&) = default;
};

/// One entry per junction, sorted by junction identifier.
std::vector<Cataclysm> cataclysms(const LeafSpace& space);

struct EndSets {
  std::vector<EndRef> positive;
  std::vector<EndRef> negative;
};

/// Ends sorted by name.
EndSets ends(const LeafSpace& space);

enum class Branching { RCoveredProxy, OneSidedProxy, TwoSidedProxy };

/// Finite stand-in for the R-covered / one-sided / two-sided trichotomy:
/// the model only has finitely many ends, so "infinitely many" becomes
/// "at least two".
struct BranchingClass {
  Branching kind;
  // For OneSidedProxy: the side that carries several ends.
  std::optional<Sign> branching_side;
};

BranchingClass classify_branching(const LeafSpace& space);

std::string to_string(const PointRef& p);
std::string to_string(Branching b);

/// Parses "v:<id>" or "e:<id>@<num>/<den>" (also "e:<id>@<decimal>").
PointRef parse_point(std::string_view token);

/// Checks that an identifier is non-empty, printable, and free of
/// whitespace and commas. A leading '#' is rejected since it starts a
/// comment in the text format.
bool valid_identifier(std::string_view id);

}  // namespace leafspace

#endif  // LEAFSPACE_MODEL_HPP_
