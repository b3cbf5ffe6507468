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

#ifndef LEAFSPACE_MORPHISMS_HPP_
#define LEAFSPACE_MORPHISMS_HPP_

// Structure maps between models. A map is admissible when it preserves
// incidence, edge orientation, and every junction's member order; these
// are the finite stand-ins for orientation-preserving deck
// transformations that respect the fixed cataclysm orders.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafspace/model.hpp"

namespace leafspace {

using IdMap = std::map<std::string, std::string>;

struct LeafSpaceMap {
  LeafSpace source;
  LeafSpace target;
  IdMap vertex_map;
  IdMap edge_map;
  IdMap junction_map;
  IdMap end_map;
};

/// Builds a map from its vertex correspondence (plus optional end
/// correspondences), inferring edges, junctions and ends from incidence.
/// Throws NotBijective when the vertex or end correspondence is not a
/// bijection and DanglingImage when an image is missing from the target.
/// Elements whose image cannot be inferred are left unmapped and
/// reported by check_admissible().
LeafSpaceMap make_map(const LeafSpace& source, const LeafSpace& target, const IdMap& vertex_map,
                      const IdMap& end_hints = {});

LeafSpaceMap identity_map(const LeafSpace& space);

/// g after f.
LeafSpaceMap compose(const LeafSpaceMap& g, const LeafSpaceMap& f);
LeafSpaceMap inverse(const LeafSpaceMap& m);
bool is_identity(const LeafSpaceMap& m);

/// Same correspondences (source and target compared structurally).
bool same_map(const LeafSpaceMap& a, const LeafSpaceMap& b);

struct MapViolation {
  std::string element;  // e.g. "junction J"
  std::string reason;
};

/// nullopt when the map is admissible. Otherwise the first failing
/// element, scanning edges, junctions, then ends, each by identifier.
std::optional<MapViolation> check_admissible(const LeafSpaceMap& m);

struct CounterExample {
  std::string x;
  std::string y;
  int n_source = 0;
  int n_target = 0;
  std::string detail;
};

enum class EquivarianceMode { RequireAdmissible, Force };

/// Checks that n and the cusps of every broken curve between positive
/// ends are carried over by the map. Returns the first failing ordered
/// pair (by end names). Throws NotAdmissible in RequireAdmissible mode.
std::optional<CounterExample> check_equivariance(
    const LeafSpaceMap& m, EquivarianceMode mode = EquivarianceMode::RequireAdmissible);

constexpr std::size_t kDefaultNodeBound = 64;

/// Exhaustive tries every incidence-preserving bijection and only then
/// filters by member order. Pruned matches members by list position while
/// backtracking; both return the same maps.
enum class Enumeration { Pruned, Exhaustive };

/// Every admissible self-map, by backtracking over incidence-preserving
/// bijections of the incidence tree and filtering by member order.
/// Throws TooLarge above the node bound.
std::vector<LeafSpaceMap> enumerate_automorphisms(const LeafSpace& space,
                                                  std::size_t node_bound = kDefaultNodeBound,
                                                  Enumeration mode = Enumeration::Pruned);

struct NontrivialWitness {
  std::size_t map_index = 0;
  std::string end;
  std::string image;
};

/// First positive end moved by some map of the family (maps must be
/// admissible self-maps of `space`, else NotAdmissible).
std::optional<NontrivialWitness> check_nontrivial_action(const LeafSpace& space,
                                                         const std::vector<LeafSpaceMap>& maps);

/// First positive end, by name, that the map sends elsewhere.
std::optional<std::string> moved_positive_end(const LeafSpaceMap& m);

struct Relabeled {
  LeafSpace copy;
  LeafSpaceMap map;  // original -> copy
};

/// Isomorphic copy with fresh, randomly permuted identifiers.
Relabeled relabel(const LeafSpace& space, std::uint64_t seed);

struct MapText {
  IdMap vertex_map;
  IdMap end_map;
};

/// Map text format: "v <src> <dst>" and "end <src> <dst>" lines, '#'
/// comments.
MapText parse_map_text(std::string_view text);
std::string serialize_map(const LeafSpaceMap& m);

}  // namespace leafspace

#endif  // LEAFSPACE_MORPHISMS_HPP_
