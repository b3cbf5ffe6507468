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

#include "leafspace/endorder.hpp"

#include <algorithm>
#include <set>

#include "topology.hpp"

namespace leafspace {

namespace {

EndRef require_positive(const LeafSpace& space, const EndRef& x) {
  EndRef canonical = space.end(x.name);
  if (!canonical.positive()) throw Error(ErrorCode::NotPositiveEnd, x.name);
  return canonical;
}

void require_distinct(const EndRef& a, const EndRef& b, const EndRef& c) {
  if (a.name == b.name || a.name == c.name || b.name == c.name)
    throw Error(ErrorCode::DuplicateEnd, a.name + ", " + b.name + ", " + c.name);
}

struct Elements {
  std::set<std::string> vertices;
  std::set<std::string> edges;
  std::set<CuspKey> cusps;
};

Elements elements_of(const BrokenPath& p) {
  Elements e;
  for (const Segment& s : p.segments)
    for (const Piece& piece : s.itinerary)
      (piece.kind == Piece::Kind::Vertex ? e.vertices : e.edges).insert(piece.id);
  for (const Cusp& c : p.cusps) e.cusps.insert(key_of(c));
  return e;
}

SharedPart intersect(const BrokenPath& reference, const Elements& a, const Elements& b) {
  SharedPart part;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(part.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(part.edges));
  for (const Cusp& c : reference.cusps)
    if (a.cusps.count(key_of(c)) && b.cusps.count(key_of(c))) part.cusps.push_back(c);
  return part;
}

bool touches(const Cusp& c, const std::string& vertex) { return c.from == vertex || c.to == vertex; }

}  // namespace

CuspKey key_of(const Cusp& c) {
  return c.from < c.to ? CuspKey{c.junction, c.from, c.to} : CuspKey{c.junction, c.to, c.from};
}

std::string to_string(Curve c) {
  switch (c) {
    case Curve::C12: return "alpha12";
    case Curve::C13: return "alpha13";
    case Curve::C23: return "alpha23";
  }
  return "?";
}

std::string to_string(ProofCase c) {
  switch (c) {
    case ProofCase::Case1: return "Case1";
    case ProofCase::Case2: return "Case2";
    case ProofCase::Case3: return "Case3";
  }
  return "?";
}

std::string to_string(TurningSide s) {
  switch (s) {
    case TurningSide::None: return "none";
    case TurningSide::Beta1: return "beta1";
    case TurningSide::Beta3: return "beta3";
  }
  return "?";
}

CuspCount cusp_count(const LeafSpace& space, const EndRef& x1, const EndRef& x2) {
  EndRef a = require_positive(space, x1);
  EndRef b = require_positive(space, x2);
  if (a.name == b.name) throw Error(ErrorCode::SameEnd, a.name);
  BrokenPath p = broken_path_ends(space, a, b);
  return {p.positive_cusps(), p.negative_cusps()};
}

int n(const LeafSpace& space, const EndRef& x1, const EndRef& x2) {
  return cusp_count(space, x1, x2).n();
}

std::vector<std::vector<int>> n_matrix(const LeafSpace& space) {
  const std::vector<EndRef> pos = ends(space).positive;
  const std::size_t k = pos.size();
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) m[i][j] = n(space, pos[i], pos[j]);
  return m;
}

std::vector<EndRef> end_order(const LeafSpace& space) {
  const std::vector<EndRef> pos = ends(space).positive;
  const auto m = n_matrix(space);
  // rank(x) = number of ends y with y < x, i.e. n(y, x) < 0.
  std::vector<std::pair<std::size_t, std::size_t>> ranked;
  for (std::size_t x = 0; x < pos.size(); ++x) {
    std::size_t rank = 0;
    for (std::size_t y = 0; y < pos.size(); ++y)
      if (y != x && m[y][x] < 0) ++rank;
    ranked.emplace_back(rank, x);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<EndRef> out;
  out.reserve(pos.size());
  for (const auto& [rank, x] : ranked) out.push_back(pos[x]);
  return out;
}

TriangleCheck triangle_check(const LeafSpace& space, const EndRef& x1, const EndRef& x2,
                             const EndRef& x3) {
  require_distinct(x1, x2, x3);
  TriangleCheck r;
  r.n12 = n(space, x1, x2);
  r.n23 = n(space, x2, x3);
  r.n13 = n(space, x1, x3);
  r.delta = r.n13 - (r.n12 + r.n23);
  return r;
}

TripleDecomposition triple_decompose(const LeafSpace& space, const EndRef& x1, const EndRef& x2,
                                     const EndRef& x3) {
  require_distinct(x1, x2, x3);
  EndRef a = require_positive(space, x1);
  EndRef b = require_positive(space, x2);
  EndRef c = require_positive(space, x3);

  TripleDecomposition d;
  d.alpha12 = broken_path_ends(space, a, b);
  d.alpha13 = broken_path_ends(space, a, c);
  d.alpha23 = broken_path_ends(space, b, c);
  const Elements e12 = elements_of(d.alpha12);
  const Elements e13 = elements_of(d.alpha13);
  const Elements e23 = elements_of(d.alpha23);
  d.beta1 = intersect(d.alpha13, e12, e13);
  d.beta2 = intersect(d.alpha12, e12, e23);
  d.beta3 = intersect(d.alpha13, e13, e23);

  auto collect = [&](const BrokenPath& p, Curve owner, const Elements& o1, const Elements& o2) {
    for (const Cusp& cusp : p.cusps) {
      CuspKey k = key_of(cusp);
      if (!o1.cusps.count(k) && !o2.cusps.count(k)) d.special.push_back({cusp, owner});
    }
  };
  collect(d.alpha12, Curve::C12, e13, e23);
  collect(d.alpha13, Curve::C13, e12, e23);
  collect(d.alpha23, Curve::C23, e12, e13);

  // The median of the three end nodes.
  const auto& t = space.topology();
  auto node = [&](const EndRef& x) { return t.locate(x).node; };
  std::vector<int> p12 = t.node_path(node(a), node(b));
  std::vector<int> p13 = t.node_path(node(a), node(c));
  std::vector<int> p23 = t.node_path(node(b), node(c));
  std::set<int> on13(p13.begin(), p13.end()), on23(p23.begin(), p23.end());
  for (int x : p12) {
    if (on13.count(x) && on23.count(x) && t.nodes[x].kind == detail::NodeKind::Junction) {
      d.center = t.canonical.junctions[t.nodes[x].index].id;
      break;
    }
  }

  auto special_of = [&](Curve owner) {
    std::vector<const Cusp*> out;
    for (const SpecialCusp& s : d.special)
      if (s.owner == owner) out.push_back(&s.cusp);
    return out;
  };
  auto s12 = special_of(Curve::C12);
  auto s13 = special_of(Curve::C13);
  auto s23 = special_of(Curve::C23);

  if (s13.empty()) {
    d.proof_case = ProofCase::Case1;
    if (!s12.empty())
      d.turning_side = TurningSide::Beta1;
    else if (!s23.empty())
      d.turning_side = TurningSide::Beta3;
    return d;
  }
  // Either point of the special cusp of alpha13 can serve as the turning
  // point: `from` lies on the x1 side (beta1), `to` on the x3 side (beta3).
  const Cusp& turn = *s13.front();
  auto hit = [](const std::vector<const Cusp*>& list, const std::string& v) {
    return std::any_of(list.begin(), list.end(), [&](const Cusp* c) { return touches(*c, v); });
  };
  if (hit(s12, turn.from)) {
    d.proof_case = ProofCase::Case3;
    d.turning_side = TurningSide::Beta1;
  } else if (hit(s23, turn.to)) {
    d.proof_case = ProofCase::Case3;
    d.turning_side = TurningSide::Beta3;
  } else {
    d.proof_case = ProofCase::Case2;
    d.turning_side = TurningSide::Beta1;
  }
  return d;
}

std::optional<UnicuspPair> find_unicusp_pair(const LeafSpace& space) {
  const std::vector<EndRef> pos = ends(space).positive;  // sorted by name
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      BrokenPath p = broken_path_ends(space, pos[i], pos[j]);
      if (p.cusps.size() == 1) return UnicuspPair{pos[i], pos[j], p.cusps.front()};
    }
  }
  return std::nullopt;
}

}  // namespace leafspace
