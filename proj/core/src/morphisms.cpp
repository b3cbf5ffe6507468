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

#include "leafspace/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "leafspace/endorder.hpp"
#include "leafspace/paths.hpp"
#include "topology.hpp"

namespace leafspace {

namespace {

using detail::Arc;
using detail::NodeKind;
using detail::Topology;

std::string attach_key(const Attachment& a) {
  if (const auto* v = std::get_if<VertexEnd>(&a)) return "v:" + v->vertex;
  if (const auto* j = std::get_if<JunctionStem>(&a)) return "j:" + j->junction;
  return "free:" + std::get<Free>(a).end;
}

const std::string* lookup(const IdMap& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

// Image of an attachment under the element maps, if every piece is mapped.
std::optional<Attachment> image_of(const LeafSpaceMap& m, const Attachment& a) {
  if (const auto* v = std::get_if<VertexEnd>(&a)) {
    if (const auto* s = lookup(m.vertex_map, v->vertex)) return VertexEnd{*s};
    return std::nullopt;
  }
  if (const auto* j = std::get_if<JunctionStem>(&a)) {
    if (const auto* s = lookup(m.junction_map, j->junction)) return JunctionStem{*s};
    return std::nullopt;
  }
  if (const auto* s = lookup(m.end_map, std::get<Free>(a).end)) return Free{*s};
  return std::nullopt;
}

std::set<std::string> member_set(const std::vector<std::string>& members) {
  return {members.begin(), members.end()};
}

// Returns the first element (in id order) that is unmapped, maps outside
// the target, or collides with another element's image.
template <class Ids>
std::optional<MapViolation> check_bijection(const std::string& kind, const Ids& source_ids,
                                            std::size_t target_size, const IdMap& map,
                                            const std::function<bool(const std::string&)>& in_target) {
  std::map<std::string, std::string> seen;
  for (const std::string& id : source_ids) {
    const std::string* img = lookup(map, id);
    if (!img) return MapViolation{kind + " " + id, "has no image"};
    if (!in_target(*img)) return MapViolation{kind + " " + id, "image " + *img + " is not in the target"};
    auto [it, fresh] = seen.emplace(*img, id);
    if (!fresh) return MapViolation{kind + " " + id, "shares image " + *img + " with " + it->second};
  }
  if (source_ids.size() != target_size)
    return MapViolation{kind + "s", "source has " + std::to_string(source_ids.size()) +
                                        ", target has " + std::to_string(target_size)};
  return std::nullopt;
}

std::vector<std::string> edge_ids(const LeafSpace& s) {
  std::vector<std::string> out;
  for (const Edge& e : s.edges()) out.push_back(e.id);
  return out;
}
std::vector<std::string> junction_ids(const LeafSpace& s) {
  std::vector<std::string> out;
  for (const Junction& j : s.junctions()) out.push_back(j.id);
  return out;
}
std::vector<std::string> end_names(const LeafSpace& s) {
  std::vector<std::string> out;
  for (const EndRef& x : s.topology().end_refs) out.push_back(x.name);
  return out;
}

}  // namespace

LeafSpaceMap make_map(const LeafSpace& source, const LeafSpace& target, const IdMap& vertex_map,
                      const IdMap& end_hints) {
  std::set<std::string> images;
  for (const auto& [from, to] : vertex_map) {
    if (!source.has_vertex(from)) throw Error(ErrorCode::UnknownVertex, from);
    if (!target.has_vertex(to)) throw Error(ErrorCode::DanglingImage, "vertex " + from + " -> " + to);
    if (!images.insert(to).second) throw Error(ErrorCode::NotBijective, "vertex image " + to + " is hit twice");
  }
  for (const std::string& v : source.vertices())
    if (!vertex_map.count(v)) throw Error(ErrorCode::NotBijective, "vertex " + v + " has no image");
  if (source.vertices().size() != target.vertices().size())
    throw Error(ErrorCode::NotBijective, "vertex counts differ");

  images.clear();
  for (const auto& [from, to] : end_hints) {
    if (!source.has_end(from)) throw Error(ErrorCode::UnknownEnd, from);
    if (!target.has_end(to)) throw Error(ErrorCode::DanglingImage, "end " + from + " -> " + to);
    if (!images.insert(to).second) throw Error(ErrorCode::NotBijective, "end image " + to + " is hit twice");
  }

  LeafSpaceMap m{source, target, vertex_map, {}, {}, end_hints};

  for (const Junction& j : source.junctions()) {
    std::set<std::string> want;
    for (const std::string& v : j.members) want.insert(vertex_map.at(v));
    for (const Junction& t : target.junctions())
      if (member_set(t.members) == want) {
        m.junction_map[j.id] = t.id;
        break;
      }
  }

  std::map<std::string, std::string> by_lower, by_upper;
  std::vector<std::string> target_lines;
  for (const Edge& e : target.edges()) {
    by_lower[attach_key(e.lower)] = e.id;
    by_upper[attach_key(e.upper)] = e.id;
    if (std::holds_alternative<Free>(e.lower) && std::holds_alternative<Free>(e.upper))
      target_lines.push_back(e.id);
  }
  std::size_t source_lines = 0;
  for (const Edge& e : source.edges())
    if (std::holds_alternative<Free>(e.lower) && std::holds_alternative<Free>(e.upper)) ++source_lines;

  for (const Edge& e : source.edges()) {
    std::optional<std::string> found;
    auto try_side = [&](const Attachment& a, const std::map<std::string, std::string>& index) {
      if (found || std::holds_alternative<Free>(a)) return;
      std::optional<Attachment> img = image_of(m, a);
      if (!img) return;
      if (auto it = index.find(attach_key(*img)); it != index.end()) found = it->second;
    };
    try_side(e.lower, by_lower);
    try_side(e.upper, by_upper);
    if (!found) {
      for (const Attachment* a : {&e.lower, &e.upper}) {
        if (found) break;
        if (const auto* f = std::get_if<Free>(a))
          if (const std::string* h = lookup(end_hints, f->end)) found = target.end(*h).edge;
      }
    }
    if (!found && source_lines == 1 && target_lines.size() == 1 &&
        std::holds_alternative<Free>(e.lower) && std::holds_alternative<Free>(e.upper))
      found = target_lines.front();
    if (found) m.edge_map[e.id] = *found;
  }

  for (const EndRef& x : source.topology().end_refs) {
    if (m.end_map.count(x.name)) continue;
    const std::string* te = lookup(m.edge_map, x.edge);
    if (!te) continue;
    const Edge& image = target.edge(*te);
    const Attachment& a = x.extremity == Extremity::Lower ? image.lower : image.upper;
    if (const auto* f = std::get_if<Free>(&a)) m.end_map[x.name] = f->end;
  }
  return m;
}

LeafSpaceMap identity_map(const LeafSpace& space) {
  LeafSpaceMap m{space, space, {}, {}, {}, {}};
  for (const std::string& v : space.vertices()) m.vertex_map[v] = v;
  for (const std::string& e : edge_ids(space)) m.edge_map[e] = e;
  for (const std::string& j : junction_ids(space)) m.junction_map[j] = j;
  for (const std::string& x : end_names(space)) m.end_map[x] = x;
  return m;
}

LeafSpaceMap compose(const LeafSpaceMap& g, const LeafSpaceMap& f) {
  auto chain = [](const IdMap& second, const IdMap& first) {
    IdMap out;
    for (const auto& [k, mid] : first)
      if (const std::string* s = lookup(second, mid)) out[k] = *s;
    return out;
  };
  return {f.source, g.target, chain(g.vertex_map, f.vertex_map), chain(g.edge_map, f.edge_map),
          chain(g.junction_map, f.junction_map), chain(g.end_map, f.end_map)};
}

LeafSpaceMap inverse(const LeafSpaceMap& m) {
  auto flip_map = [](const IdMap& in) {
    IdMap out;
    for (const auto& [k, v] : in) out[v] = k;
    return out;
  };
  return {m.target, m.source, flip_map(m.vertex_map), flip_map(m.edge_map),
          flip_map(m.junction_map), flip_map(m.end_map)};
}

bool is_identity(const LeafSpaceMap& m) {
  if (!(m.source == m.target)) return false;
  auto fixed = [](const IdMap& map, const std::vector<std::string>& ids) {
    if (map.size() != ids.size()) return false;
    for (const std::string& id : ids) {
      const std::string* s = lookup(map, id);
      if (!s || *s != id) return false;
    }
    return true;
  };
  return fixed(m.vertex_map, m.source.vertices()) && fixed(m.edge_map, edge_ids(m.source)) &&
         fixed(m.junction_map, junction_ids(m.source)) && fixed(m.end_map, end_names(m.source));
}

bool same_map(const LeafSpaceMap& a, const LeafSpaceMap& b) {
  return a.source == b.source && a.target == b.target && a.vertex_map == b.vertex_map &&
         a.edge_map == b.edge_map && a.junction_map == b.junction_map && a.end_map == b.end_map;
}

std::optional<MapViolation> check_admissible(const LeafSpaceMap& m) {
  const LeafSpace& s = m.source;
  const LeafSpace& t = m.target;
  if (auto v = check_bijection("vertex", s.vertices(), t.vertices().size(), m.vertex_map,
                               [&](const std::string& id) { return t.has_vertex(id); }))
    return v;

  for (const Edge& e : s.edges()) {
    const std::string* img = lookup(m.edge_map, e.id);
    if (!img) return MapViolation{"edge " + e.id, "has no image"};
    if (!t.has_edge(*img)) return MapViolation{"edge " + e.id, "image " + *img + " is not in the target"};
    const Edge& te = t.edge(*img);
    auto lo = image_of(m, e.lower);
    auto hi = image_of(m, e.upper);
    if (!lo || !hi) return MapViolation{"edge " + e.id, "an extremity has no image"};
    if (!(*lo == te.lower) || !(*hi == te.upper)) {
      if (*lo == te.upper && *hi == te.lower)
        return MapViolation{"edge " + e.id, "orientation reversed onto " + te.id};
      return MapViolation{"edge " + e.id, "incidence not preserved by " + te.id};
    }
  }
  if (auto v = check_bijection("edge", edge_ids(s), t.edges().size(), m.edge_map,
                               [&](const std::string& id) { return t.has_edge(id); }))
    return v;

  for (const Junction& j : s.junctions()) {
    const std::string* img = lookup(m.junction_map, j.id);
    if (!img) return MapViolation{"junction " + j.id, "members do not map onto a junction"};
    if (!t.has_junction(*img))
      return MapViolation{"junction " + j.id, "image " + *img + " is not in the target"};
    const Junction& tj = t.junction(*img);
    std::vector<std::string> mapped;
    for (const std::string& v : j.members) mapped.push_back(m.vertex_map.at(v));
    if (member_set(mapped) != member_set(tj.members) || mapped.size() != tj.members.size())
      return MapViolation{"junction " + j.id, "members do not map onto " + tj.id};
    if (mapped != tj.members) {
      std::vector<std::string> rev(mapped.rbegin(), mapped.rend());
      return MapViolation{"junction " + j.id,
                          rev == tj.members ? "order at " + j.id + " reversed"
                                            : "order at " + j.id + " not preserved"};
    }
  }
  if (auto v = check_bijection("junction", junction_ids(s), t.junctions().size(), m.junction_map,
                               [&](const std::string& id) { return t.has_junction(id); }))
    return v;

  if (auto v = check_bijection("end", end_names(s), end_names(t).size(), m.end_map,
                               [&](const std::string& id) { return t.has_end(id); }))
    return v;
  return std::nullopt;
}

std::optional<CounterExample> check_equivariance(const LeafSpaceMap& m, EquivarianceMode mode) {
  if (mode == EquivarianceMode::RequireAdmissible) {
    if (auto v = check_admissible(m)) throw Error(ErrorCode::NotAdmissible, v->element + ": " + v->reason);
  }
  const LeafSpace& s = m.source;
  const LeafSpace& t = m.target;
  std::vector<EndRef> pos = ends(s).positive;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t k = i + 1; k < pos.size(); ++k) {
      const EndRef& x = pos[i];
      const EndRef& y = pos[k];
      CounterExample ce{x.name, y.name, n(s, x, y), 0, {}};
      const std::string* mx = lookup(m.end_map, x.name);
      const std::string* my = lookup(m.end_map, y.name);
      if (!mx || !my || !t.has_end(*mx) || !t.has_end(*my)) {
        ce.detail = "end not mapped";
        return ce;
      }
      EndRef tx = t.end(*mx);
      EndRef ty = t.end(*my);
      if (!tx.positive() || !ty.positive() || tx.name == ty.name) {
        ce.detail = "image ends are not distinct positive ends";
        return ce;
      }
      ce.n_target = n(t, tx, ty);
      if (ce.n_source != ce.n_target) {
        ce.detail = "n differs";
        return ce;
      }
      BrokenPath ps = broken_path_ends(s, x, y);
      BrokenPath pt = broken_path_ends(t, tx, ty);
      bool same = ps.cusps.size() == pt.cusps.size();
      for (std::size_t c = 0; same && c < ps.cusps.size(); ++c) {
        const Cusp& a = ps.cusps[c];
        const Cusp& b = pt.cusps[c];
        const std::string* f = lookup(m.vertex_map, a.from);
        const std::string* to = lookup(m.vertex_map, a.to);
        const std::string* j = lookup(m.junction_map, a.junction);
        same = f && to && j && *f == b.from && *to == b.to && *j == b.junction && a.sign == b.sign;
      }
      if (!same) {
        ce.detail = "cusps differ";
        return ce;
      }
    }
  }
  return std::nullopt;
}

std::vector<LeafSpaceMap> enumerate_automorphisms(const LeafSpace& space, std::size_t node_bound,
                                                  Enumeration mode) {
  const Topology& topo = space.topology();
  const std::size_t count = topo.nodes.size();
  if (count > node_bound)
    throw Error(ErrorCode::TooLarge, std::to_string(count) + " nodes exceed the bound of " +
                                         std::to_string(node_bound));

  // Breadth-first order from node 0 with parents, so every node after
  // the first has an already assigned neighbour.
  std::vector<int> order{0};
  std::vector<int> parent(count, -1);
  std::vector<const Arc*> via(count, nullptr);
  std::vector<bool> seen(count, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const Arc& a : topo.nodes[order[i]].arcs)
      if (!seen[a.to]) {
        seen[a.to] = true;
        parent[a.to] = order[i];
        via[a.to] = &a;
        order.push_back(a.to);
      }

  auto position = [&](int junction, int member) {
    const auto& ms = topo.canonical.junctions[junction].members;
    const std::string& id = topo.canonical.vertices[member];
    return std::find(ms.begin(), ms.end(), id) - ms.begin();
  };

  auto compatible = [&](int a, int b) {
    return topo.nodes[a].kind == topo.nodes[b].kind &&
           topo.nodes[a].arcs.size() == topo.nodes[b].arcs.size();
  };

  std::vector<LeafSpaceMap> out;
  std::vector<int> image(count, -1);
  std::vector<bool> used(count, false);

  auto emit = [&] {
    IdMap vm, eh;
    for (std::size_t n = 0; n < count; ++n) {
      const auto& node = topo.nodes[n];
      const auto& img = topo.nodes[image[n]];
      if (node.kind == NodeKind::Vertex)
        vm[topo.canonical.vertices[node.index]] = topo.canonical.vertices[img.index];
      else if (node.kind == NodeKind::End)
        eh[topo.end_refs[node.index].name] = topo.end_refs[img.index].name;
    }
    LeafSpaceMap m = make_map(space, space, vm, eh);
    if (!check_admissible(m)) out.push_back(std::move(m));
  };

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == order.size()) {
      emit();
      return;
    }
    const int node = order[i];
    const Arc& arc = *via[node];
    for (const Arc& cand : topo.nodes[image[parent[node]]].arcs) {
      if (used[cand.to] || cand.kind != arc.kind || cand.up != arc.up || !compatible(node, cand.to)) continue;
      if (mode == Enumeration::Pruned && arc.kind == detail::ArcKind::Membership &&
          position(arc.junction, arc.member) != position(cand.junction, cand.member))
        continue;
      image[node] = cand.to;
      used[cand.to] = true;
      extend(i + 1);
      used[cand.to] = false;
      image[node] = -1;
    }
  };

  if (count == 0) return out;
  for (std::size_t r = 0; r < count; ++r) {
    if (!compatible(0, int(r))) continue;
    image[0] = int(r);
    used[r] = true;
    extend(1);
    used[r] = false;
    image[0] = -1;
  }
  return out;
}

std::optional<std::string> moved_positive_end(const LeafSpaceMap& m) {
  for (const EndRef& x : ends(m.source).positive) {
    const std::string* img = lookup(m.end_map, x.name);
    if (!img || *img != x.name) return x.name;
  }
  return std::nullopt;
}

std::optional<NontrivialWitness> check_nontrivial_action(const LeafSpace& space,
                                                         const std::vector<LeafSpaceMap>& maps) {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const LeafSpaceMap& m = maps[i];
    if (!(m.source == space) || !(m.target == space))
      throw Error(ErrorCode::NotAdmissible, "map " + std::to_string(i) + " is not a self-map");
    if (auto v = check_admissible(m))
      throw Error(ErrorCode::NotAdmissible, "map " + std::to_string(i) + ": " + v->element + ": " + v->reason);
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (auto x = moved_positive_end(maps[i])) {
      const std::string* img = lookup(maps[i].end_map, *x);
      return NontrivialWitness{i, *x, img ? *img : std::string()};
    }
  return std::nullopt;
}

Relabeled relabel(const LeafSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto fresh = [&](const std::vector<std::string>& ids, const std::string& prefix) {
    std::vector<std::size_t> perm(ids.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IdMap out;
    for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = prefix + std::to_string(perm[i]);
    return out;
  };
  const Description& d = space.description();
  IdMap vm = fresh(d.vertices, "r");
  IdMap em = fresh(edge_ids(space), "f");
  IdMap jm = fresh(junction_ids(space), "K");
  IdMap xm = fresh(end_names(space), "Z");

  auto map_attach = [&](const Attachment& a) -> Attachment {
    if (const auto* v = std::get_if<VertexEnd>(&a)) return VertexEnd{vm.at(v->vertex)};
    if (const auto* j = std::get_if<JunctionStem>(&a)) return JunctionStem{jm.at(j->junction)};
    return Free{xm.at(std::get<Free>(a).end)};
  };

  Description out;
  for (const std::string& v : d.vertices) out.vertices.push_back(vm.at(v));
  for (const Edge& e : d.edges) out.edges.push_back({em.at(e.id), map_attach(e.lower), map_attach(e.upper)});
  for (const Junction& j : d.junctions) {
    Junction nj{jm.at(j.id), {}};
    for (const std::string& v : j.members) nj.members.push_back(vm.at(v));
    out.junctions.push_back(std::move(nj));
  }
  std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  std::shuffle(out.junctions.begin(), out.junctions.end(), rng);

  LeafSpace copy = LeafSpace::from(out);
  return {copy, LeafSpaceMap{space, copy, vm, em, jm, xm}};
}

MapText parse_map_text(std::string_view text) {
  MapText out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) {
      if (t.front() == '#') break;
      tok.push_back(t);
    }
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() != 3 || (tok[0] != "v" && tok[0] != "end"))
      throw Error(ErrorCode::SyntaxError, where + "expected 'v <src> <dst>' or 'end <src> <dst>'");
    IdMap& target = tok[0] == "v" ? out.vertex_map : out.end_map;
    if (!target.emplace(tok[1], tok[2]).second)
      throw Error(ErrorCode::SyntaxError, where + "'" + tok[1] + "' mapped twice");
  }
  return out;
}

std::string serialize_map(const LeafSpaceMap& m) {
  std::string out;
  for (const auto& [k, v] : m.vertex_map) out += "v " + k + " " + v + "\n";
  for (const auto& [k, v] : m.end_map) out += "end " + k + " " + v + "\n";
  return out;
}

}  // namespace leafspace
