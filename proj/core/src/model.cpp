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

#include "leafspace/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "topology.hpp"

namespace leafspace {

namespace {

using detail::Arc;
using detail::ArcKind;
using detail::Location;
using detail::Node;
using detail::NodeKind;
using detail::Step;
using detail::Topology;

enum Port { kLower = 0, kUpper = 1 };

const char* port_name(int port) { return port == kLower ? "lower" : "upper"; }

std::string attachment_string(const Attachment& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexEnd>) return "v:" + x.vertex;
        if constexpr (std::is_same_v<T, JunctionStem>) return "j:" + x.junction;
        if constexpr (std::is_same_v<T, Free>) return "free:" + x.end;
      },
      a);
}

class Checker {
 public:
  explicit Checker(const Description& raw) : raw_(raw) {}

  std::vector<Violation> run();

 private:
  void add(ErrorCode code, std::string location, std::string message) {
    out_.push_back({code, std::move(location), std::move(message)});
  }

  void check_identifiers();
  bool check_references();
  void check_junctions();
  void check_ports();
  void check_graph();

  const Description& raw_;
  std::vector<Violation> out_;

  std::set<std::string> vertex_ids_;
  std::set<std::string> junction_ids_;
  // Per junction: the sign implied by its stem, when it has exactly one.
  std::map<std::string, Sign> stem_sign_;
  // Per junction: the sign used to charge member ports, if determined.
  std::map<std::string, Sign> member_sign_;
};

std::vector<Violation> Checker::run() {
  if (raw_.edges.empty()) add(ErrorCode::NoEdges, "model", "model has no edges");
  check_identifiers();
  if (!check_references()) return out_;
  check_junctions();
  check_ports();
  bool structural_ok = std::none_of(out_.begin(), out_.end(), [](const Violation& v) {
    return v.code == ErrorCode::DuplicateId || v.code == ErrorCode::InvalidIdentifier;
  });
  if (structural_ok && !raw_.edges.empty()) check_graph();
  return out_;
}

void Checker::check_identifiers() {
  auto check_id = [&](const std::string& id, const std::string& kind) {
    if (!valid_identifier(id))
      add(ErrorCode::InvalidIdentifier, kind + " '" + id + "'", "malformed identifier");
  };
  std::set<std::string> edges, ends;
  for (const auto& v : raw_.vertices) {
    check_id(v, "vertex");
    if (!vertex_ids_.insert(v).second)
      add(ErrorCode::DuplicateId, "vertex " + v, "vertex declared twice");
  }
  for (const auto& e : raw_.edges) {
    check_id(e.id, "edge");
    if (!edges.insert(e.id).second)
      add(ErrorCode::DuplicateId, "edge " + e.id, "edge declared twice");
    for (const Attachment* a : {&e.lower, &e.upper}) {
      if (const auto* f = std::get_if<Free>(a)) {
        check_id(f->end, "end");
        if (!ends.insert(f->end).second)
          add(ErrorCode::DuplicateId, "end " + f->end, "end name used twice");
      }
    }
  }
  for (const auto& j : raw_.junctions) {
    check_id(j.id, "junction");
    if (!junction_ids_.insert(j.id).second)
      add(ErrorCode::DuplicateId, "junction " + j.id, "junction declared twice");
  }
}

bool Checker::check_references() {
  bool ok = true;
  for (const auto& e : raw_.edges) {
    for (const Attachment* a : {&e.lower, &e.upper}) {
      if (const auto* v = std::get_if<VertexEnd>(a); v && !vertex_ids_.count(v->vertex)) {
        add(ErrorCode::DanglingReference, "edge " + e.id, "unknown vertex " + v->vertex);
        ok = false;
      }
      if (const auto* j = std::get_if<JunctionStem>(a);
          j && !junction_ids_.count(j->junction)) {
        add(ErrorCode::DanglingReference, "edge " + e.id, "unknown junction " + j->junction);
        ok = false;
      }
    }
  }
  for (const auto& j : raw_.junctions) {
    for (const auto& m : j.members) {
      if (!vertex_ids_.count(m)) {
        add(ErrorCode::DanglingReference, "junction " + j.id, "unknown member " + m);
        ok = false;
      }
    }
  }
  return ok;
}

void Checker::check_junctions() {
  // Which ports of each vertex are used by edges.
  std::map<std::string, std::array<int, 2>> edge_use;
  for (const auto& e : raw_.edges) {
    if (const auto* v = std::get_if<VertexEnd>(&e.lower)) ++edge_use[v->vertex][kUpper];
    if (const auto* v = std::get_if<VertexEnd>(&e.upper)) ++edge_use[v->vertex][kLower];
  }

  for (const auto& j : raw_.junctions) {
    const std::string loc = "junction " + j.id;
    if (j.members.size() < 2)
      add(ErrorCode::JunctionArity, loc, "a junction needs at least two members");
    std::set<std::string> seen;
    for (const auto& m : j.members)
      if (!seen.insert(m).second)
        add(ErrorCode::DuplicateMember, loc, "member " + m + " listed twice");

    std::vector<const Edge*> stems;
    for (const auto& e : raw_.edges) {
      const auto* lo = std::get_if<JunctionStem>(&e.lower);
      const auto* up = std::get_if<JunctionStem>(&e.upper);
      if (lo && lo->junction == j.id) stems.push_back(&e);
      if (up && up->junction == j.id) stems.push_back(&e);
    }
    if (stems.empty()) {
      add(ErrorCode::MissingStem, loc, "no edge attaches to the junction stem");
    } else if (stems.size() > 1) {
      add(ErrorCode::MultipleStems, loc, "more than one edge attaches to the junction stem");
    } else {
      // Shared past rises into a negative junction; shared future leaves
      // a positive junction upwards.
      const auto* up = std::get_if<JunctionStem>(&stems.front()->upper);
      stem_sign_[j.id] = (up && up->junction == j.id) ? Sign::Negative : Sign::Positive;
    }

    // Sides on which members can still attach, from edge usage alone.
    std::set<Sign> member_sides;
    for (const auto& m : seen) {
      auto use = edge_use.count(m) ? edge_use[m] : std::array<int, 2>{0, 0};
      bool lower_free = use[kLower] == 0;
      bool upper_free = use[kUpper] == 0;
      if (lower_free != upper_free)
        member_sides.insert(lower_free ? Sign::Negative : Sign::Positive);
    }
    if (member_sides.size() > 1) {
      add(ErrorCode::MixedMemberSides, loc,
          "some members attach from below and others from above");
      continue;
    }
    auto stem = stem_sign_.find(j.id);
    if (stem != stem_sign_.end()) {
      if (!member_sides.empty() && *member_sides.begin() != stem->second) {
        add(ErrorCode::StemDirectionMismatch, loc,
            std::string("stem direction implies sign ") + sign_char(stem->second) +
                " but members attach on the other side");
        continue;
      }
      member_sign_[j.id] = stem->second;
    } else if (!member_sides.empty()) {
      member_sign_[j.id] = *member_sides.begin();
    }
  }
}

void Checker::check_ports() {
  std::map<std::string, std::array<std::vector<std::string>, 2>> users;
  for (const auto& v : raw_.vertices) users[v];
  for (const auto& e : raw_.edges) {
    if (const auto* v = std::get_if<VertexEnd>(&e.lower)) users[v->vertex][kUpper].push_back("edge " + e.id);
    if (const auto* v = std::get_if<VertexEnd>(&e.upper)) users[v->vertex][kLower].push_back("edge " + e.id);
  }
  std::set<std::string> undetermined;
  for (const auto& j : raw_.junctions) {
    auto s = member_sign_.find(j.id);
    std::set<std::string> seen;
    for (const auto& m : j.members) {
      if (!seen.insert(m).second) continue;
      if (s == member_sign_.end()) {
        undetermined.insert(m);
        continue;
      }
      int port = s->second == Sign::Negative ? kLower : kUpper;
      users[m][port].push_back("junction " + j.id);
    }
  }
  for (const auto& [vertex, ports] : users) {
    for (int port : {kLower, kUpper}) {
      const auto& list = ports[port];
      if (list.size() > 1) {
        std::string who;
        for (const auto& u : list) who += (who.empty() ? "" : ", ") + u;
        add(ErrorCode::PortConflict, "vertex " + vertex,
            std::string(port_name(port)) + " port used by " + who);
      } else if (list.empty() && !undetermined.count(vertex)) {
        add(ErrorCode::OpenPort, "vertex " + vertex,
            std::string(port_name(port)) + " port is not attached");
      }
    }
  }
}

void Checker::check_graph() {
  // Node numbering: vertices, junctions, then one node per free extremity.
  std::map<std::string, int> node_of_vertex, node_of_junction;
  int n = 0;
  for (const auto& v : raw_.vertices) node_of_vertex[v] = n++;
  for (const auto& j : raw_.junctions) node_of_junction[j.id] = n++;
  auto node_of = [&](const Attachment& a) -> int {
    if (const auto* v = std::get_if<VertexEnd>(&a)) return node_of_vertex.at(v->vertex);
    if (const auto* j = std::get_if<JunctionStem>(&a)) return node_of_junction.at(j->junction);
    return n++;
  };
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::string> arc_names;
  for (const auto& e : raw_.edges) {
    int a = node_of(e.lower);
    int b = node_of(e.upper);
    arcs.emplace_back(a, b);
    arc_names.push_back("edge " + e.id);
  }
  for (const auto& j : raw_.junctions) {
    std::set<std::string> seen;
    for (const auto& m : j.members) {
      if (!seen.insert(m).second) continue;
      arcs.emplace_back(node_of_junction.at(j.id), node_of_vertex.at(m));
      arc_names.push_back("junction " + j.id + " member " + m);
    }
  }
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  int components = n;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    int a = find(arcs[i].first), b = find(arcs[i].second);
    if (a == b) {
      add(ErrorCode::NotATree, arc_names[i], "closes a cycle in the incidence graph");
    } else {
      uf[a] = b;
      --components;
    }
  }
  if (components > 1)
    add(ErrorCode::Disconnected, "model",
        "incidence graph has " + std::to_string(components) + " components");
}

std::shared_ptr<const Topology> build_topology(const Description& raw) {
  auto t = std::make_shared<Topology>();
  Description& c = t->canonical;
  c = raw;
  std::sort(c.vertices.begin(), c.vertices.end());
  std::sort(c.edges.begin(), c.edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::sort(c.junctions.begin(), c.junctions.end(),
            [](const Junction& a, const Junction& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < c.vertices.size(); ++i) t->vertex_index[c.vertices[i]] = int(i);
  for (std::size_t i = 0; i < c.edges.size(); ++i) t->edge_index[c.edges[i].id] = int(i);
  for (std::size_t i = 0; i < c.junctions.size(); ++i) t->junction_index[c.junctions[i].id] = int(i);

  for (const auto& e : c.edges) {
    if (const auto* f = std::get_if<Free>(&e.lower)) t->end_refs.push_back({e.id, Extremity::Lower, f->end});
    if (const auto* f = std::get_if<Free>(&e.upper)) t->end_refs.push_back({e.id, Extremity::Upper, f->end});
  }
  std::sort(t->end_refs.begin(), t->end_refs.end(),
            [](const EndRef& a, const EndRef& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < t->end_refs.size(); ++i) t->end_index[t->end_refs[i].name] = int(i);

  const int nv = t->vertex_count();
  const int nj = t->junction_count();
  t->nodes.reserve(nv + nj + t->end_refs.size());
  for (int i = 0; i < nv; ++i) t->nodes.push_back({NodeKind::Vertex, i, {}});
  for (int i = 0; i < nj; ++i) t->nodes.push_back({NodeKind::Junction, i, {}});
  for (std::size_t i = 0; i < t->end_refs.size(); ++i) t->nodes.push_back({NodeKind::End, int(i), {}});

  t->junction_signs.assign(nj, Sign::Negative);
  t->stem_edge.assign(nj, -1);
  t->edge_lower_node.assign(c.edges.size(), -1);
  t->edge_upper_node.assign(c.edges.size(), -1);

  auto node_of = [&](const Attachment& a) -> int {
    if (const auto* v = std::get_if<VertexEnd>(&a)) return t->vertex_node(t->vertex_index.at(v->vertex));
    if (const auto* j = std::get_if<JunctionStem>(&a)) return t->junction_node(t->junction_index.at(j->junction));
    return t->end_node(t->end_index.at(std::get<Free>(a).end));
  };
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = c.edges[i];
    int lo = node_of(e.lower), up = node_of(e.upper);
    t->edge_lower_node[i] = lo;
    t->edge_upper_node[i] = up;
    t->nodes[lo].arcs.push_back({up, ArcKind::Edge, int(i), -1, -1, true});
    t->nodes[up].arcs.push_back({lo, ArcKind::Edge, int(i), -1, -1, false});
    if (const auto* j = std::get_if<JunctionStem>(&e.upper)) {
      int ji = t->junction_index.at(j->junction);
      t->junction_signs[ji] = Sign::Negative;
      t->stem_edge[ji] = int(i);
    }
    if (const auto* j = std::get_if<JunctionStem>(&e.lower)) {
      int ji = t->junction_index.at(j->junction);
      t->junction_signs[ji] = Sign::Positive;
      t->stem_edge[ji] = int(i);
    }
  }
  for (int ji = 0; ji < nj; ++ji) {
    bool positive = t->junction_signs[ji] == Sign::Positive;
    int jn = t->junction_node(ji);
    for (const auto& m : c.junctions[ji].members) {
      int vi = t->vertex_index.at(m);
      // Member -> junction goes up for a positive junction.
      t->nodes[vi].arcs.push_back({jn, ArcKind::Membership, -1, ji, vi, positive});
      t->nodes[jn].arcs.push_back({vi, ArcKind::Membership, -1, ji, vi, !positive});
    }
  }

  // Root the tree at node 0.
  const int total = int(t->nodes.size());
  t->parent.assign(total, -1);
  t->depth.assign(total, -1);
  std::deque<int> queue{0};
  t->depth[0] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const Arc& a : t->nodes[x].arcs) {
      if (t->depth[a.to] >= 0) continue;
      t->depth[a.to] = t->depth[x] + 1;
      t->parent[a.to] = x;
      queue.push_back(a.to);
    }
  }
  return t;
}

}  // namespace

// --- detail::Topology -------------------------------------------------------

namespace detail {

int Topology::vertex_of(std::string_view id) const {
  auto it = vertex_index.find(std::string(id));
  if (it == vertex_index.end()) throw Error(ErrorCode::UnknownVertex, std::string(id));
  return it->second;
}

int Topology::edge_of(std::string_view id) const {
  auto it = edge_index.find(std::string(id));
  if (it == edge_index.end()) throw Error(ErrorCode::UnknownEdge, std::string(id));
  return it->second;
}

int Topology::junction_of(std::string_view id) const {
  auto it = junction_index.find(std::string(id));
  if (it == junction_index.end()) throw Error(ErrorCode::UnknownJunction, std::string(id));
  return it->second;
}

Location Topology::locate(const PointRef& p) const {
  if (const auto* v = std::get_if<AtVertex>(&p)) return {vertex_node(vertex_of(v->vertex)), -1, 0};
  const auto& e = std::get<OnEdge>(p);
  int ei = edge_of(e.edge);
  if (e.position <= 0 || e.position >= 1)
    throw Error(ErrorCode::InvalidPosition, to_string(p) + " is not strictly inside the edge");
  return {-1, ei, e.position};
}

Location Topology::locate(const EndRef& x) const {
  auto it = end_index.find(x.name);
  if (it == end_index.end()) throw Error(ErrorCode::UnknownEnd, x.name);
  return {end_node(it->second), -1, 0};
}

std::vector<int> Topology::node_path(int a, int b) const {
  std::vector<int> front{a}, back{b};
  while (a != b) {
    if (depth[a] >= depth[b]) {
      a = parent[a];
      front.push_back(a);
    } else {
      b = parent[b];
      back.push_back(b);
    }
  }
  // The meeting node is the last element of both lists.
  back.pop_back();
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

const Arc& Topology::arc_between(int a, int b) const {
  for (const Arc& arc : nodes[a].arcs)
    if (arc.to == b) return arc;
  throw std::logic_error("arc_between: nodes are not adjacent");
}

std::vector<Step> Topology::walk(const Location& a, const Location& b) const {
  if (a == b) throw Error(ErrorCode::SamePoint, "walk endpoints coincide");
  std::vector<Step> steps;
  if (a.on_edge() && b.on_edge() && a.edge == b.edge) {
    bool up = b.pos > a.pos;
    int to = up ? edge_upper_node[a.edge] : edge_lower_node[a.edge];
    steps.push_back({Arc{to, ArcKind::Edge, a.edge, -1, -1, up}, -1, -1, a.pos, b.pos});
    return steps;
  }
  int x = a.on_edge() ? edge_lower_node[a.edge] : a.node;
  int y = b.on_edge() ? edge_lower_node[b.edge] : b.node;
  std::vector<int> path = node_path(x, y);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Arc& arc = arc_between(path[i], path[i + 1]);
    Step s{arc, path[i], path[i + 1], 0, 0};
    if (arc.kind == ArcKind::Edge) {
      s.from_pos = arc.up ? 0 : 1;
      s.to_pos = arc.up ? 1 : 0;
    }
    steps.push_back(s);
  }
  if (a.on_edge()) {
    const int up_node = edge_upper_node[a.edge];
    if (!steps.empty() && steps.front().arc.kind == ArcKind::Edge && steps.front().arc.edge == a.edge) {
      steps.front() = {Arc{up_node, ArcKind::Edge, a.edge, -1, -1, true}, -1, up_node, a.pos, 1};
    } else {
      steps.insert(steps.begin(), {Arc{x, ArcKind::Edge, a.edge, -1, -1, false}, -1, x, a.pos, 0});
    }
  }
  if (b.on_edge()) {
    const int up_node = edge_upper_node[b.edge];
    if (!steps.empty() && steps.back().arc.kind == ArcKind::Edge && steps.back().arc.edge == b.edge) {
      steps.back() = {Arc{-1, ArcKind::Edge, b.edge, -1, -1, false}, up_node, -1, 1, b.pos};
    } else {
      steps.push_back({Arc{-1, ArcKind::Edge, b.edge, -1, -1, true}, y, -1, 0, b.pos});
    }
  }
  return steps;
}

std::string Topology::node_label(int node) const {
  const Node& n = nodes[node];
  switch (n.kind) {
    case NodeKind::Vertex: return "v:" + canonical.vertices[n.index];
    case NodeKind::Junction: return "j:" + canonical.junctions[n.index].id;
    case NodeKind::End: return "free:" + end_refs[n.index].name;
  }
  return "?";
}

}  // namespace detail

// --- ValidationReport -------------------------------------------------------

bool ValidationReport::has(ErrorCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << leafspace::to_string(v.code) << " at " << v.location << ": " << v.message << '\n';
  return os.str();
}

// --- LeafSpace --------------------------------------------------------------

std::variant<LeafSpace, ValidationReport> LeafSpace::validate(const Description& raw) {
  Checker checker(raw);
  std::vector<Violation> violations = checker.run();
  if (!violations.empty()) return ValidationReport{std::move(violations)};
  return LeafSpace(build_topology(raw));
}

LeafSpace LeafSpace::from(const Description& raw) {
  auto result = validate(raw);
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    std::string text = report->to_string();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    throw Error(ErrorCode::ValidationFailed, text);
  }
  return std::get<LeafSpace>(std::move(result));
}

const std::vector<std::string>& LeafSpace::vertices() const { return impl_->canonical.vertices; }
const std::vector<Edge>& LeafSpace::edges() const { return impl_->canonical.edges; }
const std::vector<Junction>& LeafSpace::junctions() const { return impl_->canonical.junctions; }
const Description& LeafSpace::description() const { return impl_->canonical; }

bool LeafSpace::has_vertex(std::string_view id) const { return impl_->vertex_index.count(std::string(id)) > 0; }
bool LeafSpace::has_edge(std::string_view id) const { return impl_->edge_index.count(std::string(id)) > 0; }
bool LeafSpace::has_junction(std::string_view id) const { return impl_->junction_index.count(std::string(id)) > 0; }
bool LeafSpace::has_end(std::string_view name) const { return impl_->end_index.count(std::string(name)) > 0; }

const Edge& LeafSpace::edge(std::string_view id) const { return edges()[impl_->edge_of(id)]; }
const Junction& LeafSpace::junction(std::string_view id) const { return junctions()[impl_->junction_of(id)]; }

EndRef LeafSpace::end(std::string_view name) const {
  auto it = impl_->end_index.find(std::string(name));
  if (it == impl_->end_index.end()) throw Error(ErrorCode::UnknownEnd, std::string(name));
  return impl_->end_refs[it->second];
}

std::size_t LeafSpace::node_count() const { return impl_->nodes.size(); }

bool operator==(const LeafSpace& a, const LeafSpace& b) {
  const Description& x = a.description();
  const Description& y = b.description();
  return x.vertices == y.vertices && x.edges == y.edges && x.junctions == y.junctions;
}

// --- Queries ----------------------------------------------------------------

Sign junction_sign(const LeafSpace& space, std::string_view junction) {
  const Topology& t = space.topology();
  return t.junction_signs[t.junction_of(junction)];
}

Sign side_of(const LeafSpace& space, const PointRef& t, const PointRef& p) {
  const Topology& topo = space.topology();
  std::vector<Step> steps = topo.walk(topo.locate(t), topo.locate(p));
  return steps.front().arc.up ? Sign::Positive : Sign::Negative;
}

bool separates(const LeafSpace& space, const PointRef& t, const PointRef& u, const PointRef& v) {
  const Topology& topo = space.topology();
  Location lt = topo.locate(t), lu = topo.locate(u), lv = topo.locate(v);
  if (lt == lu || lt == lv || lu == lv)
    throw Error(ErrorCode::SamePoint, "separation query needs three distinct points");

  // Nodes through which a location is reachable once t is removed.
  auto anchors = [&](const Location& l) -> std::vector<int> {
    if (!l.on_edge()) return {l.node};
    int lo = topo.edge_lower_node[l.edge], up = topo.edge_upper_node[l.edge];
    if (lt.on_edge() && lt.edge == l.edge) return {l.pos < lt.pos ? lo : up};
    return {lo, up};
  };
  if (lu.on_edge() && lv.on_edge() && lu.edge == lv.edge) {
    if (!(lt.on_edge() && lt.edge == lu.edge)) return false;
    return (lu.pos < lt.pos) != (lv.pos < lt.pos);
  }

  const int removed = lt.on_edge() ? -1 : lt.node;
  const int cut_edge = lt.on_edge() ? lt.edge : -1;
  std::vector<char> seen(topo.nodes.size(), 0);
  std::deque<int> queue;
  for (int a : anchors(lu)) {
    if (a == removed || seen[a]) continue;
    seen[a] = 1;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const Arc& arc : topo.nodes[x].arcs) {
      if (arc.to == removed || seen[arc.to]) continue;
      if (arc.kind == ArcKind::Edge && arc.edge == cut_edge) continue;
      seen[arc.to] = 1;
      queue.push_back(arc.to);
    }
  }
  for (int a : anchors(lv))
    if (a != removed && seen[a]) return false;
  return true;
}

std::vector<Cataclysm> cataclysms(const LeafSpace& space) {
  const Topology& t = space.topology();
  std::vector<Cataclysm> out;
  for (int j = 0; j < t.junction_count(); ++j) {
    const Junction& junction = t.canonical.junctions[j];
    out.push_back({junction.id, t.junction_signs[j], junction.members});
  }
  return out;
}

EndSets ends(const LeafSpace& space) {
  EndSets out;
  for (const EndRef& x : space.topology().end_refs)
    (x.positive() ? out.positive : out.negative).push_back(x);
  return out;
}

BranchingClass classify_branching(const LeafSpace& space) {
  EndSets e = ends(space);
  const std::size_t pos = e.positive.size(), neg = e.negative.size();
  if (pos == 1 && neg == 1) return {Branching::RCoveredProxy, std::nullopt};
  if (pos == 1) return {Branching::OneSidedProxy, Sign::Negative};
  if (neg == 1) return {Branching::OneSidedProxy, Sign::Positive};
  return {Branching::TwoSidedProxy, std::nullopt};
}

std::string to_string(const PointRef& p) {
  if (const auto* v = std::get_if<AtVertex>(&p)) return "v:" + v->vertex;
  const auto& e = std::get<OnEdge>(p);
  return "e:" + e.edge + "@" + std::to_string(e.position.numerator()) + "/" +
         std::to_string(e.position.denominator());
}

std::string to_string(Branching b) {
  switch (b) {
    case Branching::RCoveredProxy: return "RCoveredProxy";
    case Branching::OneSidedProxy: return "OneSidedProxy";
    case Branching::TwoSidedProxy: return "TwoSidedProxy";
  }
  return "?";
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<Rational> parse_rational(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(s.substr(0, slash));
    auto den = parse_int(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  // Plain decimal such as 0.25.
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    auto whole = parse_int(s);
    if (!whole) return std::nullopt;
    return Rational(*whole);
  }
  auto whole = dot == 0 ? std::optional<std::int64_t>(0) : parse_int(s.substr(0, dot));
  std::string_view frac = s.substr(dot + 1);
  auto digits = parse_int(frac);
  if (!whole || !digits || frac.empty() || frac.size() > 17) return std::nullopt;
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(*whole) + Rational(*digits, scale);
}

}  // namespace

PointRef parse_point(std::string_view token) {
  if (token.rfind("v:", 0) == 0) {
    std::string id(token.substr(2));
    if (!valid_identifier(id)) throw Error(ErrorCode::SyntaxError, "bad vertex point '" + std::string(token) + "'");
    return AtVertex{id};
  }
  if (token.rfind("e:", 0) == 0) {
    auto at = token.rfind('@');
    if (at == std::string_view::npos)
      throw Error(ErrorCode::SyntaxError, "edge point needs '@position': '" + std::string(token) + "'");
    std::string id(token.substr(2, at - 2));
    auto pos = parse_rational(token.substr(at + 1));
    if (!valid_identifier(id) || !pos)
      throw Error(ErrorCode::SyntaxError, "bad edge point '" + std::string(token) + "'");
    return OnEdge{id, *pos};
  }
  throw Error(ErrorCode::SyntaxError, "point must be v:<id> or e:<id>@<pos>: '" + std::string(token) + "'");
}

bool valid_identifier(std::string_view id) {
  if (id.empty() || id.front() == '#') return false;
  for (unsigned char ch : id) {
    if (ch < 0x21 || ch == 0x7f || ch == ',') return false;
  }
  return true;
}

}  // namespace leafspace
