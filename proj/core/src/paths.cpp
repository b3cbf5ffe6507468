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

#include "leafspace/paths.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "topology.hpp"

namespace leafspace {

namespace {

using detail::ArcKind;
using detail::Location;
using detail::NodeKind;
using detail::Step;
using detail::Topology;

Sign trivial_orientation(const std::optional<Sign>& before, const std::optional<Sign>& after) {
  // A trivial segment between a negative and a positive junction points
  // from the negative side to the positive side.
  if (before) return *before == Sign::Negative ? Sign::Positive : Sign::Negative;
  if (after) return *after;
  return Sign::Positive;
}

class Decomposer {
 public:
  Decomposer(const Topology& t, Endpoint source, Endpoint target)
      : t_(t), source_(std::move(source)), target_(std::move(target)) {}

  BrokenPath run(const Location& start, const std::vector<Step>& steps) {
    path_.source = source_;
    path_.target = target_;
    open_segment(source_);
    if (!start.on_edge()) enter_node(start.node);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Step& s = steps[i];
      if (is_cusp(steps, i)) {
        const int junction = s.arc.junction;
        const int a = s.arc.member;
        const int b = steps[i + 1].arc.member;
        close_segment(AtVertex{vertex_id(a)});
        add_cusp(junction, a, b);
        open_segment(AtVertex{vertex_id(b)});
        enter_node(t_.vertex_node(b));
        ++i;
        continue;
      }
      Sign dir = s.arc.up ? Sign::Positive : Sign::Negative;
      if (current_orientation_ && *current_orientation_ != dir)
        throw std::logic_error("broken path segment is not monotone");
      current_orientation_ = dir;
      moved_ = true;
      if (s.arc.kind == ArcKind::Edge) {
        current_.itinerary.push_back({Piece::Kind::EdgeSpan, t_.canonical.edges[s.arc.edge].id,
                                      std::min(s.from_pos, s.to_pos),
                                      std::max(s.from_pos, s.to_pos)});
      }
      if (s.to >= 0) enter_node(s.to);
    }
    close_segment(target_);
    finish();
    return std::move(path_);
  }

 private:
  bool is_cusp(const std::vector<Step>& steps, std::size_t i) const {
    if (i + 1 >= steps.size()) return false;
    const Step& in = steps[i];
    const Step& out = steps[i + 1];
    return in.arc.kind == ArcKind::Membership && out.arc.kind == ArcKind::Membership &&
           t_.nodes[in.to].kind == NodeKind::Junction;
  }

  const std::string& vertex_id(int v) const { return t_.canonical.vertices[v]; }

  void enter_node(int node) {
    if (t_.nodes[node].kind == NodeKind::Vertex)
      current_.itinerary.push_back({Piece::Kind::Vertex, vertex_id(t_.nodes[node].index), 0, 0});
  }

  void open_segment(Endpoint from) {
    current_ = Segment{};
    current_.index = static_cast<int>(path_.segments.size()) + 1;
    current_.from = std::move(from);
    current_orientation_.reset();
    moved_ = false;
  }

  void close_segment(Endpoint to) {
    current_.to = std::move(to);
    current_.trivial = !moved_;
    if (current_orientation_) current_.orientation = *current_orientation_;
    path_.segments.push_back(std::move(current_));
  }

  void add_cusp(int junction, int a, int b) {
    const Junction& j = t_.canonical.junctions[junction];
    auto pos = [&](int v) {
      return std::find(j.members.begin(), j.members.end(), vertex_id(v)) - j.members.begin();
    };
    Cusp c;
    c.index = static_cast<int>(path_.cusps.size()) + 1;
    c.from = vertex_id(a);
    c.to = vertex_id(b);
    c.junction = j.id;
    c.sign = pos(a) < pos(b) ? Sign::Positive : Sign::Negative;
    c.junction_sign = t_.junction_signs[junction];
    path_.cusps.push_back(std::move(c));
  }

  void finish() {
    for (std::size_t k = 0; k < path_.segments.size(); ++k) {
      Segment& seg = path_.segments[k];
      if (!seg.trivial) continue;
      std::optional<Sign> before, after;
      if (k > 0) before = path_.cusps[k - 1].junction_sign;
      if (k < path_.cusps.size()) after = path_.cusps[k].junction_sign;
      seg.orientation = trivial_orientation(before, after);
    }
  }

  const Topology& t_;
  Endpoint source_;
  Endpoint target_;
  BrokenPath path_;
  Segment current_;
  std::optional<Sign> current_orientation_;
  bool moved_ = false;
};

Endpoint as_endpoint(const PointRef& p) {
  if (const auto* v = std::get_if<AtVertex>(&p)) return *v;
  return std::get<OnEdge>(p);
}

}  // namespace

std::string to_string(const Endpoint& e) {
  if (const auto* v = std::get_if<AtVertex>(&e)) return "v:" + v->vertex;
  if (const auto* p = std::get_if<OnEdge>(&e)) return to_string(PointRef{*p});
  return "free:" + std::get<EndRef>(e).name;
}

bool BrokenPath::contains(const PointRef& p) const {
  for (const Segment& seg : segments) {
    for (const Piece& piece : seg.itinerary) {
      if (const auto* v = std::get_if<AtVertex>(&p)) {
        if (piece.kind == Piece::Kind::Vertex && piece.id == v->vertex) return true;
      } else {
        const auto& e = std::get<OnEdge>(p);
        if (piece.kind == Piece::Kind::EdgeSpan && piece.id == e.edge && piece.lo <= e.position &&
            e.position <= piece.hi)
          return true;
      }
    }
  }
  return false;
}

BrokenPath BrokenPath::reversed() const {
  BrokenPath r;
  r.source = target;
  r.target = source;
  const int ns = static_cast<int>(segments.size());
  for (int k = ns - 1; k >= 0; --k) {
    Segment s = segments[k];
    s.index = ns - k;
    std::swap(s.from, s.to);
    s.orientation = flip(s.orientation);
    std::reverse(s.itinerary.begin(), s.itinerary.end());
    r.segments.push_back(std::move(s));
  }
  const int nc = static_cast<int>(cusps.size());
  for (int k = nc - 1; k >= 0; --k) {
    Cusp c = cusps[k];
    c.index = nc - k;
    std::swap(c.from, c.to);
    c.sign = flip(c.sign);
    r.cusps.push_back(std::move(c));
  }
  return r;
}

int BrokenPath::positive_cusps() const {
  return static_cast<int>(std::count_if(cusps.begin(), cusps.end(),
                                        [](const Cusp& c) { return c.sign == Sign::Positive; }));
}

int BrokenPath::negative_cusps() const {
  return static_cast<int>(cusps.size()) - positive_cusps();
}

BrokenPath broken_path(const LeafSpace& space, const PointRef& u, const PointRef& v) {
  const Topology& t = space.topology();
  Location a = t.locate(u), b = t.locate(v);
  if (a == b) throw Error(ErrorCode::SamePoint, to_string(u));
  return Decomposer(t, as_endpoint(u), as_endpoint(v)).run(a, t.walk(a, b));
}

BrokenPath broken_path_ends(const LeafSpace& space, const EndRef& x1, const EndRef& x2) {
  const Topology& t = space.topology();
  Location a = t.locate(x1), b = t.locate(x2);
  if (a == b) throw Error(ErrorCode::SameEnd, x1.name);
  // Use the model's own end records so extremity and edge are canonical.
  return Decomposer(t, space.end(x1.name), space.end(x2.name)).run(a, t.walk(a, b));
}

std::pair<Sign, Sign> first_last_orientation(const BrokenPath& path) {
  return {path.segments.front().orientation, path.segments.back().orientation};
}

std::string render(const BrokenPath& path) {
  std::ostringstream os;
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const Segment& s = path.segments[k];
    os << "seg " << s.index << ' ' << to_string(s.from) << ' ' << to_string(s.to)
       << " orient=" << sign_char(s.orientation) << " trivial=" << (s.trivial ? 1 : 0) << '\n';
    if (k < path.cusps.size()) {
      const Cusp& c = path.cusps[k];
      os << "cusp " << c.index << " v:" << c.from << " v:" << c.to << " at=" << c.junction
         << " sign=" << sign_char(c.sign) << '\n';
    }
  }
  return os.str();
}

}  // namespace leafspace
