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

#include "leafspace/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "leafspace/endorder.hpp"
#include "topology.hpp"

namespace leafspace {

namespace {

Attachment v(std::string id) { return VertexEnd{std::move(id)}; }
Attachment j(std::string id) { return JunctionStem{std::move(id)}; }
Attachment f(std::string id) { return Free{std::move(id)}; }

Description line() { return {{}, {{"e0", f("N"), f("X")}}, {}}; }

Description y_neg() {
  return {{"w", "u", "v"},
          {{"e0", f("n0"), v("w")}, {"e1", v("w"), j("J")}, {"e2", v("u"), f("X1")}, {"e3", v("v"), f("X2")}},
          {{"J", {"u", "v"}}}};
}

Description y_pos() {
  return {{"w", "u", "v"},
          {{"e0", v("w"), f("x0")}, {"e1", j("P"), v("w")}, {"e2", f("N1"), v("u")}, {"e3", f("N2"), v("v")}},
          {{"P", {"u", "v"}}}};
}

Description y3() {
  return {{"w", "u1", "u2", "u3"},
          {{"e0", f("n0"), v("w")},
           {"e1", v("w"), j("J")},
           {"e2", v("u1"), f("X1")},
           {"e3", v("u2"), f("X2")},
           {"e4", v("u3"), f("X3")}},
          {{"J", {"u1", "u2", "u3"}}}};
}

Description two_sided() {
  return {{"p1", "p2", "w", "u", "v"},
          {{"e1", f("N1"), v("p1")},
           {"e2", f("N2"), v("p2")},
           {"e3", j("P"), v("w")},
           {"e4", v("w"), j("J")},
           {"e5", v("u"), f("X1")},
           {"e6", v("v"), f("X2")}},
          {{"P", {"p1", "p2"}}, {"J", {"u", "v"}}}};
}

// Broken path from t1 to t16 crosses M1..M7 in turn. t9 sits in both M4
// and M5, so the segment between those two cusps is a single point.
Description figure_alpha() {
  Description d;
  for (int i : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16}) d.vertices.push_back("t" + std::to_string(i));
  d.edges = {{"r1", v("t1"), f("X1")},   {"r16", v("t16"), f("X16")}, {"c1", v("t2"), v("t1")},
             {"c2", v("t3"), v("t4")},   {"c3", v("t6"), v("t5")},    {"c4", v("t7"), v("t8")},
             {"c5", v("t11"), v("t12")}, {"c6", v("t14"), v("t13")},  {"c7", v("t15"), v("t16")}};
  const std::vector<std::pair<std::string, std::vector<std::string>>> js = {
      {"M1", {"t2", "t3"}},  {"M2", {"t5", "t4"}},   {"M3", {"t6", "t7"}},  {"M4", {"t8", "t9"}},
      {"M5", {"t11", "t9"}}, {"M6", {"t12", "t13"}}, {"M7", {"t15", "t14"}}};
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string k = std::to_string(i + 1);
    const bool positive = i % 2 == 1;
    d.edges.push_back(positive ? Edge{"s" + k, j(js[i].first), f("y" + k)}
                               : Edge{"s" + k, f("n" + k), j(js[i].first)});
    d.junctions.push_back({js[i].first, js[i].second});
  }
  return d;
}

// Three junctions between X1 and X2, one of them positive, with a
// waypoint u below J1 and a waypoint v above f.
Description figure_ends() {
  return {{"u", "a1", "b1", "c", "d", "e", "f", "v"},
          {{"e1", f("n1"), v("u")},
           {"e2", v("u"), j("J1")},
           {"e3", v("a1"), f("X1")},
           {"e4", v("b1"), v("c")},
           {"e5", j("P1"), f("Y")},
           {"e6", v("e"), v("d")},
           {"e7", f("n2"), j("J2")},
           {"e8", v("f"), v("v")},
           {"e9", v("v"), f("X2")}},
          {{"J1", {"a1", "b1"}}, {"P1", {"c", "d"}}, {"J2", {"f", "e"}}}};
}

std::string attach_text(const Attachment& a) {
  if (const auto* x = std::get_if<VertexEnd>(&a)) return "v:" + x->vertex;
  if (const auto* x = std::get_if<JunctionStem>(&a)) return "j:" + x->junction;
  return "free:" + std::get<Free>(a).end;
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"line", "y-neg", "y-pos", "y3", "two-sided", "figure-alpha", "figure-ends"};
}

LeafSpace builtin(std::string_view name) {
  if (name == "line") return LeafSpace::from(line());
  if (name == "y-neg") return LeafSpace::from(y_neg());
  if (name == "y-pos") return LeafSpace::from(y_pos());
  if (name == "y3") return LeafSpace::from(y3());
  if (name == "two-sided") return LeafSpace::from(two_sided());
  if (name == "figure-alpha" || name == "figure-α") return LeafSpace::from(figure_alpha());
  if (name == "figure-ends") return LeafSpace::from(figure_ends());
  throw Error(ErrorCode::UnknownName, std::string(name));
}

LeafSpace generate(const GeneratorConfig& cfg) {
  if (cfg.junction_count > kMaxGeneratedJunctions)
    throw Error(ErrorCode::ConfigBound, "junction_count above " + std::to_string(kMaxGeneratedJunctions));
  if (cfg.max_arity < 2) throw Error(ErrorCode::ConfigBound, "max_arity below 2");
  if (!(cfg.sign_bias >= 0.0 && cfg.sign_bias <= 1.0))
    throw Error(ErrorCode::ConfigBound, "sign_bias outside [0,1]");

  // Raw engine output only, so the stream is identical on every platform.
  std::mt19937_64 rng(cfg.seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  Description d = line();
  std::size_t next_vertex = 1, next_edge = 1, next_pos = 1, next_neg = 1;

  for (std::size_t k = 1; k <= cfg.junction_count; ++k) {
    const bool positive = unit() < cfg.sign_bias;
    const std::size_t arity = 2 + below(cfg.max_arity - 1);
    const std::size_t target = below(d.edges.size());
    const std::string jid = "J" + std::to_string(k);

    std::vector<std::string> members;
    for (std::size_t i = 0; i < arity; ++i) members.push_back("v" + std::to_string(next_vertex++));
    for (const std::string& m : members) d.vertices.push_back(m);

    Edge& cut = d.edges[target];
    Edge rest{"e" + std::to_string(next_edge++), {}, {}};
    if (!positive) {
      rest.lower = v(members[0]);
      rest.upper = cut.upper;
      cut.upper = j(jid);
    } else {
      rest.lower = cut.lower;
      rest.upper = v(members[0]);
      cut.lower = j(jid);
    }
    d.edges.push_back(std::move(rest));
    for (std::size_t i = 1; i < arity; ++i) {
      Edge ray{"e" + std::to_string(next_edge++), {}, {}};
      if (!positive) {
        ray.lower = v(members[i]);
        ray.upper = f("X" + std::to_string(next_pos++));
      } else {
        ray.lower = f("N" + std::to_string(next_neg++));
        ray.upper = v(members[i]);
      }
      d.edges.push_back(std::move(ray));
    }
    for (std::size_t i = members.size(); i > 1; --i) std::swap(members[i - 1], members[below(i)]);
    d.junctions.push_back({jid, std::move(members)});
  }
  return LeafSpace::from(d);
}

std::vector<GeneratorConfig> corpus_configs(std::size_t count, std::uint64_t base_seed, std::size_t max_junctions,
                                            std::size_t max_arity) {
  static constexpr double kBiases[] = {0.5, 0.25, 0.75, 0.0, 1.0};
  std::vector<GeneratorConfig> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({base_seed + i, i % (max_junctions + 1), max_arity, kBiases[i % 5]});
  return out;
}

Description parse_description(std::string_view text) {
  Description d;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++lineno;

    std::vector<std::string> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t b = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (b == i) continue;
      if (line[b] == '#') break;
      tok.emplace_back(line.substr(b, i - b));
    }
    if (tok.empty()) continue;

    auto fail = [&](const std::string& msg) -> Error {
      return Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
    };
    auto attach = [&](const std::string& t) -> Attachment {
      auto rest = [&](std::size_t n) {
        if (t.size() == n) throw fail("empty attachment '" + t + "'");
        return t.substr(n);
      };
      if (t.rfind("v:", 0) == 0) return v(rest(2));
      if (t.rfind("j:", 0) == 0) return j(rest(2));
      if (t.rfind("free:", 0) == 0) return f(rest(5));
      throw fail("unknown attachment token '" + t + "'");
    };

    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw fail("expected 'vertex <id>'");
      d.vertices.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw fail("expected 'edge <id> <lower> <upper>'");
      d.edges.push_back({tok[1], attach(tok[2]), attach(tok[3])});
    } else if (tok[0] == "junction") {
      if (tok.size() != 3 || tok[2].rfind("members=", 0) != 0)
        throw fail("expected 'junction <id> members=<v>,<v>[,...]'");
      Junction jn{tok[1], {}};
      std::string list = tok[2].substr(8);
      std::size_t p = 0;
      while (true) {
        std::size_t c = list.find(',', p);
        std::string item = list.substr(p, c == std::string::npos ? std::string::npos : c - p);
        if (item.empty()) throw fail("empty member in '" + tok[2] + "'");
        jn.members.push_back(item);
        if (c == std::string::npos) break;
        p = c + 1;
      }
      d.junctions.push_back(std::move(jn));
    } else {
      throw fail("unknown record '" + tok[0] + "'");
    }
  }
  return d;
}

LeafSpace parse(std::string_view text) { return LeafSpace::from(parse_description(text)); }

std::string serialize(const Description& d) {
  Description s = d;
  std::sort(s.vertices.begin(), s.vertices.end());
  std::sort(s.edges.begin(), s.edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::sort(s.junctions.begin(), s.junctions.end(), [](const Junction& a, const Junction& b) { return a.id < b.id; });
  std::string out;
  for (const std::string& x : s.vertices) out += "vertex " + x + "\n";
  for (const Edge& e : s.edges) out += "edge " + e.id + " " + attach_text(e.lower) + " " + attach_text(e.upper) + "\n";
  for (const Junction& jn : s.junctions) {
    out += "junction " + jn.id + " members=";
    for (std::size_t i = 0; i < jn.members.size(); ++i) out += (i ? "," : "") + jn.members[i];
    out += "\n";
  }
  return out;
}

std::string serialize(const LeafSpace& space) { return serialize(space.description()); }

std::string export_graph(const LeafSpace& space, bool annotate) {
  std::map<std::string, std::size_t> rank;
  if (annotate) {
    const std::vector<EndRef> order = end_order(space);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].name] = i + 1;
  }
  std::string out = "digraph leafspace {\n  rankdir=BT;\n";
  for (const std::string& x : space.vertices())
    out += "  " + dot_id("v:" + x) + " [shape=circle, label=" + dot_id(x) + "];\n";
  for (const Cataclysm& c : cataclysms(space)) {
    std::string label = c.sign == Sign::Positive ? "+ [" : "− [";
    for (std::size_t i = 0; i < c.members.size(); ++i) label += (i ? "<" : "") + c.members[i];
    label += "]";
    out += "  " + dot_id("j:" + c.junction) + " [shape=diamond, label=" + dot_id(label) + ", tooltip=" + dot_id(c.junction) + "];\n";
  }
  for (const EndRef& x : space.topology().end_refs) {
    std::string label = x.name;
    if (auto it = rank.find(x.name); it != rank.end()) label += " #" + std::to_string(it->second);
    out += "  " + dot_id("free:" + x.name) + " [shape=rarrow, label=" + dot_id(label) + "];\n";
  }
  for (const Edge& e : space.edges())
    out += "  " + dot_id(attach_text(e.lower)) + " -> " + dot_id(attach_text(e.upper)) + " [label=" + dot_id(e.id) +
           "];\n";
  for (const Cataclysm& c : cataclysms(space))
    for (const std::string& m : c.members) {
      const std::string a = dot_id("v:" + m), b = dot_id("j:" + c.junction);
      out += "  " + (c.sign == Sign::Positive ? a + " -> " + b : b + " -> " + a) + " [style=dashed];\n";
    }
  return out + "}\n";
}

}  // namespace leafspace
