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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "battery.hpp"
#include "leafspace/corpus.hpp"
#include "leafspace/endorder.hpp"
#include "leafspace/grouporder.hpp"
#include "leafspace/morphisms.hpp"
#include "leafspace/paths.hpp"

namespace leafspace::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A domain failure whose lines were already collected.
struct Reported {
  std::vector<std::string> lines;
};

struct Options {
  std::vector<std::string> pos;
  std::uint64_t seed = 1;
  std::size_t junctions = 0;
  std::size_t arity = 3;
  double bias = 0.5;
  bool annotate = false;
  bool force = false;
  std::size_t depth = 8;
  bool json = false;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  void expect(std::size_t count, const std::string& shape) const {
    if (opt_.pos.size() != count) throw UsageError("expected: leafspace " + shape);
  }

  std::string read(const std::string& source) {
    if (source == "-") {
      if (stdin_used_) throw UsageError("standard input can be read only once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::ifstream f(source, std::ios::binary);
    if (!f) throw Reported{{"IoError: cannot read " + source}};
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  LeafSpace model(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8));
    auto result = LeafSpace::validate(parse_description(read(source)));
    if (auto* report = std::get_if<ValidationReport>(&result)) {
      Reported r;
      for (const Violation& v : report->violations)
        r.lines.push_back(std::string(to_string(v.code)) + " at " + v.location + ": " + v.message);
      throw r;
    }
    return std::get<LeafSpace>(std::move(result));
  }

  void emit(const json& payload, const std::string& text) {
    if (opt_.json)
      out_ << payload.dump(2) << '\n';
    else
      out_ << text;
  }

  json header(const std::string& command) const { return json{{"format", 1}, {"command", command}}; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

Endpoint parse_endpoint(const std::string& token) {
  if (token.rfind("free:", 0) == 0) return EndRef{{}, Extremity::Upper, token.substr(5)};
  return std::visit([](auto&& p) -> Endpoint { return p; }, parse_point(token));
}

json cusp_json(const Cusp& c) {
  return {{"index", c.index},         {"from", c.from}, {"to", c.to}, {"junction", c.junction},
          {"sign", sign_text(c.sign)}, {"junction_sign", sign_text(c.junction_sign)}};
}

json path_json(const BrokenPath& p) {
  json segs = json::array(), cusps = json::array();
  for (const Segment& s : p.segments)
    segs.push_back({{"index", s.index},
                    {"from", to_string(s.from)},
                    {"to", to_string(s.to)},
                    {"orientation", sign_text(s.orientation)},
                    {"trivial", s.trivial}});
  for (const Cusp& c : p.cusps) cusps.push_back(cusp_json(c));
  return {{"segments", segs}, {"cusps", cusps}};
}

int cmd_validate(Session& s, const Options& o) {
  s.expect(1, "validate FILE");
  LeafSpace L = s.model(o.pos[0]);
  const EndSets e = ends(L);
  json j = s.header("validate");
  j["valid"] = true;
  j["vertices"] = L.vertices().size();
  j["edges"] = L.edges().size();
  j["junctions"] = L.junctions().size();
  j["positive_ends"] = e.positive.size();
  j["negative_ends"] = e.negative.size();
  std::ostringstream t;
  t << "OK " << L.vertices().size() << " vertices, " << L.edges().size() << " edges, " << L.junctions().size()
    << " junctions, " << e.positive.size() << " positive ends, " << e.negative.size() << " negative ends\n";
  s.emit(j, t.str());
  return kOk;
}

int cmd_cataclysms(Session& s, const Options& o) {
  s.expect(1, "cataclysms FILE");
  LeafSpace L = s.model(o.pos[0]);
  json j = s.header("cataclysms");
  j["cataclysms"] = json::array();
  std::string t;
  for (const Cataclysm& c : cataclysms(L)) {
    j["cataclysms"].push_back({{"junction", c.junction}, {"sign", sign_text(c.sign)}, {"members", c.members}});
    t += c.junction + " " + sign_text(c.sign) + " [";
    for (std::size_t i = 0; i < c.members.size(); ++i) t += (i ? "<" : "") + c.members[i];
    t += "]\n";
  }
  s.emit(j, t);
  return kOk;
}

int cmd_path(Session& s, const Options& o) {
  s.expect(3, "path FILE A B   (A, B: v:<id> | e:<id>@<pos> | free:<end>)");
  LeafSpace L = s.model(o.pos[0]);
  Endpoint a = parse_endpoint(o.pos[1]);
  Endpoint b = parse_endpoint(o.pos[2]);
  const auto* xa = std::get_if<EndRef>(&a);
  const auto* xb = std::get_if<EndRef>(&b);
  BrokenPath p;
  if (xa && xb) {
    p = broken_path_ends(L, L.end(xa->name), L.end(xb->name));
  } else if (!xa && !xb) {
    auto point = [](const Endpoint& e) -> PointRef {
      if (const auto* v = std::get_if<AtVertex>(&e)) return *v;
      return std::get<OnEdge>(e);
    };
    p = broken_path(L, point(a), point(b));
  } else {
    throw UsageError("path joins two points or two ends");
  }
  json j = s.header("path");
  j.update(path_json(p));
  s.emit(j, render(p));
  return kOk;
}

int cmd_end_order(Session& s, const Options& o) {
  s.expect(1, "end-order FILE");
  LeafSpace L = s.model(o.pos[0]);
  json j = s.header("end-order");
  j["order"] = json::array();
  std::string t;
  for (const EndRef& x : end_order(L)) {
    j["order"].push_back(x.name);
    t += x.name + "\n";
  }
  s.emit(j, t);
  return kOk;
}

int cmd_n(Session& s, const Options& o) {
  s.expect(3, "n FILE X1 X2");
  LeafSpace L = s.model(o.pos[0]);
  const CuspCount c = cusp_count(L, L.end(o.pos[1]), L.end(o.pos[2]));
  json j = s.header("n");
  j["x1"] = o.pos[1];
  j["x2"] = o.pos[2];
  j["n"] = c.n();
  j["positive_cusps"] = c.positive;
  j["negative_cusps"] = c.negative;
  s.emit(j, std::to_string(c.n()) + "\n");
  return kOk;
}

int cmd_triangle(Session& s, const Options& o) {
  s.expect(4, "triangle FILE X1 X2 X3");
  LeafSpace L = s.model(o.pos[0]);
  EndRef a = L.end(o.pos[1]), b = L.end(o.pos[2]), c = L.end(o.pos[3]);
  const TriangleCheck t = triangle_check(L, a, b, c);
  const TripleDecomposition d = triple_decompose(L, a, b, c);
  json j = s.header("triangle");
  j["n12"] = t.n12;
  j["n23"] = t.n23;
  j["n13"] = t.n13;
  j["delta"] = t.delta;
  j["holds"] = t.holds();
  j["case"] = to_string(d.proof_case);
  j["turning_side"] = to_string(d.turning_side);
  j["center"] = d.center ? json(*d.center) : json(nullptr);
  j["special_cusps"] = d.special.size();
  std::ostringstream os;
  os << "n12=" << t.n12 << " n23=" << t.n23 << " n13=" << t.n13 << "\n"
     << "delta=" << t.delta << "\n"
     << "case=" << to_string(d.proof_case) << " turning=" << to_string(d.turning_side)
     << " center=" << (d.center ? *d.center : "-") << "\n";
  s.emit(j, os.str());
  return kOk;
}

int cmd_unicusp(Session& s, const Options& o) {
  s.expect(1, "unicusp FILE");
  LeafSpace L = s.model(o.pos[0]);
  auto p = find_unicusp_pair(L);
  if (!p) throw Error(ErrorCode::NotFound, "no pair of positive ends is joined by a one-cusp curve");
  json j = s.header("unicusp");
  j["x1"] = p->x1.name;
  j["x2"] = p->x2.name;
  j["cusp"] = cusp_json(p->cusp);
  j["lambda_candidates"] = {p->cusp.from, p->cusp.to};
  s.emit(j, p->x1.name + " " + p->x2.name + " cusp v:" + p->cusp.from + " v:" + p->cusp.to +
                " at=" + p->cusp.junction + " sign=" + sign_text(p->cusp.sign) + "\n");
  return kOk;
}

int cmd_auto(Session& s, const Options& o) {
  s.expect(1, "auto FILE");
  LeafSpace L = s.model(o.pos[0]);
  const std::vector<LeafSpaceMap> autos = enumerate_automorphisms(L);
  json j = s.header("auto");
  j["count"] = autos.size();
  j["maps"] = json::array();
  std::string t = std::to_string(autos.size()) + " automorphism" + (autos.size() == 1 ? "" : "s") + "\n";
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const bool id = is_identity(autos[i]);
    j["maps"].push_back({{"identity", id}, {"vertices", autos[i].vertex_map}, {"ends", autos[i].end_map}});
    t += "map " + std::to_string(i + 1) + (id ? " identity" : "") + "\n" + serialize_map(autos[i]);
  }
  s.emit(j, t);
  return kOk;
}

int cmd_equiv(Session& s, const Options& o) {
  s.expect(3, "equiv FILE1 FILE2 MAPFILE [--force]");
  LeafSpace a = s.model(o.pos[0]);
  LeafSpace b = s.model(o.pos[1]);
  const MapText mt = parse_map_text(s.read(o.pos[2]));
  LeafSpaceMap m = make_map(a, b, mt.vertex_map, mt.end_map);
  auto ce = check_equivariance(m, o.force ? EquivarianceMode::Force : EquivarianceMode::RequireAdmissible);
  json j = s.header("equiv");
  j["ok"] = !ce;
  if (ce) j["counterexample"] = {{"x", ce->x}, {"y", ce->y}, {"n_source", ce->n_source},
                                 {"n_target", ce->n_target}, {"detail", ce->detail}};
  s.emit(j, ce ? "counterexample " + ce->x + " " + ce->y + " " + std::to_string(ce->n_source) + " " +
                     std::to_string(ce->n_target) + " (" + ce->detail + ")\n"
               : std::string("OK\n"));
  return ce ? kDomainError : kOk;
}

int cmd_gen(Session& s, const Options& o) {
  s.expect(0, "gen [--seed N] [--junctions K] [--arity A] [--bias B]");
  LeafSpace L = generate({o.seed, o.junctions, o.arity, o.bias});
  json j = s.header("gen");
  j["model"] = serialize(L);
  s.emit(j, serialize(L));
  return kOk;
}

int cmd_check(Session& s, const Options& o) {
  s.expect(1, "check FILE");
  LeafSpace L = s.model(o.pos[0]);
  const BatteryReport r = run_battery(L, o.pos[0]);
  json j = s.header("check");
  j["passed"] = r.passed();
  j["pairs"] = r.pairs;
  j["triples"] = r.triples;
  j["checks"] = json::array();
  std::ostringstream t;
  for (const CheckResult& c : r.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"count", c.count}, {"failures", c.failures}, {"witness", c.witness}});
    t << c.name << ' ' << (c.failures ? "FAIL" : "pass") << ' ' << c.count;
    if (c.failures) t << " failures=" << c.failures << " witness: " << c.witness;
    t << '\n';
  }
  t << (r.passed() ? "PASS" : "FAIL") << " pairs=" << r.pairs << " triples=" << r.triples << '\n';
  s.emit(j, t.str());
  return r.passed() ? kOk : kDomainError;
}

int cmd_export(Session& s, const Options& o) {
  s.expect(1, "export FILE [--annotate]");
  LeafSpace L = s.model(o.pos[0]);
  const std::string dot = export_graph(L, o.annotate);
  json j = s.header("export");
  j["dot"] = dot;
  s.emit(j, dot);
  return kOk;
}

int cmd_demo_order(Session& s, const Options& o) {
  s.expect(0, "demo-order [--depth D]");
  std::vector<ActingElement<std::int64_t>> ts;
  for (std::int64_t a : {2, -1, 0, 1, -2}) ts.push_back(translation(a));
  auto order = order_from_action(ts, integer_carrier(), o.depth);
  const LeftOrder<IntPair> pairs = pair_order();
  const std::vector<IntPair> samples = {{0, 1}, {-5, 1}, {-5, 0}, {5, 0}, {7, -1}, {0, 0}};

  json j = s.header("demo-order");
  j["depth"] = order.depth();
  j["translations"] = json::array();
  std::string t = "translations:";
  for (const auto& g : order.sorted()) {
    j["translations"].push_back(g.label);
    t += " " + g.label;
  }
  t += "\npairs (lexicographic by second, then first):\n";
  j["pairs"] = json::array();
  for (const IntPair& p : samples) {
    const bool pos = pairs.positive(p);
    j["pairs"].push_back({{"first", p.first}, {"second", p.second}, {"positive", pos}});
    t += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ") " + (pos ? "+" : "-") + "\n";
  }
  s.emit(j, t);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial leaf spaces: cataclysms, broken paths, end orders"};
  app.name("leafspace");
  app.require_subcommand(1);

  Options opt;
  using Handler = int (*)(Session&, const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", opt.pos, "positional arguments");
    sub->add_flag("--json", opt.json, "machine-readable report");
    commands.emplace_back(sub, h);
    return sub;
  };

  add("validate", "check every structural invariant", cmd_validate);
  add("cataclysms", "list junctions with sign and member order", cmd_cataclysms);
  add("path", "broken path between two points or two ends", cmd_path);
  add("end-order", "positive ends, least first", cmd_end_order);
  add("n", "signed cusp count between two positive ends", cmd_n);
  add("triangle", "triangle relation and case split for three ends", cmd_triangle);
  add("unicusp", "least pair of positive ends joined with one cusp", cmd_unicusp);
  add("auto", "enumerate admissible automorphisms", cmd_auto);
  add("equiv", "check equivariance of a map", cmd_equiv)->add_flag("--force", opt.force, "skip the admissibility gate");
  CLI::App* gen = add("gen", "generate a random model", cmd_gen);
  gen->add_option("--seed", opt.seed, "generator seed");
  gen->add_option("--junctions", opt.junctions, "number of junctions");
  gen->add_option("--arity", opt.arity, "maximum junction arity");
  gen->add_option("--bias", opt.bias, "probability of a positive junction");
  add("check", "run the invariant battery", cmd_check);
  add("export", "Graphviz rendering", cmd_export)->add_flag("--annotate", opt.annotate, "rank positive ends");
  add("demo-order", "left orders on translations and integer pairs", cmd_demo_order)
      ->add_option("--depth", opt.depth, "basepoints compared");

  std::vector<std::string> argv_store{"leafspace"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  Session session(opt, in, out);
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(session, opt);
    } catch (const UsageError& e) {
      err << e.what() << '\n';
      return kUsageError;
    } catch (const Reported& r) {
      for (const std::string& line : r.lines) err << line << '\n';
      return kDomainError;
    } catch (const Error& e) {
      std::istringstream lines(e.what());
      for (std::string line; std::getline(lines, line);) err << line << '\n';
      return kDomainError;
    }
  }
  return kUsageError;
}

}  // namespace leafspace::cli
