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

#include "battery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "leafspace/endorder.hpp"
#include "leafspace/morphisms.hpp"
#include "leafspace/paths.hpp"

namespace leafspace::cli {

bool BatteryReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

std::vector<std::vector<std::string>> nonseparation_cliques(const LeafSpace& space) {
  const std::vector<std::string>& vs = space.vertices();
  std::vector<PointRef> candidates;
  for (const std::string& v : vs) candidates.push_back(AtVertex{v});
  for (const Edge& e : space.edges()) candidates.push_back(OnEdge{e.id, Rational(1, 2)});

  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const PointRef u = AtVertex{vs[a]}, w = AtVertex{vs[b]};
      bool separated = false;
      for (const PointRef& t : candidates) {
        if (t == u || t == w) continue;
        if (separates(space, t, u, w)) {
          separated = true;
          break;
        }
      }
      adj[a][b] = adj[b][a] = !separated;
    }

  // Bron-Kerbosch with pivoting.
  std::vector<std::vector<std::string>> out;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t> r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          if (r.size() >= 2) {
            std::vector<std::string> c;
            for (std::size_t i : r) c.push_back(vs[i]);
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
          }
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::vector<std::size_t> todo;
        for (std::size_t v : p)
          if (!adj[pivot][v]) todo.push_back(v);
        for (std::size_t v : todo) {
          std::vector<std::size_t> np, nx;
          for (std::size_t w : p)
            if (adj[v][w]) np.push_back(w);
          for (std::size_t w : x)
            if (adj[v][w]) nx.push_back(w);
          auto nr = r;
          nr.push_back(v);
          bk(nr, np, nx);
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  bk({}, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void fail(CheckResult& c, const std::string& witness) {
  if (c.failures++ == 0) c.witness = witness;
}

}  // namespace

BatteryReport run_battery(const LeafSpace& space, const std::string& file) {
  BatteryReport report;
  const std::string pre = "leafspace ";

  {
    CheckResult c{"oracle", 0, 0, {}};
    std::vector<std::vector<std::string>> want;
    for (const Cataclysm& k : cataclysms(space)) {
      auto m = k.members;
      std::sort(m.begin(), m.end());
      want.push_back(m);
    }
    std::sort(want.begin(), want.end());
    c.count = space.vertices().size() * (space.vertices().size() - (space.vertices().empty() ? 0 : 1)) / 2;
    if (nonseparation_cliques(space) != want) fail(c, pre + "cataclysms " + file);
    report.checks.push_back(c);
  }

  const std::vector<EndRef> pos = ends(space).positive;
  const std::size_t k = pos.size();

  {
    CheckResult c{"alternation", 0, 0, {}};
    auto check_path = [&](const BrokenPath& p, const std::string& witness) {
      ++c.count;
      bool ok = p.cusps.size() + 1 == p.segments.size();
      for (std::size_t i = 1; ok && i < p.cusps.size(); ++i)
        ok = p.cusps[i].junction_sign != p.cusps[i - 1].junction_sign;
      for (std::size_t i = 1; ok && i < p.segments.size(); ++i)
        ok = p.segments[i].orientation != p.segments[i - 1].orientation;
      if (!ok) fail(c, witness);
    };
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j)
          check_path(broken_path_ends(space, pos[i], pos[j]),
                     pre + "path " + file + " free:" + pos[i].name + " free:" + pos[j].name);
    const auto& vs = space.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        check_path(broken_path(space, AtVertex{vs[i]}, AtVertex{vs[j]}),
                   pre + "path " + file + " v:" + vs[i] + " v:" + vs[j]);
    report.checks.push_back(c);
  }

  const std::vector<std::vector<int>> nm = n_matrix(space);
  auto n_cmd = [&](std::size_t i, std::size_t j) {
    return pre + "n " + file + " " + pos[i].name + " " + pos[j].name;
  };

  CheckResult anti{"antisymmetry", 0, 0, {}}, parity{"parity", 0, 0, {}};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      ++report.pairs;
      ++anti.count;
      ++parity.count;
      if (nm[i][j] != -nm[j][i]) fail(anti, n_cmd(i, j));
      if (nm[i][j] % 2 == 0) fail(parity, n_cmd(i, j));
    }
  report.checks.push_back(anti);
  report.checks.push_back(parity);

  CheckResult tri{"triangle", 0, 0, {}}, trans{"transitivity", 0, 0, {}};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        if (a == b || b == c || a == c) continue;
        ++report.triples;
        ++tri.count;
        ++trans.count;
        const int delta = nm[a][c] - (nm[a][b] + nm[b][c]);
        const std::string w = pre + "triangle " + file + " " + pos[a].name + " " + pos[b].name + " " + pos[c].name;
        if (delta != 1 && delta != -1) fail(tri, w);
        if (nm[a][b] > 0 && nm[b][c] > 0 && !(nm[a][c] > 0)) fail(trans, w);
      }
  report.checks.push_back(tri);
  report.checks.push_back(trans);

  {
    CheckResult c{"order", 0, 0, {}};
    const std::vector<EndRef> order = end_order(space);
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) idx[pos[i].name] = i;
    std::set<std::string> seen;
    if (order.size() != k) fail(c, pre + "end-order " + file);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!seen.insert(order[i].name).second) fail(c, pre + "end-order " + file);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        ++c.count;
        const std::size_t a = idx.at(order[i].name), b = idx.at(order[j].name);
        if (!(nm[a][b] < 0)) fail(c, n_cmd(a, b));
      }
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"rigidity", 0, 0, {}};
    if (space.node_count() <= kDefaultNodeBound) {
      const std::vector<LeafSpaceMap> autos = enumerate_automorphisms(space);
      c.count = autos.size();
      if (autos.size() != 1 || !is_identity(autos.front())) fail(c, pre + "auto " + file);
    }
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace leafspace::cli
