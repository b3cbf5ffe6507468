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

#include "leafspace/grouporder.hpp"

#include <map>

namespace leafspace {

std::int64_t spiral(std::size_t i) {
  if (i == 0) return 0;
  const auto k = static_cast<std::int64_t>((i + 1) / 2);
  return i % 2 == 1 ? k : -k;
}

OrderedCarrier<std::int64_t> integer_carrier() {
  return {[](std::int64_t a, std::int64_t b) { return a < b; }, [](std::size_t i) { return spiral(i); },
          std::nullopt};
}

ActingElement<std::int64_t> translation(std::int64_t a) {
  return {"t" + std::to_string(a), [a](std::int64_t x) { return x + a; }};
}

LeftOrder<IntPair> pair_order(bool reverse_kernel) {
  LeftOrder<IntPair> h{[reverse_kernel](const IntPair& g) { return reverse_kernel ? g.first < 0 : g.first > 0; }};
  LeftOrder<std::int64_t> q{[](std::int64_t x) { return x > 0; }};
  return extend_order<IntPair, std::int64_t>(
      h, q, [](const IntPair& g) { return g.second; }, [](const IntPair& g) { return g.second == 0; }, 0);
}

OrderedCarrier<EndPoint> end_carrier(const LeafSpace& space, std::size_t tiles) {
  const std::size_t k = ends(space).positive.size();
  std::optional<std::size_t> size;
  if (tiles > 0) size = tiles * k;
  return {[](const EndPoint& a, const EndPoint& b) { return a < b; },
          [k](std::size_t i) { return EndPoint{spiral(i / k), i % k}; }, size};
}

ActingElement<EndPoint> end_action(const LeafSpaceMap& m, std::string label) {
  const std::vector<EndRef> order = end_order(m.source);
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].name] = i;
  std::vector<std::size_t> image(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = m.end_map.find(order[i].name);
    if (it == m.end_map.end() || !rank.count(it->second))
      throw Error(ErrorCode::NotAdmissible, "positive end " + order[i].name + " is not carried to a positive end");
    image[i] = rank.at(it->second);
  }
  if (label.empty()) label = serialize_map(m);
  return {std::move(label), [image](const EndPoint& p) { return EndPoint{p.tile, image.at(p.rank)}; }};
}

AssembleResult assemble_end_order(const LeafSpace& space, const std::vector<ActingElement<EndPoint>>& autos,
                                  std::size_t depth, std::size_t tiles) {
  OrderedCarrier<EndPoint> carrier = end_carrier(space, tiles);
  const std::size_t d = carrier.usable_depth(depth);
  std::vector<std::string> kernel;
  for (const auto& g : autos) {
    bool fixes = true;
    for (std::size_t i = 0; i < d && fixes; ++i) {
      const EndPoint b = carrier.basepoint(i);
      fixes = carrier.equal(g.apply(b), b);
    }
    if (fixes) kernel.push_back(g.label);
  }
  if (kernel.size() <= 1) return order_from_action(autos, carrier, depth);

  std::optional<UnicuspPair> pair = find_unicusp_pair(space);
  if (!pair) throw Error(ErrorCode::NotFound, "kernel is nontrivial and the model has no unicusp pair");
  Degenerate out{kernel, *pair, {pair->cusp.from, pair->cusp.to},
                 std::to_string(kernel.size()) +
                     " elements act trivially on the ends; an order on the stabilizer must be supplied"};
  return out;
}

}  // namespace leafspace
