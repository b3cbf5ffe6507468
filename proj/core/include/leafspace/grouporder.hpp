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

#ifndef LEAFSPACE_GROUPORDER_HPP_
#define LEAFSPACE_GROUPORDER_HPP_

// Left orders from effective order-preserving actions (first-difference
// rule on an enumeration of basepoints) and lexicographic extension of
// orders along a normal subgroup.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leafspace/endorder.hpp"
#include "leafspace/error.hpp"
#include "leafspace/model.hpp"
#include "leafspace/morphisms.hpp"

namespace leafspace {

template <class Point>
struct OrderedCarrier {
  std::function<bool(const Point&, const Point&)> less;
  std::function<Point(std::size_t)> basepoint;
  // Number of basepoints for a finite carrier; nullopt when unbounded.
  std::optional<std::size_t> size;

  bool equal(const Point& a, const Point& b) const { return !less(a, b) && !less(b, a); }
  std::size_t usable_depth(std::size_t depth) const { return size ? std::min(depth, *size) : depth; }
};

template <class Point>
struct ActingElement {
  std::string label;
  std::function<Point(const Point&)> apply;
};

template <class G>
struct LeftOrder {
  std::function<bool(const G&)> positive;
};

/// g < h iff g(b_i) < h(b_i) at the least i < depth where they differ.
template <class Point>
class ActionOrder {
 public:
  ActionOrder(std::vector<ActingElement<Point>> elements, OrderedCarrier<Point> carrier, std::size_t depth)
      : elements_(std::move(elements)), carrier_(std::move(carrier)), depth_(carrier_.usable_depth(depth)) {
    if (depth == 0) throw Error(ErrorCode::ConfigBound, "depth must be positive");
    for (const auto& g : elements_) check_preserving(g);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t k = i + 1; k < elements_.size(); ++k)
        if (compare(elements_[i], elements_[k]) == 0)
          throw Error(ErrorCode::NotEffectiveAtDepth, elements_[i].label + " and " + elements_[k].label +
                                                          " agree on the first " + std::to_string(depth_) +
                                                          " basepoints");
  }

  /// -1, 0 or 1. Zero means indistinguishable at this depth.
  int compare(const ActingElement<Point>& g, const ActingElement<Point>& h) const {
    for (std::size_t i = 0; i < depth_; ++i) {
      const Point b = carrier_.basepoint(i);
      const Point gb = g.apply(b);
      const Point hb = h.apply(b);
      if (carrier_.less(gb, hb)) return -1;
      if (carrier_.less(hb, gb)) return 1;
    }
    return 0;
  }

  bool less(const ActingElement<Point>& g, const ActingElement<Point>& h) const { return compare(g, h) < 0; }

  /// Positive iff the identity precedes g.
  bool positive(const ActingElement<Point>& g) const {
    for (std::size_t i = 0; i < depth_; ++i) {
      const Point b = carrier_.basepoint(i);
      const Point gb = g.apply(b);
      if (carrier_.less(b, gb)) return true;
      if (carrier_.less(gb, b)) return false;
    }
    return false;
  }

  LeftOrder<ActingElement<Point>> left_order() const {
    return {[self = *this](const ActingElement<Point>& g) { return self.positive(g); }};
  }

  /// Family sorted ascending.
  std::vector<ActingElement<Point>> sorted() const {
    auto out = elements_;
    std::stable_sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return less(a, b); });
    return out;
  }

  const std::vector<ActingElement<Point>>& elements() const { return elements_; }
  const OrderedCarrier<Point>& carrier() const { return carrier_; }
  std::size_t depth() const { return depth_; }

 private:
  void check_preserving(const ActingElement<Point>& g) const {
    for (std::size_t i = 0; i < depth_; ++i)
      for (std::size_t k = 0; k < depth_; ++k) {
        if (i == k) continue;
        const Point a = carrier_.basepoint(i);
        const Point b = carrier_.basepoint(k);
        if (carrier_.less(a, b) && !carrier_.less(g.apply(a), g.apply(b)))
          throw Error(ErrorCode::OrderViolation,
                      g.label + " reverses basepoints " + std::to_string(i) + " and " + std::to_string(k));
      }
  }

  std::vector<ActingElement<Point>> elements_;
  OrderedCarrier<Point> carrier_;
  std::size_t depth_;
};

template <class Point>
ActionOrder<Point> order_from_action(std::vector<ActingElement<Point>> elements, OrderedCarrier<Point> carrier,
                                     std::size_t depth) {
  return ActionOrder<Point>(std::move(elements), std::move(carrier), depth);
}

/// g positive iff project(g) is positive in Q, or g lies in the kernel and
/// is positive in H. Throws InconsistentOracles when in_kernel(g) and
/// project(g) == q_identity disagree.
template <class G, class Q>
LeftOrder<G> extend_order(LeftOrder<G> h_order, LeftOrder<Q> q_order, std::function<Q(const G&)> project,
                          std::function<bool(const G&)> in_kernel, Q q_identity) {
  return {[=](const G& g) {
    const Q q = project(g);
    const bool kernel = in_kernel(g);
    if (kernel != (q == q_identity))
      throw Error(ErrorCode::InconsistentOracles, "kernel oracle disagrees with the projection");
    return kernel ? h_order.positive(g) : q_order.positive(q);
  }};
}

// Integers with the spiral enumeration 0, 1, -1, 2, -2, ...
std::int64_t spiral(std::size_t i);
OrderedCarrier<std::int64_t> integer_carrier();
ActingElement<std::int64_t> translation(std::int64_t a);

// Integer pairs (first, second) under addition, H = {(a, 0)}, Q = second
// coordinate. The extension is lexicographic by (second, first).
using IntPair = std::pair<std::int64_t, std::int64_t>;
LeftOrder<IntPair> pair_order(bool reverse_kernel = false);

/// Points of the positive-end carrier: copies of the end order indexed by
/// an integer tile, ordered lexicographically. A model's own symmetries
/// act on tile 0; tiles give room for fixtures with infinite families.
struct EndPoint {
  std::int64_t tile = 0;
  std::size_t rank = 0;
  friend bool operator==(const EndPoint&, const EndPoint&) = default;
  friend auto operator<=>(const EndPoint&, const EndPoint&) = default;
};

/// Basepoints run through the ranks of tile 0, then tiles 1, -1, 2, ...
/// Finite (one tile) when `tiles` is 1.
OrderedCarrier<EndPoint> end_carrier(const LeafSpace& space, std::size_t tiles = 1);

/// Action of an admissible self-map on the positive-end carrier.
ActingElement<EndPoint> end_action(const LeafSpaceMap& m, std::string label = {});

struct Degenerate {
  std::vector<std::string> kernel;  // labels acting trivially on the ends
  UnicuspPair pair;
  std::vector<std::string> lambda_candidates;
  std::string message;
};

using AssembleResult = std::variant<ActionOrder<EndPoint>, Degenerate>;

/// Order on the family from its action on positive ends when the kernel of
/// that action has at most one element. Otherwise Degenerate, naming the
/// cusp points that could serve as lambda; an order on the kernel must
/// then be supplied through extend_order(). Throws NotFound when the
/// kernel is nontrivial and the model has no unicusp pair.
AssembleResult assemble_end_order(const LeafSpace& space, const std::vector<ActingElement<EndPoint>>& autos,
                                  std::size_t depth, std::size_t tiles = 1);

}  // namespace leafspace

#endif  // LEAFSPACE_GROUPORDER_HPP_
