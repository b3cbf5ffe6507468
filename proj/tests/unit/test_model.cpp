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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "leafspace/model.hpp"
#include "oracles.hpp"

namespace leafspace {
namespace {

using fixture::f;
using fixture::j;
using fixture::v;

ValidationReport report_of(const Description& d) {
  auto r = LeafSpace::validate(d);
  EXPECT_TRUE(std::holds_alternative<ValidationReport>(r));
  return std::holds_alternative<ValidationReport>(r) ? std::get<ValidationReport>(r) : ValidationReport{};
}

TEST(Validate, YNegIsValidWithNegativeJunction) {
  LeafSpace L = LeafSpace::from(fixture::y_neg());
  EXPECT_EQ(junction_sign(L, "J"), Sign::Negative);
  EXPECT_EQ(L.node_count(), 3u + 1u + 3u);
}

TEST(Validate, SingleMemberIsJunctionArity) {
  Description d = fixture::y_neg();
  d.junctions[0].members = {"u"};
  EXPECT_TRUE(report_of(d).has(ErrorCode::JunctionArity));
}

TEST(Validate, SecondEdgeOnUpperPortIsPortConflict) {
  Description d = fixture::y_neg();
  d.edges.push_back({"e4", v("u"), f("X3")});
  EXPECT_TRUE(report_of(d).has(ErrorCode::PortConflict));
}

TEST(Validate, ReportsEachFailureKind) {
  {
    Description d = fixture::y_neg();
    d.edges.push_back({"e4", v("q"), f("X3")});
    EXPECT_TRUE(report_of(d).has(ErrorCode::DanglingReference));
  }
  {
    Description d = fixture::y_neg();
    d.edges[1].upper = v("u");  // w -> u, J loses its stem
    EXPECT_TRUE(report_of(d).has(ErrorCode::MissingStem));
  }
  {
    Description d = fixture::y_neg();
    d.edges.push_back({"e4", f("n9"), j("J")});
    EXPECT_TRUE(report_of(d).has(ErrorCode::MultipleStems));
  }
  {
    Description d = fixture::y_neg();
    d.junctions[0].members = {"u", "u"};
    EXPECT_TRUE(report_of(d).has(ErrorCode::DuplicateMember));
  }
  {
    // u keeps its upper edge, v keeps its lower edge: sides disagree.
    Description d = fixture::y_neg();
    d.edges[3] = {"e3", f("N"), v("v")};
    EXPECT_TRUE(report_of(d).has(ErrorCode::MixedMemberSides));
  }
  {
    // Members use lower ports, so the stem must end at the junction.
    Description d = fixture::y_neg();
    d.edges[1] = {"e1", j("J"), v("w")};
    d.edges[0] = {"e0", v("w"), f("n0")};
    EXPECT_TRUE(report_of(d).has(ErrorCode::StemDirectionMismatch));
  }
  {
    Description d{{"a", "b"}, {{"e0", v("a"), v("b")}, {"e1", v("b"), v("a")}}, {}};
    EXPECT_TRUE(report_of(d).has(ErrorCode::NotATree));
  }
  {
    Description d{{}, {{"e0", f("A"), f("B")}, {"e1", f("C"), f("D")}}, {}};
    EXPECT_TRUE(report_of(d).has(ErrorCode::Disconnected));
  }
  {
    Description d{{"a"}, {{"e0", f("A"), v("a")}}, {}};
    EXPECT_TRUE(report_of(d).has(ErrorCode::OpenPort));
  }
  EXPECT_TRUE(report_of(Description{}).has(ErrorCode::NoEdges));
  {
    Description d = fixture::y_neg();
    d.vertices.push_back("u");
    EXPECT_TRUE(report_of(d).has(ErrorCode::DuplicateId));
  }
  {
    Description d{{}, {{"bad,id", f("A"), f("B")}}, {}};
    EXPECT_TRUE(report_of(d).has(ErrorCode::InvalidIdentifier));
  }
}

TEST(Validate, FromThrowsValidationFailed) {
  Description d = fixture::y_neg();
  d.junctions[0].members = {"u"};
  try {
    LeafSpace::from(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
    EXPECT_NE(e.detail().find("JunctionArity"), std::string::npos);
  }
}

TEST(Validate, DeclarationOrderDoesNotMatter) {
  Description d = fixture::y_neg();
  std::reverse(d.vertices.begin(), d.vertices.end());
  std::reverse(d.edges.begin(), d.edges.end());
  EXPECT_EQ(LeafSpace::from(d), builtin("y-neg"));
}

TEST(Validate, ZeroLengthVertexInBothSigns) {
  LeafSpace L = builtin("figure-alpha");
  EXPECT_EQ(junction_sign(L, "M4"), Sign::Positive);
  EXPECT_EQ(junction_sign(L, "M5"), Sign::Negative);
}

TEST(Sign, MatchesStemOracleOnCorpus) {
  for (const LeafSpace& L : fixture::seeded(60, 10, 4))
    for (const Junction& jn : L.junctions()) EXPECT_EQ(junction_sign(L, jn.id), oracle::stem_sign(L.description(), jn.id));
  EXPECT_THROW(junction_sign(builtin("y-neg"), "Nope"), Error);
}

TEST(Sign, PositiveMirrorAndTwoSided) {
  EXPECT_EQ(junction_sign(builtin("y-pos"), "P"), Sign::Positive);
  LeafSpace two = builtin("two-sided");
  EXPECT_EQ(junction_sign(two, "P"), Sign::Positive);
  EXPECT_EQ(junction_sign(two, "J"), Sign::Negative);
  // Members of a junction see each other on the junction's side.
  for (const Cataclysm& c : cataclysms(two))
    EXPECT_EQ(side_of(two, AtVertex{c.members[0]}, AtVertex{c.members[1]}), c.sign);
}

TEST(SideOf, YNeg) {
  LeafSpace L = builtin("y-neg");
  EXPECT_EQ(side_of(L, AtVertex{"w"}, AtVertex{"u"}), Sign::Positive);
  EXPECT_EQ(side_of(L, AtVertex{"u"}, AtVertex{"w"}), Sign::Negative);
  EXPECT_EQ(side_of(L, AtVertex{"u"}, AtVertex{"v"}), Sign::Negative);
  EXPECT_EQ(side_of(L, AtVertex{"v"}, AtVertex{"u"}), Sign::Negative);
  EXPECT_THROW(side_of(L, AtVertex{"u"}, AtVertex{"u"}), Error);
}

TEST(SideOf, SidesPartitionAndAreConnected) {
  for (const LeafSpace& L : fixture::seeded(20, 6, 3)) {
    const oracle::Graph g(L.description());
    for (const std::string& t : L.vertices()) {
      std::set<std::string> pos, neg;
      for (const std::string& p : L.vertices())
        if (p != t) (side_of(L, AtVertex{t}, AtVertex{p}) == Sign::Positive ? pos : neg).insert(p);
      EXPECT_EQ(pos.size() + neg.size() + 1, L.vertices().size());
      // Same side iff the tree paths from t leave through the same first node.
      for (const std::string& a : L.vertices())
        for (const std::string& b : L.vertices()) {
          if (a == t || b == t) continue;
          const bool same_first = g.path("v:" + t, "v:" + a)[1] == g.path("v:" + t, "v:" + b)[1];
          if (same_first) EXPECT_EQ(pos.count(a), pos.count(b));
        }
    }
  }
}

TEST(Separates, YNegExamples) {
  LeafSpace L = builtin("y-neg");
  EXPECT_FALSE(separates(L, AtVertex{"w"}, AtVertex{"u"}, AtVertex{"v"}));
  const PointRef p = OnEdge{"e2", Rational(1, 2)};
  EXPECT_TRUE(separates(L, AtVertex{"u"}, AtVertex{"w"}, p));
  const PointRef below = OnEdge{"e0", Rational(1, 3)};
  EXPECT_FALSE(separates(L, AtVertex{"w"}, AtVertex{"u"}, AtVertex{"v"}));
  EXPECT_TRUE(separates(L, AtVertex{"w"}, below, AtVertex{"u"}));
  EXPECT_FALSE(separates(L, below, AtVertex{"w"}, AtVertex{"u"}));
  EXPECT_THROW(separates(L, AtVertex{"u"}, AtVertex{"u"}, AtVertex{"v"}), Error);
}

TEST(Separates, PointsOnOneEdge) {
  LeafSpace L = builtin("line");
  const PointRef a = OnEdge{"e0", Rational(1, 4)}, b = OnEdge{"e0", Rational(1, 2)}, c = OnEdge{"e0", Rational(3, 4)};
  EXPECT_TRUE(separates(L, b, a, c));
  EXPECT_FALSE(separates(L, a, b, c));
  EXPECT_THROW(separates(L, OnEdge{"e0", Rational(1)}, a, c), Error);
}

TEST(Separates, Symmetric) {
  for (const LeafSpace& L : fixture::seeded(10, 5, 3)) {
    std::vector<PointRef> pts;
    for (const std::string& x : L.vertices()) pts.push_back(AtVertex{x});
    for (const Edge& e : L.edges()) pts.push_back(OnEdge{e.id, Rational(1, 2)});
    for (const auto& t : pts)
      for (const auto& a : pts)
        for (const auto& b : pts) {
          if (t == a || t == b || a == b) continue;
          EXPECT_EQ(separates(L, t, a, b), separates(L, t, b, a));
        }
  }
}

TEST(Cataclysms, Examples) {
  EXPECT_EQ(cataclysms(builtin("y-neg")), (std::vector<Cataclysm>{{"J", Sign::Negative, {"u", "v"}}}));
  EXPECT_TRUE(cataclysms(builtin("line")).empty());
  auto y3 = cataclysms(builtin("y3"));
  ASSERT_EQ(y3.size(), 1u);
  EXPECT_EQ(y3[0].members.size(), 3u);
}

TEST(Cataclysms, MatchBothCliqueOracles) {
  for (const LeafSpace& L : fixture::seeded(40, 8, 4)) {
    std::vector<std::vector<std::string>> got;
    for (const Cataclysm& c : cataclysms(L)) {
      auto m = c.members;
      std::sort(m.begin(), m.end());
      got.push_back(m);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::cataclysm_sets(L));
    EXPECT_EQ(got, oracle::cataclysm_sets_via_separates(L));
  }
  // The zero-length vertex t9 lies in two cliques.
  LeafSpace fa = builtin("figure-alpha");
  EXPECT_EQ(oracle::cataclysm_sets(fa).size(), 7u);
}

TEST(Ends, Examples) {
  EndSets y = ends(builtin("y-neg"));
  ASSERT_EQ(y.positive.size(), 2u);
  EXPECT_EQ(y.positive[0].name, "X1");
  EXPECT_EQ(y.positive[1].name, "X2");
  ASSERT_EQ(y.negative.size(), 1u);
  EXPECT_EQ(y.negative[0].name, "n0");
  EndSets line = ends(builtin("line"));
  EXPECT_EQ(line.positive.size(), 1u);
  EXPECT_EQ(line.negative.size(), 1u);
  EndSets two = ends(builtin("two-sided"));
  EXPECT_GE(two.positive.size(), 2u);
  EXPECT_GE(two.negative.size(), 2u);
}

TEST(Branching, Proxies) {
  EXPECT_EQ(classify_branching(builtin("line")).kind, Branching::RCoveredProxy);
  BranchingClass y = classify_branching(builtin("y-neg"));
  EXPECT_EQ(y.kind, Branching::OneSidedProxy);
  EXPECT_EQ(y.branching_side, Sign::Positive);
  EXPECT_EQ(classify_branching(builtin("y-pos")).branching_side, Sign::Negative);
  EXPECT_EQ(classify_branching(builtin("two-sided")).kind, Branching::TwoSidedProxy);
}

TEST(Points, ParseAndPrint) {
  EXPECT_EQ(parse_point("v:u"), PointRef(AtVertex{"u"}));
  EXPECT_EQ(parse_point("e:e2@1/3"), PointRef(OnEdge{"e2", Rational(1, 3)}));
  EXPECT_EQ(parse_point("e:e2@0.25"), PointRef(OnEdge{"e2", Rational(1, 4)}));
  EXPECT_EQ(to_string(PointRef(OnEdge{"e2", Rational(2, 4)})), "e:e2@1/2");
  EXPECT_THROW(parse_point("x:u"), Error);
  EXPECT_THROW(parse_point("e:e2"), Error);
}

TEST(Identifiers, Rules) {
  EXPECT_TRUE(valid_identifier("t9"));
  EXPECT_TRUE(valid_identifier("figure-α"));
  EXPECT_FALSE(valid_identifier(""));
  EXPECT_FALSE(valid_identifier("a b"));
  EXPECT_FALSE(valid_identifier("a,b"));
  EXPECT_FALSE(valid_identifier("#x"));
}

TEST(Queries, PureAndRepeatable) {
  LeafSpace L = builtin("figure-ends");
  EXPECT_EQ(cataclysms(L), cataclysms(L));
  LeafSpace copy = L;
  EXPECT_EQ(copy, L);
}

}  // namespace
}  // namespace leafspace
