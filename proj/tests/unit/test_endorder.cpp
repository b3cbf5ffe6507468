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

#include <array>
#include <map>

#include "fixtures.hpp"
#include "leafspace/endorder.hpp"
#include "oracles.hpp"

namespace leafspace {
namespace {

std::vector<std::string> names(const std::vector<EndRef>& xs) {
  std::vector<std::string> out;
  for (const EndRef& x : xs) out.push_back(x.name);
  return out;
}

TEST(N, YNeg) {
  LeafSpace L = builtin("y-neg");
  EXPECT_EQ(n(L, L.end("X1"), L.end("X2")), 1);
  EXPECT_EQ(n(L, L.end("X2"), L.end("X1")), -1);
  const CuspCount c = cusp_count(L, L.end("X1"), L.end("X2"));
  EXPECT_EQ(c.positive, 1);
  EXPECT_EQ(c.negative, 0);
}

TEST(N, Y3) {
  LeafSpace L = builtin("y3");
  EXPECT_EQ(n(L, L.end("X1"), L.end("X3")), 1);
}

TEST(N, Errors) {
  LeafSpace L = builtin("y-neg");
  try {
    n(L, L.end("X1"), L.end("n0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveEnd);
  }
  try {
    n(L, L.end("X1"), L.end("X1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameEnd);
  }
  EXPECT_THROW(L.end("nope"), Error);
}

TEST(N, AntisymmetricOddAndMatchesOracle) {
  for (const LeafSpace& L : fixture::seeded(80, 12, 4)) {
    const std::vector<EndRef> pos = ends(L).positive;
    const auto m = n_matrix(L);
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t k = 0; k < pos.size(); ++k) {
        if (i == k) continue;
        EXPECT_EQ(m[i][k], -m[k][i]);
        EXPECT_NE(m[i][k] % 2, 0);
        EXPECT_EQ(m[i][k], oracle::cusps_between_ends(L, pos[i].name, pos[k].name).n());
      }
  }
}

TEST(EndOrder, Examples) {
  EXPECT_EQ(names(end_order(builtin("y-neg"))), (std::vector<std::string>{"X2", "X1"}));
  EXPECT_EQ(names(end_order(builtin("y3"))), (std::vector<std::string>{"X3", "X2", "X1"}));
  EXPECT_EQ(names(end_order(builtin("line"))), (std::vector<std::string>{"X"}));
}

TEST(EndOrder, StrictTotalAndMatchesOracle) {
  for (const LeafSpace& L : fixture::seeded(60, 12, 4)) {
    const std::vector<EndRef> order = end_order(L);
    EXPECT_EQ(order.size(), ends(L).positive.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t k = i + 1; k < order.size(); ++k) EXPECT_LT(n(L, order[i], order[k]), 0);
    EXPECT_EQ(names(order), oracle::end_order(L));
  }
}

TEST(Triangle, Y3) {
  LeafSpace L = builtin("y3");
  TriangleCheck t = triangle_check(L, L.end("X1"), L.end("X2"), L.end("X3"));
  EXPECT_EQ(std::make_tuple(t.n12, t.n23, t.n13, t.delta), std::make_tuple(1, 1, 1, -1));
  TriangleCheck r = triangle_check(L, L.end("X3"), L.end("X2"), L.end("X1"));
  EXPECT_EQ(std::make_tuple(r.n12, r.n23, r.n13, r.delta), std::make_tuple(-1, -1, -1, 1));
  EXPECT_TRUE(r.holds());
  try {
    triangle_check(L, L.end("X1"), L.end("X1"), L.end("X3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateEnd);
  }
  EXPECT_THROW(triangle_check(L, L.end("X1"), L.end("n0"), L.end("X3")), Error);
}

TEST(Triangle, DeltaAndTransitivityOnCorpus) {
  for (const LeafSpace& L : fixture::seeded(40, 10, 4)) {
    const std::vector<EndRef> pos = ends(L).positive;
    const auto m = n_matrix(L);
    for (std::size_t a = 0; a < pos.size(); ++a)
      for (std::size_t b = 0; b < pos.size(); ++b)
        for (std::size_t c = 0; c < pos.size(); ++c) {
          if (a == b || b == c || a == c) continue;
          const int delta = m[a][c] - (m[a][b] + m[b][c]);
          EXPECT_TRUE(delta == 1 || delta == -1);
          if (m[a][b] > 0 && m[b][c] > 0) EXPECT_GT(m[a][c], 0);
          if (m[a][b] < 0 && m[b][c] < 0) EXPECT_LT(m[a][c], 0);
        }
  }
}

TEST(TripleDecomposition, Y3AllCuspsSpecial) {
  LeafSpace L = builtin("y3");
  TripleDecomposition d = triple_decompose(L, L.end("X1"), L.end("X2"), L.end("X3"));
  EXPECT_TRUE(d.beta2.cusps.empty());
  ASSERT_EQ(d.special.size(), 3u);
  EXPECT_EQ(d.special[0].owner, Curve::C12);
  EXPECT_EQ(key_of(d.special[0].cusp), (CuspKey{"J", "u1", "u2"}));
  EXPECT_EQ(d.special[1].owner, Curve::C13);
  EXPECT_EQ(key_of(d.special[1].cusp), (CuspKey{"J", "u1", "u3"}));
  EXPECT_EQ(d.special[2].owner, Curve::C23);
  EXPECT_EQ(key_of(d.special[2].cusp), (CuspKey{"J", "u2", "u3"}));
  EXPECT_EQ(d.proof_case, ProofCase::Case3);
  EXPECT_EQ(d.center, std::optional<std::string>("J"));
}

// Each cusp of the three curves is either shared by exactly two of them
// (and then lies in the matching beta) or is special to one.
TEST(TripleDecomposition, EveryCuspAccountedOnce) {
  std::array<int, 3> cases{0, 0, 0};
  for (const LeafSpace& L : fixture::seeded(120, 12, 4)) {
    const std::vector<EndRef> pos = ends(L).positive;
    if (pos.size() < 3) continue;
    for (std::size_t a = 0; a + 2 < pos.size() && a < 4; ++a) {
      TripleDecomposition d = triple_decompose(L, pos[a], pos[a + 1], pos[a + 2]);
      ++cases[static_cast<int>(d.proof_case)];
      auto count = [&](const BrokenPath& p, Curve owner, const SharedPart& s1, const SharedPart& s2) {
        for (const Cusp& c : p.cusps) {
          const CuspKey k = key_of(c);
          auto in = [&](const SharedPart& s) {
            return static_cast<int>(std::count_if(s.cusps.begin(), s.cusps.end(),
                                                  [&](const Cusp& x) { return key_of(x) == k; }));
          };
          int hits = in(s1) + in(s2);
          for (const SpecialCusp& s : d.special)
            if (s.owner == owner && key_of(s.cusp) == k) ++hits;
          EXPECT_EQ(hits, 1);
        }
      };
      count(d.alpha12, Curve::C12, d.beta1, d.beta2);
      count(d.alpha13, Curve::C13, d.beta1, d.beta3);
      count(d.alpha23, Curve::C23, d.beta2, d.beta3);
      if (d.proof_case == ProofCase::Case1) {
        for (const SpecialCusp& s : d.special) EXPECT_NE(s.owner, Curve::C13);
      }
    }
  }
  // The generated corpus reaches all three branches of the case split.
  EXPECT_GT(cases[0], 0);
  EXPECT_GT(cases[1], 0);
  EXPECT_GT(cases[2], 0);
}

TEST(Unicusp, Examples) {
  LeafSpace y = builtin("y-neg");
  auto p = find_unicusp_pair(y);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->x1.name, "X1");
  EXPECT_EQ(p->x2.name, "X2");
  EXPECT_EQ(p->cusp.from, "u");
  EXPECT_EQ(p->cusp.to, "v");
  EXPECT_FALSE(find_unicusp_pair(builtin("line")));
}

TEST(Unicusp, FoundWhenMembersCarryPositiveEnds) {
  for (const LeafSpace& L : fixture::seeded(80, 10, 4, 77)) {
    bool direct = false;
    for (const Cataclysm& c : cataclysms(L)) {
      if (c.sign != Sign::Negative) continue;
      int rays = 0;
      for (const Edge& e : L.edges())
        if (const auto* v = std::get_if<VertexEnd>(&e.lower))
          if (std::get_if<Free>(&e.upper) && std::count(c.members.begin(), c.members.end(), v->vertex)) ++rays;
      direct = direct || rays >= 2;
    }
    if (direct) EXPECT_TRUE(find_unicusp_pair(L));
  }
}

}  // namespace
}  // namespace leafspace
