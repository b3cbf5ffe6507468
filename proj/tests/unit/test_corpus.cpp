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

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "leafspace/corpus.hpp"
#include "leafspace/endorder.hpp"
#include "leafspace/paths.hpp"

#ifndef LEAFSPACE_DATA_DIR
#error "LEAFSPACE_DATA_DIR must point at data/"
#endif

namespace leafspace {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Builtin, Shapes) {
  LeafSpace line = builtin("line");
  EXPECT_EQ(line.edges().size(), 1u);
  EXPECT_TRUE(line.junctions().empty());
  EXPECT_EQ(cataclysms(builtin("y3"))[0].members.size(), 3u);
  LeafSpace fa = builtin("figure-α");
  EXPECT_EQ(fa, builtin("figure-alpha"));
  BrokenPath p = broken_path(fa, AtVertex{"t1"}, AtVertex{"t16"});
  EXPECT_EQ(p.segments.size(), 8u);
  EXPECT_EQ(p.cusps.size(), 7u);
  EXPECT_TRUE(p.segments[4].trivial);
  try {
    builtin("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
}

TEST(Builtin, DataFilesMatch) {
  for (const std::string& name : builtin_names()) {
    const std::string text = slurp(std::string(LEAFSPACE_DATA_DIR) + "/" + name + ".lsp");
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(parse(text), builtin(name)) << name;
  }
}

TEST(Generate, ZeroJunctionsIsLine) {
  EXPECT_EQ(generate({1, 0, 3, 0.5}), builtin("line"));
}

TEST(Generate, OneNegativeInsertionIsY) {
  LeafSpace L = generate({1, 1, 2, 0.0});
  ASSERT_EQ(L.junctions().size(), 1u);
  EXPECT_EQ(junction_sign(L, L.junctions()[0].id), Sign::Negative);
  EXPECT_EQ(ends(L).positive.size(), 2u);
  EXPECT_EQ(ends(L).negative.size(), 1u);
  const auto pos = ends(L).positive;
  EXPECT_EQ(std::abs(n(L, pos[0], pos[1])), 1);
  EXPECT_EQ(classify_branching(L).kind, classify_branching(builtin("y-neg")).kind);
}

TEST(Generate, OnePositiveInsertionIsMirror) {
  LeafSpace L = generate({4, 1, 2, 1.0});
  EXPECT_EQ(junction_sign(L, L.junctions()[0].id), Sign::Positive);
  EXPECT_EQ(ends(L).negative.size(), 2u);
}

TEST(Generate, ValidDeterministicAndBounded) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratorConfig cfg{seed, seed % 13, 2 + seed % 3, (seed % 5) / 4.0};
    const LeafSpace a = generate(cfg);
    EXPECT_EQ(a.junctions().size(), cfg.junction_count);
    EXPECT_EQ(serialize(a), serialize(generate(cfg)));
    for (const Junction& j : a.junctions()) EXPECT_LE(j.members.size(), cfg.max_arity);
  }
  auto bound = [](GeneratorConfig c) {
    try {
      generate(c);
    } catch (const Error& e) {
      return e.code() == ErrorCode::ConfigBound;
    }
    return false;
  };
  EXPECT_TRUE(bound({1, 65, 3, 0.5}));
  EXPECT_TRUE(bound({1, 3, 1, 0.5}));
  EXPECT_TRUE(bound({1, 3, 3, 1.5}));
  EXPECT_NO_THROW(generate({1, 64, 4, 0.5}));
}

TEST(Serialize, RoundTripAndCanonical) {
  for (const std::string& name : builtin_names()) {
    const LeafSpace L = builtin(name);
    const std::string text = serialize(L);
    EXPECT_EQ(parse(text), L);
    EXPECT_EQ(serialize(parse(text)), text);
  }
  EXPECT_EQ(serialize(builtin("y-neg")),
            "vertex u\nvertex v\nvertex w\n"
            "edge e0 free:n0 v:w\nedge e1 v:w j:J\nedge e2 v:u free:X1\nedge e3 v:v free:X2\n"
            "junction J members=u,v\n");
}

TEST(Parse, SyntaxErrors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_description(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
      return e.detail().substr(0, e.detail().find(':'));
    }
    return std::string("no error");
  };
  EXPECT_EQ(line_of("vertex a\nedge e0 v:a q:b\n"), "line 2");
  EXPECT_EQ(line_of("vertex\n"), "line 1");
  EXPECT_EQ(line_of("\n\njunction J u,v\n"), "line 3");
  EXPECT_EQ(line_of("junction J members=u,,v\n"), "line 1");
  EXPECT_EQ(line_of("node a\n"), "line 1");
  EXPECT_EQ(line_of("edge e0 free: v:a\n"), "line 1");
  try {
    parse("vertex a\nedge e0 free:A v:a\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
  }
}

// Shuffled records, extra blanks and comments parse to the same model.
TEST(Parse, PerturbedTextSameModel) {
  std::mt19937_64 rng(41);
  for (const LeafSpace& L : fixture::seeded(40, 8, 4)) {
    std::istringstream in(serialize(L));
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text = "# perturbed\n";
    for (const std::string& l : lines) {
      std::string spaced;
      for (char c : l) spaced += c == ' ' ? std::string(1 + rng() % 3, rng() % 2 ? ' ' : '\t') : std::string(1, c);
      text += std::string(rng() % 3, ' ') + spaced + (rng() % 2 ? "   # note" : "") + "\n";
      if (rng() % 4 == 0) text += "\n   \n";
    }
    EXPECT_EQ(parse(text), L);
    EXPECT_EQ(serialize(parse(text)), serialize(L));
  }
}

TEST(Export, Examples) {
  const std::string line = export_graph(builtin("line"));
  EXPECT_NE(line.find("\"free:N\" [shape=rarrow"), std::string::npos);
  EXPECT_NE(line.find("\"free:X\" [shape=rarrow"), std::string::npos);
  EXPECT_NE(line.find("\"free:N\" -> \"free:X\""), std::string::npos);
  EXPECT_NE(export_graph(builtin("y3")).find("label=\"− [u1<u2<u3]\""), std::string::npos);
  const std::string y = export_graph(builtin("y-neg"), true);
  EXPECT_NE(y.find("label=\"X2 #1\""), std::string::npos);
  EXPECT_NE(y.find("label=\"X1 #2\""), std::string::npos);
}

}  // namespace
}  // namespace leafspace
