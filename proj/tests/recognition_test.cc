// Copyright 2026 The umix Authors
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

#include "umix/recognition.h"

#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "testing.h"
#include "umix/forbidden.h"
#include "umix/oracle.h"

namespace umix {
namespace {

// Checks an ordering from first principles: maximal cliques, consecutive
// per vertex, spans consistent, all edges covered.
void ExpectValidOrdering(const Graph& g, const CliqueOrdering& c) {
  const auto brute = testing::BruteMaximalCliques(g);
  std::set<std::uint32_t> expected(brute.begin(), brute.end());
  std::set<std::uint32_t> got;
  for (const VertexSet& x : c.cliques) {
    std::uint32_t mask = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (x.test(v)) mask |= 1u << v;
    }
    got.insert(mask);
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), c.cliques.size());
  ASSERT_EQ(static_cast<int>(c.span.size()), g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto [first, last] = c.span[v];
    for (int j = 1; j <= static_cast<int>(c.cliques.size()); ++j) {
      EXPECT_EQ(c.cliques[j - 1].test(v), first <= j && j <= last)
          << "vertex " << v << " clique " << j;
    }
  }
}

TEST(LexBfsTest, ReverseOrderIsPerfectEliminationOnChordalGraphs) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::RandomCliquePathGraph(rng, 10, 6);
    const auto order = LexBfsOrder(g);
    ASSERT_EQ(static_cast<int>(order.size()), g.size());
    std::vector<int> pos(g.size());
    for (int i = 0; i < g.size(); ++i) pos[order[i]] = i;
    // Earlier-visited neighbours of each vertex form a clique.
    for (Vertex v = 0; v < g.size(); ++v) {
      std::vector<Vertex> earlier;
      for (Vertex u = 0; u < g.size(); ++u) {
        if (g.Adjacent(u, v) && pos[u] < pos[v]) earlier.push_back(u);
      }
      for (std::size_t i = 0; i < earlier.size(); ++i) {
        for (std::size_t j = i + 1; j < earlier.size(); ++j) {
          ASSERT_TRUE(g.Adjacent(earlier[i], earlier[j]));
        }
      }
    }
  }
}

TEST(ChordalTest, CyclesAreNotChordal) {
  EXPECT_FALSE(ChordalMaximalCliques(testing::Cycle(4)).has_value());
  EXPECT_FALSE(ChordalMaximalCliques(testing::Cycle(5)).has_value());
  auto p = ChordalMaximalCliques(testing::Path(4));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 3u);
}

TEST(RecognizeTest, Examples) {
  EXPECT_FALSE(RecognizeInterval(testing::Cycle(4)).has_value());
  auto p4 = RecognizeInterval(testing::Path(4));
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->cliques.size(), 3u);
  ExpectValidOrdering(testing::Path(4), *p4);
  const Graph h1 = GenerateH(1);
  auto c = RecognizeInterval(h1);
  ASSERT_TRUE(c.has_value());
  ExpectValidOrdering(h1, *c);
  EXPECT_TRUE(IsValidCliqueOrdering(h1, c->cliques));
  // Chordal but not interval: the tripod with subdivided legs.
  Graph t = Graph::FromEdges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_FALSE(RecognizeInterval(t).has_value());
  EXPECT_TRUE(ChordalMaximalCliques(t).has_value());
}

TEST(RecognizeTest, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(n)) {
      auto c = RecognizeInterval(g);
      ASSERT_EQ(c.has_value(), testing::BruteIsInterval(g)) << ToGraph6(g);
      if (c) ExpectValidOrdering(g, *c);
    }
  }
}

TEST(RecognizeTest, RandomIntervalGraphs) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 500; ++t) {
    const Graph g = testing::RandomCliquePathGraph(rng, 12, 8);
    auto c = RecognizeInterval(g);
    ASSERT_TRUE(c.has_value());
    ExpectValidOrdering(g, *c);
  }
}

TEST(RecognizeTest, DisconnectedGraphsUseDisjointRanges) {
  Graph g = Graph::FromEdges(5, {{0, 1}, {3, 4}});
  auto c = RecognizeInterval(g);
  ASSERT_TRUE(c.has_value());
  ExpectValidOrdering(g, *c);
}

TEST(InitialRepresentationTest, FormulaOnP3) {
  const Graph p3 = testing::Path(3);
  CliqueOrdering c;
  c.cliques = {VertexSet(3), VertexSet(3)};
  c.cliques[0].set(0).set(1);
  c.cliques[1].set(1).set(2);
  c.span = {{1, 1}, {1, 2}, {2, 2}};
  const Representation r = InitialRepresentation(p3, c);
  EXPECT_TRUE(r[1].SameAs(MixedInterval::Closed(Rational(3, 4), Rational(9, 4))));
  EXPECT_TRUE(r[0].SameAs(MixedInterval::Closed(Rational(2, 3), Rational(4, 3))));
  EXPECT_TRUE(r[2].SameAs(MixedInterval::Closed(Rational(5, 3), Rational(7, 3))));
  for (const auto& i : r) EXPECT_FALSE(i.left.red() || i.right.red());
}

TEST(InitialRepresentationTest, TwinsAreRejected) {
  const Graph k2 = testing::Complete(2);
  auto c = RecognizeInterval(k2);
  ASSERT_TRUE(c.has_value());
  EXPECT_THROW(InitialRepresentation(k2, *c), std::invalid_argument);
}

TEST(InitialRepresentationTest, InclusionMatchesSpanNesting) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::BruteReduceTwins(testing::RandomCliquePathGraph(rng, 12, 7));
    auto c = RecognizeInterval(g);
    ASSERT_TRUE(c.has_value());
    const Representation r = InitialRepresentation(g, *c);
    ASSERT_TRUE(testing::ProbeRepresents(g, r));
    std::set<Rational> values;
    for (const auto& i : r) {
      values.insert(i.left.value);
      values.insert(i.right.value);
    }
    ASSERT_EQ(static_cast<int>(values.size()), 2 * g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = 0; v < g.size(); ++v) {
        if (u == v) continue;
        const auto [a, b] = c->span[u];
        const auto [x, y] = c->span[v];
        const bool span_inside = a < x && y < b;
        ASSERT_EQ(testing::ProbeContains(r[u], r[v]), span_inside);
      }
    }
    EXPECT_TRUE(CheckHypothesis(g, r));
  }
}

TEST(CheckHypothesisTest, RejectsMissingPeekersAndSharedValues) {
  const Graph k2 = testing::Complete(2);
  EXPECT_FALSE(CheckHypothesis(k2, {MixedInterval::Closed(0, 10),
                                    MixedInterval::Closed(1, 2)}));
  const Graph p2 = testing::Path(2);
  EXPECT_FALSE(CheckHypothesis(p2, {MixedInterval::Closed(0, 1),
                                    MixedInterval::Closed(1, 2)}));
  EXPECT_FALSE(CheckHypothesis(p2, {MixedInterval::Make(0, false, 2, true),
                                    MixedInterval::Closed(1, 3)}));
  EXPECT_TRUE(CheckHypothesis(p2, {MixedInterval::Closed(0, 2),
                                   MixedInterval::Closed(1, 3)}));
}

TEST(CheckHypothesisTest, HoldsOnAllTwinFreeIntervalGraphsUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : EnumerateGraphs(n)) {
      if (!IsTwinFree(g)) continue;
      auto c = RecognizeInterval(g);
      if (!c) continue;
      ASSERT_TRUE(CheckHypothesis(g, InitialRepresentation(g, *c))) << ToGraph6(g);
    }
  }
}

}  // namespace
}  // namespace umix
