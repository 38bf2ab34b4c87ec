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

#include "umix/pipeline.h"

#include <random>

#include <gtest/gtest.h>

#include "testing.h"
#include "umix/forbidden.h"

namespace umix {
namespace {

TEST(RestoreTwinsTest, CopiesTheClassInterval) {
  const Graph k3 = testing::Complete(3);
  const TwinReduction t = ReduceTwins(k3);
  const Representation r = RestoreTwins(t, {MixedInterval::Closed(0, 1)});
  ASSERT_EQ(r.size(), 3u);
  for (const auto& i : r) EXPECT_TRUE(i.SameAs(MixedInterval::Closed(0, 1)));
  EXPECT_THROW(RestoreTwins(t, {}), std::invalid_argument);
}

TEST(AnalyzeTest, NotInterval) {
  const Analysis a = Analyze(testing::Cycle(4));
  EXPECT_EQ(a.verdict, Verdict::kNotInterval);
  EXPECT_FALSE(a.strict.has_value());
  EXPECT_FALSE(a.certificate.has_value());
}

TEST(AnalyzeTest, TwinFreeForbiddenGraphsAreRejectedWithCertificates) {
  for (Family f : {Family::kK14, Family::kK24Star, Family::kA}) {
    const Graph g = Generate({f, 0, 0});
    ASSERT_TRUE(IsTwinFree(g));
    const Analysis a = Analyze(g);
    EXPECT_EQ(a.verdict, Verdict::kNo) << FamilyName(f);
    ASSERT_TRUE(a.certificate.has_value());
    EXPECT_TRUE(ValidateCertificate(g, *a.certificate));
    EXPECT_EQ(a.certificate->id.family, f);
  }
}

TEST(AnalyzeTest, HGraphsAreAcceptedWithSharedEndpointsOnTheTail) {
  for (int k = 1; k <= 4; ++k) {
    const Graph h = GenerateH(k);
    const Analysis a = Analyze(h, true);
    ASSERT_EQ(a.verdict, Verdict::kYes) << k;
    ASSERT_TRUE(a.strict.has_value());
    EXPECT_TRUE(testing::ProbeRepresents(h, *a.strict));
    EXPECT_TRUE(testing::ProbeStrict(*a.strict));
    for (int j = 1; j <= k; ++j) {
      const Vertex aj = h.IndexOf("a_" + std::to_string(j));
      const Vertex cj = h.IndexOf("c_" + std::to_string(j));
      EXPECT_TRUE((*a.strict)[aj].SameEndpointValues((*a.strict)[cj]))
          << "k=" << k << " j=" << j;
    }
    ASSERT_TRUE(a.unit.has_value());
    EXPECT_TRUE(IsUnit(*a.unit));
    EXPECT_TRUE(testing::ProbeRepresents(h, *a.unit));
  }
}

TEST(AnalyzeTest, TwinsAreRestoredWithEqualIntervals) {
  // A claw whose leaves are each doubled into twin pairs.
  const Graph g = Graph::FromEdges(
      7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {3, 4}, {5, 6}});
  const Analysis a = Analyze(g, true);
  ASSERT_EQ(a.verdict, Verdict::kYes);
  EXPECT_EQ(a.twins.reduced.size(), 4);
  EXPECT_TRUE((*a.strict)[1].SameAs((*a.strict)[2]));
  EXPECT_TRUE(testing::ProbeRepresents(g, *a.strict));
  EXPECT_TRUE(testing::ProbeStrict(*a.strict));
  EXPECT_TRUE(testing::ProbeRepresents(g, *a.unit));
}

TEST(AnalyzeTest, CertificatesUseOriginalVertexIds) {
  // K_{1,4} with a twin of the centre.
  Graph g = Generate({Family::kK14, 0, 0});
  std::vector<std::string> labels = g.labels();
  labels.push_back("h2");
  Graph host(labels);
  for (const auto& [u, v] : g.Edges()) host.AddEdge(u, v);
  for (Vertex v = 0; v < 5; ++v) host.AddEdge(5, v);
  const Analysis a = Analyze(host);
  ASSERT_EQ(a.verdict, Verdict::kNo);
  ASSERT_TRUE(a.certificate.has_value());
  EXPECT_TRUE(ValidateCertificate(host, *a.certificate));
}

TEST(AnalyzeTest, RandomGraphsProduceCheckableOutput) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::RandomCliquePathGraph(rng, 12, 7);
    const Analysis a = Analyze(g, true);
    ASSERT_NE(a.verdict, Verdict::kNotInterval);
    if (a.verdict == Verdict::kYes) {
      ASSERT_TRUE(testing::ProbeRepresents(g, *a.strict));
      ASSERT_TRUE(testing::ProbeStrict(*a.strict));
      ASSERT_TRUE(testing::ProbeRepresents(g, *a.unit));
      ASSERT_TRUE(IsUnit(*a.unit));
    } else {
      ASSERT_TRUE(a.certificate.has_value());
      ASSERT_TRUE(ValidateCertificate(g, *a.certificate));
    }
  }
}

}  // namespace
}  // namespace umix
