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

#include "umix/forbidden.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "testing.h"

namespace umix {
namespace {

bool Edge(const Graph& g, const char* u, const char* v) {
  return g.Adjacent(g.IndexOf(u), g.IndexOf(v));
}

TEST(GenerateHTest, EdgeListExactly) {
  for (int k = 1; k <= 6; ++k) {
    const Graph h = GenerateH(k);
    ASSERT_EQ(h.size(), 2 * k + 3);
    int expected_edges = 5 + 3 * (k - 1);
    EXPECT_EQ(h.EdgeCount(), expected_edges);
    EXPECT_TRUE(Edge(h, "a_0", "a_1"));
    EXPECT_TRUE(Edge(h, "a_0", "c_1"));
    EXPECT_TRUE(Edge(h, "a_0", "b_0"));
    EXPECT_TRUE(Edge(h, "a_0", "v"));
    EXPECT_TRUE(Edge(h, "a_1", "c_1"));
    for (int j = 1; j < k; ++j) {
      const std::string aj = "a_" + std::to_string(j);
      const std::string an = "a_" + std::to_string(j + 1);
      const std::string cn = "c_" + std::to_string(j + 1);
      EXPECT_TRUE(h.Adjacent(h.IndexOf(aj), h.IndexOf(an)));
      EXPECT_TRUE(h.Adjacent(h.IndexOf(aj), h.IndexOf(cn)));
      EXPECT_TRUE(h.Adjacent(h.IndexOf(an), h.IndexOf(cn)));
    }
  }
  EXPECT_EQ(GenerateH(3).Degree(GenerateH(3).IndexOf("a_0")), 4);
  EXPECT_FALSE(Edge(GenerateH(2), "c_1", "a_2"));
  EXPECT_THROW(GenerateH(0), std::invalid_argument);
}

TEST(GenerateHTest, H1IsTheStarredClaw) {
  // K_{1,4} with one edge between two leaves.
  const Graph h = GenerateH(1);
  EXPECT_EQ(h.size(), 5);
  EXPECT_EQ(h.EdgeCount(), 5);
  EXPECT_EQ(h.Degree(h.IndexOf("a_0")), 4);
}

TEST(GenerateHTest, TailPairIsTwins) {
  // N[a_k] = N[c_k], so H_k itself is never twin-free.
  for (int k = 1; k <= 4; ++k) {
    const Graph h = GenerateH(k);
    const std::string a = "a_" + std::to_string(k);
    const std::string c = "c_" + std::to_string(k);
    EXPECT_EQ(ClosedNeighborhood(h, h.IndexOf(a)), ClosedNeighborhood(h, h.IndexOf(c)));
    EXPECT_FALSE(IsTwinFree(h));
    EXPECT_FALSE(FindForbidden(h).has_value());
  }
}

TEST(GenerateTest, TemplateSizes) {
  for (int k = 1; k <= 4; ++k) {
    for (Family f : {Family::kFam1, Family::kFam2, Family::kFam3, Family::kFam4}) {
      const ForbiddenId id{f, k, 0};
      EXPECT_EQ(Generate(id).size(), TemplateSize(id)) << id.ToString();
    }
    EXPECT_EQ(Generate({Family::kFam1, k, 0}).size(), 2 * k + 6);
    EXPECT_EQ(Generate({Family::kFam3, k, 0}).size(), 2 * k + 5);
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(Generate({Family::kFam5, k, n}).size(), 2 * k + 2 * n + 6);
    }
  }
  EXPECT_EQ(Generate({Family::kK14, 0, 0}).size(), 5);
  EXPECT_EQ(Generate({Family::kB, 0, 0}).size(), 6);
}

TEST(GenerateTest, Attachments) {
  const Graph f1 = Generate({Family::kFam1, 1, 0});
  for (const char* x : {"x", "y", "z"}) {
    EXPECT_TRUE(Edge(f1, "a_1", x));
    EXPECT_FALSE(Edge(f1, "c_1", x));
    EXPECT_FALSE(Edge(f1, "a_0", x));
  }
  EXPECT_TRUE(Edge(f1, "x", "y") && Edge(f1, "y", "z") && Edge(f1, "x", "z"));

  const Graph f4 = Generate({Family::kFam4, 2, 0});
  for (const char* y : {"a_2", "c_2", "c_3", "u"}) EXPECT_TRUE(Edge(f4, "x", y)) << y;
  EXPECT_TRUE(Edge(f4, "a_2", "c_3"));
  EXPECT_FALSE(Edge(f4, "c_2", "c_3"));
  EXPECT_EQ(f4.Degree(f4.IndexOf("u")), 1);

  const Graph f5 = Generate({Family::kFam5, 1, 1});
  EXPECT_FALSE(Edge(f5, "c_1", "d_1'"));
  for (auto [u, v] : {std::pair{"a_1", "c_1"}, {"a_1", "a_1'"}, {"a_1", "d_1'"},
                      {"c_1", "a_1'"}, {"a_1'", "d_1'"}}) {
    EXPECT_TRUE(Edge(f5, u, v)) << u << " " << v;
  }
  EXPECT_TRUE(Edge(f5, "a_0'", "a_1'"));
  EXPECT_TRUE(Edge(f5, "a_0'", "d_1'"));
}

TEST(GenerateTest, Fam5IsSymmetricInItsParameters) {
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const Graph a = Generate({Family::kFam5, k, n});
    const Graph b = Generate({Family::kFam5, n, k});
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.EdgeCount(), b.EdgeCount());
    EXPECT_TRUE(FindInducedEmbedding(a, b).has_value()) << k << "," << n;
  }
}

TEST(ForbiddenIdTest, ValidationAndNames) {
  EXPECT_THROW(Generate({Family::kFam1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(Generate({Family::kK14, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Generate({Family::kFam5, 1, 0}), std::invalid_argument);
  EXPECT_EQ((ForbiddenId{Family::kFam5, 1, 2}).ToString(), "Fam5(1,2)");
  EXPECT_EQ((ForbiddenId{Family::kFam3, 2, 0}).ToString(), "Fam3(2)");
  EXPECT_EQ((ForbiddenId{Family::kK23Star, 0, 0}).ToString(), "K23star");
  for (const char* s : {"K14", "B", "Fam2(3)", "Fam5(2,1)"}) {
    EXPECT_EQ(ParseForbiddenId(s).ToString(), s);
  }
  for (const char* s : {"Fam2", "K14(1)", "Fam5(1)", "Fam9(1)", "Fam1(x)"}) {
    EXPECT_THROW(ParseForbiddenId(s), std::invalid_argument) << s;
  }
}

TEST(CatalogTest, OrderIsFiniteThenBySize) {
  const auto cat = CatalogUpTo(10, 2);
  ASSERT_GE(cat.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(cat[i].IsFinite());
  for (std::size_t i = 6; i < cat.size(); ++i) {
    EXPECT_LE(TemplateSize(cat[i - 1]), TemplateSize(cat[i]));
  }
  EXPECT_EQ(cat[5].ToString(), "Fam3(1)");
}

TEST(FindForbiddenTest, Examples) {
  const Graph b = Generate({Family::kB, 0, 0});
  auto cert = FindForbidden(b);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->id.ToString(), "B");
  EXPECT_TRUE(ValidateCertificate(b, *cert));
  EXPECT_FALSE(FindForbidden(testing::Star(3)).has_value());
  for (int k = 1; k <= 4; ++k) EXPECT_FALSE(FindForbidden(GenerateH(k)).has_value());
}

TEST(FindForbiddenTest, EveryTemplateIsDetected) {
  for (const ForbiddenId& id : CatalogUpTo(14, 3)) {
    const Graph g = Generate(id);
    auto cert = FindForbidden(g);
    ASSERT_TRUE(cert.has_value()) << id.ToString();
    EXPECT_TRUE(ValidateCertificate(g, *cert)) << id.ToString();
  }
}

TEST(ValidateCertificateTest, RejectsBrokenEmbeddings) {
  const Graph b = Generate({Family::kB, 0, 0});
  ForbiddenCertificate c{{Family::kB, 0, 0}, {0, 1, 2, 3, 4, 5}};
  EXPECT_TRUE(ValidateCertificate(b, c));
  Graph missing = b;
  missing.RemoveEdge(b.IndexOf("h"), b.IndexOf("k1"));
  EXPECT_FALSE(ValidateCertificate(missing, c));
  // B inside a larger host.
  std::vector<std::string> labels = b.labels();
  labels.push_back("extra");
  Graph bigger(labels);
  for (const auto& [u, v] : b.Edges()) bigger.AddEdge(u, v);
  EXPECT_TRUE(ValidateCertificate(bigger, c));
  c.embedding.pop_back();
  EXPECT_FALSE(ValidateCertificate(bigger, c));
}

}  // namespace
}  // namespace umix
