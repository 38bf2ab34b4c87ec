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

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace umix {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::kK14, "K14"},
    {Family::kK23Star, "K23star"},
    {Family::kK24Star, "K24star"},
    {Family::kA, "A"},
    {Family::kB, "B"},
    {Family::kFam1, "Fam1"},
    {Family::kFam2, "Fam2"},
    {Family::kFam3, "Fam3"},
    {Family::kFam4, "Fam4"},
    {Family::kFam5, "Fam5"},
}};

// Accumulates labelled vertices and edges, then freezes into a Graph.
class Builder {
 public:
  void Vertex(const std::string& label) { labels_.push_back(label); }
  void Edge(const std::string& u, const std::string& v) {
    edges_.emplace_back(u, v);
  }
  Graph Build() const {
    Graph g(labels_);
    for (const auto& [u, v] : edges_) g.AddEdge(g.IndexOf(u), g.IndexOf(v));
    return g;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

std::string Indexed(const char* stem, int j, const char* suffix = "") {
  return std::string(stem) + "_" + std::to_string(j) + suffix;
}

// H_k; the primed copy renames c to d and adds a prime to every label.
void AddH(Builder& b, int k, bool primed) {
  const char* p = primed ? "'" : "";
  const char* c = primed ? "d" : "c";
  auto a = [&](int j) { return Indexed("a", j, p); };
  auto cc = [&](int j) { return Indexed(c, j, p); };
  b.Vertex(a(0));
  b.Vertex(Indexed("b", 0, p));
  b.Vertex(std::string("v") + p);
  for (int j = 1; j <= k; ++j) b.Vertex(a(j));
  for (int j = 1; j <= k; ++j) b.Vertex(cc(j));
  b.Edge(a(0), a(1));
  b.Edge(a(0), cc(1));
  b.Edge(a(0), Indexed("b", 0, p));
  b.Edge(a(0), std::string("v") + p);
  b.Edge(a(1), cc(1));
  for (int j = 1; j < k; ++j) {
    b.Edge(a(j), a(j + 1));
    b.Edge(a(j), cc(j + 1));
    b.Edge(a(j + 1), cc(j + 1));
  }
}

Graph Finite(Family f) {
  Builder b;
  switch (f) {
    case Family::kK14:
      for (const char* v : {"h", "x1", "x2", "x3", "x4"}) b.Vertex(v);
      for (const char* v : {"x1", "x2", "x3", "x4"}) b.Edge("h", v);
      break;
    case Family::kK23Star:
      for (const char* v : {"u", "w", "x1", "x2", "x3"}) b.Vertex(v);
      b.Edge("u", "w");
      for (const char* v : {"x1", "x2", "x3"}) {
        b.Edge("u", v);
        b.Edge("w", v);
      }
      break;
    case Family::kK24Star:
      for (const char* v : {"y", "u", "x1", "x2", "w", "z"}) b.Vertex(v);
      b.Edge("y", "u");
      b.Edge("u", "x1");
      b.Edge("u", "x2");
      b.Edge("u", "w");
      b.Edge("x1", "w");
      b.Edge("x2", "w");
      b.Edge("w", "z");
      break;
    case Family::kA:
      for (const char* v : {"h", "q1", "q2", "q3", "q4", "x"}) b.Vertex(v);
      for (const char* v : {"q1", "q2", "q3", "q4", "x"}) b.Edge("h", v);
      b.Edge("q1", "q2");
      b.Edge("q2", "q3");
      b.Edge("q3", "q4");
      break;
    case Family::kB:
      for (const char* v : {"h", "k1", "k2", "k3", "x1", "x2"}) b.Vertex(v);
      b.Edge("h", "k1");
      b.Edge("h", "k2");
      b.Edge("h", "k3");
      b.Edge("k1", "k2");
      b.Edge("k1", "k3");
      b.Edge("k2", "k3");
      b.Edge("h", "x1");
      b.Edge("h", "x2");
      break;
    default:
      throw std::invalid_argument("not a finite forbidden graph");
  }
  return b.Build();
}

}  // namespace

std::string_view FamilyName(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "?";
}

Family ParseFamily(std::string_view name) {
  for (const auto& [family, text] : kNames) {
    if (text == name) return family;
  }
  throw std::invalid_argument("unknown forbidden family '" + std::string(name) +
                              "'");
}

void ForbiddenId::Validate() const {
  const bool wants_k = !IsFinite();
  const bool wants_n = family == Family::kFam5;
  if (wants_k ? k < 1 : k != 0) {
    throw std::invalid_argument("bad k for " + std::string(FamilyName(family)));
  }
  if (wants_n ? n < 1 : n != 0) {
    throw std::invalid_argument("bad n for " + std::string(FamilyName(family)));
  }
}

std::string ForbiddenId::ToString() const {
  std::string s(FamilyName(family));
  if (family == Family::kFam5) {
    s += "(" + std::to_string(k) + "," + std::to_string(n) + ")";
  } else if (!IsFinite()) {
    s += "(" + std::to_string(k) + ")";
  }
  return s;
}

ForbiddenId ParseForbiddenId(std::string_view text) {
  ForbiddenId id;
  const auto open = text.find('(');
  id.family = ParseFamily(text.substr(0, open));
  if (open != std::string_view::npos) {
    if (text.back() != ')') {
      throw std::invalid_argument("bad forbidden id '" + std::string(text) + "'");
    }
    std::string args(text.substr(open + 1, text.size() - open - 2));
    std::size_t used = 0;
    try {
      id.k = std::stoi(args, &used);
      if (used < args.size()) {
        if (args[used] != ',') throw std::invalid_argument("separator");
        std::string rest = args.substr(used + 1);
        id.n = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad forbidden id '" + std::string(text) + "'");
    }
  }
  id.Validate();
  return id;
}

int TemplateSize(const ForbiddenId& id) {
  id.Validate();
  switch (id.family) {
    case Family::kK14:
    case Family::kK23Star:
      return 5;
    case Family::kK24Star:
    case Family::kA:
    case Family::kB:
      return 6;
    case Family::kFam3:
      return 2 * id.k + 5;
    case Family::kFam1:
    case Family::kFam2:
    case Family::kFam4:
      return 2 * id.k + 6;
    case Family::kFam5:
      return 2 * id.k + 2 * id.n + 6;
  }
  return 0;
}

Graph GenerateH(int k) {
  if (k < 1) throw std::invalid_argument("H_k needs k >= 1");
  Builder b;
  AddH(b, k, false);
  return b.Build();
}

Graph Generate(const ForbiddenId& id) {
  id.Validate();
  if (id.IsFinite()) return Finite(id.family);
  const int k = id.k;
  Builder b;
  AddH(b, k, false);
  const std::string ak = Indexed("a", k);
  const std::string ck = Indexed("c", k);
  switch (id.family) {
    case Family::kFam1:
      for (const char* v : {"x", "y", "z"}) {
        b.Vertex(v);
        b.Edge(ak, v);
      }
      b.Edge("x", "y");
      b.Edge("y", "z");
      b.Edge("x", "z");
      break;
    case Family::kFam2:
      for (const char* v : {"x", "y", "z"}) {
        b.Vertex(v);
        b.Edge(ak, v);
      }
      b.Edge("x", "y");
      b.Edge("y", "z");
      b.Edge("z", ck);
      break;
    case Family::kFam3:
      for (const char* v : {"x", "y"}) {
        b.Vertex(v);
        b.Edge(ak, v);
      }
      break;
    case Family::kFam4: {
      const std::string next = Indexed("c", k + 1);
      b.Vertex(next);
      b.Vertex("x");
      b.Vertex("u");
      b.Edge(ak, next);
      b.Edge(ak, "x");
      b.Edge(ck, "x");
      b.Edge("x", "u");
      b.Edge("x", next);
      break;
    }
    case Family::kFam5: {
      AddH(b, id.n, true);
      const std::string an = Indexed("a", id.n, "'");
      const std::string dn = Indexed("d", id.n, "'");
      b.Edge(ak, an);
      b.Edge(ck, an);
      b.Edge(ak, dn);
      break;
    }
    default:
      break;
  }
  return b.Build();
}

std::vector<ForbiddenId> CatalogUpTo(int max_vertices, int max_k) {
  std::vector<ForbiddenId> out;
  for (Family f : {Family::kK14, Family::kK23Star, Family::kK24Star, Family::kA,
                   Family::kB}) {
    ForbiddenId id{f, 0, 0};
    if (TemplateSize(id) <= max_vertices) out.push_back(id);
  }
  std::vector<ForbiddenId> families;
  for (int k = 1; k <= max_k; ++k) {
    for (Family f :
         {Family::kFam1, Family::kFam2, Family::kFam3, Family::kFam4}) {
      ForbiddenId id{f, k, 0};
      if (TemplateSize(id) <= max_vertices) families.push_back(id);
    }
    for (int n = 1; n <= max_k; ++n) {
      ForbiddenId id{Family::kFam5, k, n};
      if (TemplateSize(id) <= max_vertices) families.push_back(id);
    }
  }
  std::sort(families.begin(), families.end(),
            [](const ForbiddenId& a, const ForbiddenId& b) {
              return std::make_tuple(TemplateSize(a), a.family, a.k, a.n) <
                     std::make_tuple(TemplateSize(b), b.family, b.k, b.n);
            });
  out.insert(out.end(), families.begin(), families.end());
  return out;
}

std::optional<ForbiddenCertificate> FindForbidden(const Graph& g,
                                                  std::optional<int> max_k) {
  const int bound = max_k.value_or((g.size() + 1) / 2);
  for (const ForbiddenId& id : CatalogUpTo(g.size(), bound)) {
    Graph pattern = Generate(id);
    if (auto embedding = FindInducedEmbedding(g, pattern)) {
      return ForbiddenCertificate{id, std::move(*embedding)};
    }
  }
  return std::nullopt;
}

bool ValidateCertificate(const Graph& g, const ForbiddenCertificate& c) {
  try {
    c.id.Validate();
  } catch (const std::invalid_argument&) {
    return false;
  }
  Graph pattern = Generate(c.id);
  if (static_cast<int>(c.embedding.size()) != pattern.size()) return false;
  return IsInducedEmbedding(g, pattern, c.embedding);
}

}  // namespace umix
