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

#ifndef UMIX_FORBIDDEN_H_
#define UMIX_FORBIDDEN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umix/graph.h"

namespace umix {

enum class Family {
  kK14,
  kK23Star,
  kK24Star,
  kA,
  kB,
  kFam1,
  kFam2,
  kFam3,
  kFam4,
  kFam5,
};

// "K14", "K23star", "K24star", "A", "B", "Fam1" .. "Fam5".
std::string_view FamilyName(Family f);
// Inverse of FamilyName; throws std::invalid_argument for unknown names.
Family ParseFamily(std::string_view name);

struct ForbiddenId {
  Family family = Family::kK14;
  // Parameters; k is used by Fam1..Fam5 and n by Fam5 only, 0 otherwise.
  int k = 0;
  int n = 0;

  bool IsFinite() const { return family <= Family::kB; }
  // Throws std::invalid_argument when parameters are missing or stray.
  void Validate() const;
  // e.g. "B", "Fam3(2)", "Fam5(1,2)".
  std::string ToString() const;
  friend bool operator==(const ForbiddenId&, const ForbiddenId&) = default;
};

// Inverse of ForbiddenId::ToString; throws std::invalid_argument.
ForbiddenId ParseForbiddenId(std::string_view text);

// Vertex count of generate(id) without building it.
int TemplateSize(const ForbiddenId& id);

// H_k with labels a_0, b_0, v, a_1..a_k, c_1..c_k. Throws for k < 1.
Graph GenerateH(int k);

// The template graph of a member of F. Vertex labels are the template names
// used in certificates.
Graph Generate(const ForbiddenId& id);

// Every id whose template has at most max_vertices vertices and whose
// parameters are at most max_k, in search order: the five finite graphs,
// then the families by (size, family, k, n).
std::vector<ForbiddenId> CatalogUpTo(int max_vertices, int max_k);

struct ForbiddenCertificate {
  ForbiddenId id;
  // Template vertex (index into Generate(id)) -> host vertex.
  std::vector<Vertex> embedding;
};

// First member of F (in CatalogUpTo order) induced in g, or nullopt. max_k
// defaults to ceil(|V|/2), which is enough for completeness.
std::optional<ForbiddenCertificate> FindForbidden(
    const Graph& g, std::optional<int> max_k = std::nullopt);

bool ValidateCertificate(const Graph& g, const ForbiddenCertificate& c);

}  // namespace umix

#endif  // UMIX_FORBIDDEN_H_
