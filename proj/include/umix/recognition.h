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

#ifndef UMIX_RECOGNITION_H_
#define UMIX_RECOGNITION_H_

#include <optional>
#include <utility>
#include <vector>

#include "umix/graph.h"
#include "umix/interval.h"

namespace umix {

// Maximal cliques X_1..X_m in an order where the cliques containing any
// vertex are consecutive.
struct CliqueOrdering {
  std::vector<VertexSet> cliques;
  // Per vertex: 1-based index of its first and last clique.
  std::vector<std::pair<int, int>> span;
};

// Lexicographic breadth-first search order (first visited first).
std::vector<Vertex> LexBfsOrder(const Graph& g);

// Maximal cliques of a chordal graph, or nullopt if g is not chordal.
std::optional<std::vector<VertexSet>> ChordalMaximalCliques(const Graph& g);

// True iff every clique containing v is consecutive in `cliques` for all v,
// every clique is maximal, and every edge lies in some clique.
bool IsValidCliqueOrdering(const Graph& g, const std::vector<VertexSet>& cliques);

// A consecutive clique ordering iff g is an interval graph. Disconnected
// graphs get their components on disjoint index ranges.
std::optional<CliqueOrdering> RecognizeInterval(const Graph& g);

// Î(v) = [j - 1/(k+3), j+k + 1/(k+3)] for a vertex in cliques j..j+k, all
// endpoints closed and white. Throws std::invalid_argument if g has twins or
// the ordering does not match g.
Representation InitialRepresentation(const Graph& g, const CliqueOrdering& c);

// All closed, 2|V| distinct endpoint values, represents g, and every proper
// inclusion I(u) ⊂ I(v) has a vertex peeking into vu from each side.
bool CheckHypothesis(const Graph& g, const Representation& r);

}  // namespace umix

#endif  // UMIX_RECOGNITION_H_
