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

#ifndef UMIX_GRAPH_H_
#define UMIX_GRAPH_H_

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umix {

// Vertices are dense indices into a Graph. Each vertex also carries an opaque
// string label that survives induced-subgraph extraction and twin reduction,
// so certificates and representations can be reported in the caller's names.
using Vertex = int;
using VertexSet = boost::dynamic_bitset<>;

inline constexpr int kDefaultEnumerationBound = 8;

// Undirected simple graph. Adjacency is symmetric and irreflexive; labels are
// distinct.
class Graph {
 public:
  Graph() = default;
  // Vertices labelled "0" .. "n-1".
  explicit Graph(int n);
  // Throws std::invalid_argument on duplicate labels.
  explicit Graph(std::vector<std::string> labels);

  static Graph FromEdges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> Find(std::string_view label) const;
  // Throws std::out_of_range for an unknown label.
  Vertex IndexOf(std::string_view label) const;

  // Throws std::invalid_argument on self-loops, std::out_of_range on bad ids.
  void AddEdge(Vertex u, Vertex v);
  void RemoveEdge(Vertex u, Vertex v);
  bool Adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  int Degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
  const VertexSet& Neighbors(Vertex v) const { return adj_[v]; }
  int EdgeCount() const;
  std::vector<std::pair<Vertex, Vertex>> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void CheckVertex(Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

// {v} ∪ N(v). Throws std::out_of_range for an unknown vertex.
VertexSet ClosedNeighborhood(const Graph& g, Vertex v);

struct TwinReduction {
  // Twin-free graph on one representative per class; labels are those of the
  // representatives (the smallest original index in each class).
  Graph reduced;
  // Original vertex -> index of its class in `reduced`.
  std::vector<Vertex> class_of;
  // Reduced index -> original members, ascending; members[0] is the
  // representative.
  std::vector<std::vector<Vertex>> classes;

  Vertex Representative(Vertex original) const {
    return classes[class_of[original]].front();
  }
  bool HasTwins() const {
    return static_cast<int>(classes.size()) != static_cast<int>(class_of.size());
  }
};

TwinReduction ReduceTwins(const Graph& g);
bool IsTwinFree(const Graph& g);

// Vertices in the order given; labels are carried over. Throws
// std::out_of_range for vertices outside g and std::invalid_argument for
// repeats.
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Injective map pattern -> host preserving both edges and non-edges, or
// nullopt. Degree-pruned backtracking over a connectivity-first pattern order.
std::optional<std::vector<Vertex>> FindInducedEmbedding(const Graph& host,
                                                        const Graph& pattern);
bool IsInducedEmbedding(const Graph& host, const Graph& pattern,
                        std::span<const Vertex> embedding);

// Canonical label (graph6 of a canonically relabelled copy). Equal for two
// graphs iff they are isomorphic. Throws std::invalid_argument when
// g.size() > bound. Results are memoized in a process-wide cache guarded by a
// shared mutex.
std::string CanonicalForm(const Graph& g, int bound = kDefaultEnumerationBound);

// graph6 (the nauty/geng exchange format), n <= 62.
std::string ToGraph6(const Graph& g);
Graph FromGraph6(std::string_view text);

}  // namespace umix

#endif  // UMIX_GRAPH_H_
