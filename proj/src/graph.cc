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

#include "umix/graph.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace umix {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  labels_.reserve(n);
  for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  adj_.assign(n, VertexSet(n));
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate vertex label '" + l + "'");
    }
  }
  adj_.assign(labels_.size(), VertexSet(labels_.size()));
}

Graph Graph::FromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  }
}

const std::string& Graph::label(Vertex v) const {
  CheckVertex(v);
  return labels_[v];
}

std::optional<Vertex> Graph::Find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Vertex Graph::IndexOf(std::string_view label) const {
  if (auto v = Find(label)) return *v;
  throw std::out_of_range("unknown vertex '" + std::string(label) + "'");
}

void Graph::AddEdge(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw std::invalid_argument("self-loop at " + labels_[u]);
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::RemoveEdge(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

int Graph::EdgeCount() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<Vertex, Vertex>> Graph::Edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

VertexSet ClosedNeighborhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  }
  VertexSet s = g.Neighbors(v);
  s.set(v);
  return s;
}

TwinReduction ReduceTwins(const Graph& g) {
  const int n = g.size();
  TwinReduction out;
  out.class_of.assign(n, -1);
  std::map<VertexSet, int> by_closed_nbhd;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = by_closed_nbhd.try_emplace(
        ClosedNeighborhood(g, v), static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
    out.class_of[v] = it->second;
  }
  std::vector<Vertex> reps;
  for (const auto& c : out.classes) reps.push_back(c.front());
  out.reduced = InducedSubgraph(g, reps);
  return out;
}

bool IsTwinFree(const Graph& g) {
  std::set<VertexSet> seen;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!seen.insert(ClosedNeighborhood(g, v)).second) return false;
  }
  return true;
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> labels;
  VertexSet seen(g.size());
  for (Vertex v : vertices) {
    labels.push_back(g.label(v));
    if (seen.test(v)) {
      throw std::invalid_argument("vertex " + g.label(v) + " repeated");
    }
    seen.set(v);
  }
  Graph sub(std::move(labels));
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(vertices.size()); ++j) {
      if (g.Adjacent(vertices[i], vertices[j])) sub.AddEdge(i, j);
    }
  }
  return sub;
}

namespace {

// Pattern order: highest degree first, then repeatedly the vertex with the
// most already-ordered neighbours (ties: higher degree, lower index).
std::vector<Vertex> MatchOrder(const Graph& p) {
  const int n = p.size();
  std::vector<Vertex> order;
  std::vector<int> links(n, 0);
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (best < 0 || links[v] > links[best] ||
          (links[v] == links[best] && p.Degree(v) > p.Degree(best))) {
        best = v;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (Vertex w = 0; w < n; ++w) {
      if (p.Adjacent(best, w)) ++links[w];
    }
  }
  return order;
}

bool Extend(const Graph& host, const Graph& pattern,
            const std::vector<Vertex>& order, std::size_t depth,
            std::vector<Vertex>& map, VertexSet& used) {
  if (depth == order.size()) return true;
  const Vertex pv = order[depth];
  VertexSet cand = ~used;
  for (std::size_t i = 0; i < depth; ++i) {
    const Vertex q = order[i];
    if (pattern.Adjacent(pv, q)) {
      cand &= host.Neighbors(map[q]);
    } else {
      cand -= host.Neighbors(map[q]);
    }
  }
  const int need = pattern.Degree(pv);
  for (auto h = cand.find_first(); h != VertexSet::npos; h = cand.find_next(h)) {
    if (host.Degree(static_cast<Vertex>(h)) < need) continue;
    map[pv] = static_cast<Vertex>(h);
    used.set(h);
    if (Extend(host, pattern, order, depth + 1, map, used)) return true;
    used.reset(h);
  }
  map[pv] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> FindInducedEmbedding(const Graph& host,
                                                        const Graph& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  if (pattern.size() == 0) return std::vector<Vertex>{};
  std::vector<Vertex> map(pattern.size(), -1);
  VertexSet used(host.size());
  if (Extend(host, pattern, MatchOrder(pattern), 0, map, used)) return map;
  return std::nullopt;
}

bool IsInducedEmbedding(const Graph& host, const Graph& pattern,
                        std::span<const Vertex> embedding) {
  if (static_cast<int>(embedding.size()) != pattern.size()) return false;
  VertexSet seen(host.size());
  for (Vertex h : embedding) {
    if (h < 0 || h >= host.size() || seen.test(h)) return false;
    seen.set(h);
  }
  for (Vertex u = 0; u < pattern.size(); ++u) {
    for (Vertex v = u + 1; v < pattern.size(); ++v) {
      if (pattern.Adjacent(u, v) != host.Adjacent(embedding[u], embedding[v])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical labelling: colour refinement plus exhaustive individualization.
// The leaf set is isomorphism invariant, so the lexicographically largest
// upper-triangle string over all leaves is a canonical invariant.

namespace {

using Colouring = std::vector<int>;

void Refine(const Graph& g, Colouring& colour) {
  const int n = g.size();
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.push_back(colour[v]);
      std::vector<int> nb;
      for (Vertex w = 0; w < n; ++w) {
        if (g.Adjacent(v, w)) nb.push_back(colour[w]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    Colouring next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = rank;
    }
    colour = std::move(next);
    if (rank + 1 == classes) return;
    classes = rank + 1;
  }
}

std::string UpperTriangle(const Graph& g, const Colouring& colour) {
  const int n = g.size();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[colour[v]] = v;
  std::string bits;
  bits.reserve(n * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.Adjacent(at[i], at[j]) ? '1' : '0');
  }
  return bits;
}

void Search(const Graph& g, Colouring colour, std::string& best,
            Colouring& best_colour) {
  Refine(g, colour);
  const int n = g.size();
  std::vector<int> cell_size(n, 0);
  for (int c : colour) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    std::string bits = UpperTriangle(g, colour);
    if (best_colour.empty() || bits > best) {
      best = std::move(bits);
      best_colour = colour;
    }
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    Colouring child(n);
    for (Vertex u = 0; u < n; ++u) child[u] = 2 * colour[u] + (u == v ? 0 : 1);
    Search(g, std::move(child), best, best_colour);
  }
}

class CanonicalCache {
 public:
  std::optional<std::string> Get(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void Put(const std::string& key, const std::string& value) {
    std::unique_lock lock(mu_);
    map_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::string> map_;
};

CanonicalCache& Cache() {
  static CanonicalCache cache;
  return cache;
}

}  // namespace

std::string CanonicalForm(const Graph& g, int bound) {
  if (g.size() > bound) {
    throw std::invalid_argument("canonical form limited to " +
                                std::to_string(bound) + " vertices");
  }
  const std::string key = ToGraph6(g);
  if (auto hit = Cache().Get(key)) return *hit;
  std::string best;
  Colouring best_colour;
  Search(g, Colouring(g.size(), 0), best, best_colour);
  std::vector<Vertex> order(g.size());
  for (Vertex v = 0; v < g.size(); ++v) order[best_colour[v]] = v;
  Graph relabelled(g.size());
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (g.Adjacent(order[i], order[j])) relabelled.AddEdge(i, j);
    }
  }
  std::string canonical = ToGraph6(relabelled);
  Cache().Put(key, canonical);
  return canonical;
}

// ---------------------------------------------------------------------------
// graph6

std::string ToGraph6(const Graph& g) {
  const int n = g.size();
  if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.Adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph FromGraph6(std::string_view text) {
  if (!text.empty() && text.front() == '>') {
    const std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) != header) {
      throw std::invalid_argument("bad graph6 header");
    }
    text.remove_prefix(header.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 character");
  }
  if (text.front() == 126) {
    throw std::invalid_argument("graph6 reader supports n <= 62");
  }
  const int n = text.front() - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() - 1 != (pairs + 5) / 6) {
    throw std::invalid_argument("graph6 length mismatch");
  }
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.AddEdge(i, j);
    }
  }
  return g;
}

}  // namespace umix
