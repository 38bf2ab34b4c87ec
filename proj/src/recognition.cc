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

#include <algorithm>
#include <functional>
#include <list>
#include <set>
#include <stdexcept>

namespace umix {

std::vector<Vertex> LexBfsOrder(const Graph& g) {
  const int n = g.size();
  // Partition refinement over an ordered list of classes.
  std::list<std::vector<Vertex>> classes;
  if (n > 0) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    classes.push_back(all);
  }
  std::vector<Vertex> order;
  while (!classes.empty()) {
    std::vector<Vertex>& front = classes.front();
    Vertex v = front.front();
    front.erase(front.begin());
    if (front.empty()) classes.pop_front();
    order.push_back(v);
    for (auto it = classes.begin(); it != classes.end();) {
      std::vector<Vertex> hit;
      std::vector<Vertex> miss;
      for (Vertex u : *it) (g.Adjacent(u, v) ? hit : miss).push_back(u);
      if (hit.empty() || miss.empty()) {
        ++it;
        continue;
      }
      *it = std::move(miss);
      classes.insert(it, std::move(hit));
      ++it;
    }
  }
  return order;
}

std::optional<std::vector<VertexSet>> ChordalMaximalCliques(const Graph& g) {
  const int n = g.size();
  std::vector<Vertex> lex = LexBfsOrder(g);
  // Reverse LexBFS is a perfect elimination ordering iff g is chordal.
  std::vector<Vertex> peo(lex.rbegin(), lex.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<VertexSet> candidates;
  for (int i = 0; i < n; ++i) {
    Vertex v = peo[i];
    VertexSet later(n);
    Vertex first = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (g.Adjacent(u, v) && pos[u] > i) {
        later.set(u);
        if (first < 0 || pos[u] < pos[first]) first = u;
      }
    }
    if (first >= 0) {
      VertexSet rest = later;
      rest.reset(first);
      if (!rest.is_subset_of(g.Neighbors(first))) return std::nullopt;
    }
    later.set(v);
    candidates.push_back(later);
  }
  std::vector<VertexSet> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      if (candidates[i].is_proper_subset_of(candidates[j])) maximal = false;
      // Equal candidates are impossible: each contains its own vertex as the
      // earliest member.
    }
    if (maximal) cliques.push_back(candidates[i]);
  }
  return cliques;
}

bool IsValidCliqueOrdering(const Graph& g,
                           const std::vector<VertexSet>& cliques) {
  const int n = g.size();
  for (const auto& c : cliques) {
    if (static_cast<int>(c.size()) != n || c.none()) return false;
    for (Vertex u = 0; u < n; ++u) {
      if (!c.test(u)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (c.test(v) && !g.Adjacent(u, v)) return false;
      }
    }
    for (Vertex w = 0; w < n; ++w) {
      if (!c.test(w) && c.is_subset_of(g.Neighbors(w))) return false;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    int first = -1;
    int last = -1;
    int count = 0;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
      if (!cliques[i].test(v)) continue;
      if (first < 0) first = i;
      last = i;
      ++count;
    }
    if (count == 0 || last - first + 1 != count) return false;
  }
  for (auto [u, v] : g.Edges()) {
    bool covered = false;
    for (const auto& c : cliques) covered = covered || (c.test(u) && c.test(v));
    if (!covered) return false;
  }
  return true;
}

namespace {

using ColumnSet = boost::dynamic_bitset<>;

// Ordered partition of the columns spanned by one overlap component of rows.
// Every row of the component ends up as a run of whole classes.
class OverlapComponent {
 public:
  explicit OverlapComponent(const ColumnSet& first) : classes_{first} {}

  // Adds a row that overlaps an already placed row. False if the rows cannot
  // all be consecutive.
  bool Add(const ColumnSet& row) {
    const int size = static_cast<int>(classes_.size());
    int lo = -1;
    int hi = -1;
    ColumnSet covered(row.size());
    for (int i = 0; i < size; ++i) {
      if (!classes_[i].intersects(row)) continue;
      if (lo < 0) lo = i;
      hi = i;
      covered |= classes_[i];
    }
    if (lo < 0) return false;
    for (int i = lo + 1; i < hi; ++i) {
      if (!classes_[i].is_subset_of(row)) return false;
    }
    for (int i = lo; i <= hi; ++i) {
      if (!classes_[i].intersects(row)) return false;
    }
    ColumnSet fresh = row - covered;
    for (const auto& c : classes_) fresh -= c;
    const bool lo_full = classes_[lo].is_subset_of(row);
    const bool hi_full = classes_[hi].is_subset_of(row);

    if (lo == hi) {
      // Inside one class: only possible with fresh columns at an end.
      if (fresh.none()) return false;
      ColumnSet in = classes_[lo] & row;
      ColumnSet out = classes_[lo] - row;
      if (size == 1 || lo == size - 1) {
        Replace(lo, {out, in});
        classes_.push_back(fresh);
      } else if (lo == 0) {
        Replace(lo, {in, out});
        classes_.insert(classes_.begin(), fresh);
      } else {
        return false;
      }
      return true;
    }

    bool extend_right = false;
    bool extend_left = false;
    if (fresh.any()) {
      if (hi == size - 1 && hi_full) {
        extend_right = true;
      } else if (lo == 0 && lo_full) {
        extend_left = true;
      } else {
        return false;
      }
    }
    // Split the end classes so the row's part faces inward.
    ColumnSet hi_in = classes_[hi] & row;
    ColumnSet hi_out = classes_[hi] - row;
    Replace(hi, {hi_in, hi_out});
    ColumnSet lo_in = classes_[lo] & row;
    ColumnSet lo_out = classes_[lo] - row;
    Replace(lo, {lo_out, lo_in});
    if (extend_right) classes_.push_back(fresh);
    if (extend_left) classes_.insert(classes_.begin(), fresh);
    return true;
  }

  const std::vector<ColumnSet>& classes() const { return classes_; }

 private:
  void Replace(int at, std::initializer_list<ColumnSet> parts) {
    std::vector<ColumnSet> keep;
    for (const auto& p : parts) {
      if (p.any()) keep.push_back(p);
    }
    classes_.erase(classes_.begin() + at);
    classes_.insert(classes_.begin() + at, keep.begin(), keep.end());
  }

  std::vector<ColumnSet> classes_;
};

bool Overlap(const ColumnSet& a, const ColumnSet& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

// A column order in which every row is consecutive, or nullopt.
std::optional<std::vector<int>> ConsecutiveOnes(int columns,
                                                std::vector<ColumnSet> rows) {
  // Rows on fewer than two columns never constrain anything.
  std::set<ColumnSet> unique;
  for (auto& r : rows) {
    if (r.count() >= 2) unique.insert(r);
  }
  std::vector<ColumnSet> kept(unique.begin(), unique.end());
  const int m = static_cast<int>(kept.size());

  // Overlap components, each grown breadth-first so every new row overlaps a
  // placed one.
  std::vector<int> comp_of(m, -1);
  std::vector<OverlapComponent> comps;
  std::vector<ColumnSet> unions;
  for (int seed = 0; seed < m; ++seed) {
    if (comp_of[seed] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back(kept[seed]);
    unions.push_back(kept[seed]);
    comp_of[seed] = id;
    std::vector<int> queue{seed};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int r = queue[head];
      for (int s = 0; s < m; ++s) {
        if (comp_of[s] >= 0 || !Overlap(kept[r], kept[s])) continue;
        if (!comps[id].Add(kept[s])) return std::nullopt;
        comp_of[s] = id;
        unions[id] |= kept[s];
        queue.push_back(s);
      }
    }
  }

  // Nest each component inside the smallest class of another component that
  // holds its whole span.
  const int c = static_cast<int>(comps.size());
  std::vector<std::pair<int, int>> parent(c, {-1, -1});
  for (int child = 0; child < c; ++child) {
    std::size_t best_class = 0;
    std::size_t best_union = 0;
    for (int p = 0; p < c; ++p) {
      if (p == child) continue;
      const auto& classes = comps[p].classes();
      for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        if (!unions[child].is_subset_of(classes[k])) continue;
        std::size_t cs = classes[k].count();
        std::size_t us = unions[p].count();
        if (parent[child].first < 0 || cs < best_class ||
            (cs == best_class && us < best_union)) {
          parent[child] = {p, k};
          best_class = cs;
          best_union = us;
        }
      }
    }
  }

  std::vector<int> order;
  std::vector<bool> placed(columns, false);
  auto place_set = [&](const ColumnSet& s) {
    for (int col = 0; col < columns; ++col) {
      if (s.test(col) && !placed[col]) {
        placed[col] = true;
        order.push_back(col);
      }
    }
  };
  std::function<void(int)> emit = [&](int comp) {
    const auto& classes = comps[comp].classes();
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
      for (int child = 0; child < c; ++child) {
        if (parent[child] == std::make_pair(comp, k)) emit(child);
      }
      place_set(classes[k]);
    }
  };
  for (int comp = 0; comp < c; ++comp) {
    if (parent[comp].first < 0) emit(comp);
  }
  for (int col = 0; col < columns; ++col) {
    if (!placed[col]) {
      placed[col] = true;
      order.push_back(col);
    }
  }

  std::vector<int> where(columns);
  for (int i = 0; i < columns; ++i) where[order[i]] = i;
  for (const auto& r : kept) {
    int first = columns;
    int last = -1;
    for (int col = 0; col < columns; ++col) {
      if (!r.test(col)) continue;
      first = std::min(first, where[col]);
      last = std::max(last, where[col]);
    }
    if (last - first + 1 != static_cast<int>(r.count())) return std::nullopt;
  }
  return order;
}

}  // namespace

std::optional<CliqueOrdering> RecognizeInterval(const Graph& g) {
  const int n = g.size();
  auto cliques = ChordalMaximalCliques(g);
  if (!cliques) return std::nullopt;
  const int m = static_cast<int>(cliques->size());
  std::vector<ColumnSet> rows(n, ColumnSet(m));
  for (int i = 0; i < m; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if ((*cliques)[i].test(v)) rows[v].set(i);
    }
  }
  auto order = ConsecutiveOnes(m, rows);
  if (!order) return std::nullopt;
  CliqueOrdering result;
  for (int col : *order) result.cliques.push_back((*cliques)[col]);
  result.span.assign(n, {0, 0});
  for (int i = 0; i < m; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (!result.cliques[i].test(v)) continue;
      if (result.span[v].first == 0) result.span[v].first = i + 1;
      result.span[v].second = i + 1;
    }
  }
  if (!IsValidCliqueOrdering(g, result.cliques)) {
    throw std::logic_error("clique ordering failed its own validation");
  }
  return result;
}

Representation InitialRepresentation(const Graph& g, const CliqueOrdering& c) {
  if (!IsTwinFree(g)) {
    throw std::invalid_argument("initial representation needs a twin-free graph");
  }
  if (static_cast<int>(c.span.size()) != g.size() ||
      !IsValidCliqueOrdering(g, c.cliques)) {
    throw std::invalid_argument("clique ordering does not match the graph");
  }
  Representation r;
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::int64_t j = c.span[v].first;
    const std::int64_t k = c.span[v].second - c.span[v].first;
    const Rational pad(1, k + 3);
    r.push_back(MixedInterval::Closed(Rational(j) - pad, Rational(j + k) + pad));
  }
  return r;
}

bool CheckHypothesis(const Graph& g, const Representation& r) {
  if (static_cast<int>(r.size()) != g.size()) return false;
  std::set<Rational> values;
  for (const auto& i : r) {
    if (!i.left.closed || !i.right.closed) return false;
    values.insert(i.left.value);
    values.insert(i.right.value);
  }
  if (values.size() != 2 * r.size()) return false;
  if (!Verify(g, r)) return false;
  const int n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u == v || !Contains(r[v], r[u])) continue;
      bool left = false;
      bool right = false;
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        Peek p = PeeksInto(r, x, v, u);
        left = left || p == Peek::kLeft;
        right = right || p == Peek::kRight;
      }
      if (!left || !right) return false;
    }
  }
  return true;
}

}  // namespace umix
