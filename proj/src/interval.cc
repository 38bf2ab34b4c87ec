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

#include "umix/interval.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace umix {

MixedInterval MixedInterval::Make(Rational l, bool left_closed, Rational r,
                                  bool right_closed) {
  MixedInterval i;
  i.left = Endpoint{l, left_closed, Colour::kWhite};
  i.right = Endpoint{r, right_closed, Colour::kWhite};
  i.Validate();
  return i;
}

void MixedInterval::Validate() const {
  if (right.value < left.value) {
    throw std::invalid_argument("interval " + ToString() +
                                " has left endpoint past right endpoint");
  }
  if (left.value == right.value && !(left.closed && right.closed)) {
    throw std::invalid_argument("interval " + ToString() + " is empty");
  }
}

std::string MixedInterval::ToString() const {
  return std::string(left.closed ? "[" : "(") + left.value.ToString() + "," +
         right.value.ToString() + (right.closed ? "]" : ")");
}

bool Intersects(const MixedInterval& a, const MixedInterval& b) {
  // Greatest lower end and least upper end of the intersection.
  Rational lo = std::max(a.left.value, b.left.value);
  Rational hi = std::min(a.right.value, b.right.value);
  if (lo < hi) return true;
  if (hi < lo) return false;
  auto covers = [&lo](const MixedInterval& i) {
    if (i.left.value == lo && !i.left.closed) return false;
    if (i.right.value == lo && !i.right.closed) return false;
    return true;
  };
  return covers(a) && covers(b);
}

bool Contains(const MixedInterval& outer, const MixedInterval& inner) {
  bool left_ok = outer.left.value < inner.left.value ||
                 (outer.left.value == inner.left.value &&
                  (outer.left.closed || !inner.left.closed));
  bool right_ok = inner.right.value < outer.right.value ||
                  (outer.right.value == inner.right.value &&
                   (outer.right.closed || !inner.right.closed));
  return left_ok && right_ok;
}

bool StrictlyContains(const MixedInterval& outer, const MixedInterval& inner) {
  return Contains(outer, inner) && !outer.SameEndpointValues(inner);
}

bool Verify(const Graph& g, const Representation& r) {
  if (static_cast<int>(r.size()) != g.size()) {
    throw std::invalid_argument(
        "representation covers " + std::to_string(r.size()) +
        " vertices, graph has " + std::to_string(g.size()));
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (g.Adjacent(u, v) != Intersects(r[u], r[v])) return false;
    }
  }
  return true;
}

int CountStrictInclusions(const Representation& r) {
  int count = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (i != j && StrictlyContains(r[i], r[j])) ++count;
    }
  }
  return count;
}

bool IsStrict(const Representation& r) { return CountStrictInclusions(r) == 0; }

bool IsUnit(const Representation& r) {
  if (r.empty()) return true;
  const Rational len = r.front().Length();
  if (len <= Rational(0)) return false;
  return std::all_of(r.begin(), r.end(),
                     [&len](const MixedInterval& i) { return i.Length() == len; });
}

namespace {

// A point of a ∩ b, which must be nonempty.
Rational CommonPoint(const MixedInterval& a, const MixedInterval& b) {
  Rational lo = std::max(a.left.value, b.left.value);
  Rational hi = std::min(a.right.value, b.right.value);
  if (lo == hi) return lo;
  return (lo + hi) / Rational(2);
}

}  // namespace

Representation MixedToClosed(const Graph& g, const Representation& r) {
  if (!Verify(g, r)) {
    throw std::invalid_argument("representation does not represent the graph");
  }
  const int n = g.size();
  std::vector<std::optional<std::pair<Rational, Rational>>> hull(n);
  for (auto [u, v] : g.Edges()) {
    const Rational x = CommonPoint(r[u], r[v]);
    for (Vertex w : {u, v}) {
      if (!hull[w]) {
        hull[w] = {x, x};
      } else {
        hull[w]->first = std::min(hull[w]->first, x);
        hull[w]->second = std::max(hull[w]->second, x);
      }
    }
  }
  Representation out(n);
  Rational far = 0;
  for (const auto& i : r) far = std::max(far, i.right.value);
  for (Vertex v = 0; v < n; ++v) {
    if (hull[v]) out[v] = MixedInterval::Closed(hull[v]->first, hull[v]->second);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hull[v]) continue;
    MixedInterval point = MixedInterval::Closed(r[v].left.value, r[v].left.value);
    bool taken = false;
    // Placed so far: every vertex with a hull and isolated ones before v.
    for (Vertex w = 0; w < n && !taken; ++w) {
      if (w != v && (hull[w] || w < v) && Intersects(out[w], point)) {
        taken = true;
      }
    }
    if (taken) {
      far += Rational(1);
      point = MixedInterval::Closed(far, far);
    }
    out[v] = point;
  }
  if (!Verify(g, out)) {
    throw std::logic_error("closed conversion produced a wrong representation");
  }
  return out;
}

namespace {

struct Closure {
  Rational left;
  Rational right;
  auto operator<=>(const Closure&) const = default;
};

// Distinct closures in ascending order, and each vertex's index among them.
std::pair<std::vector<Closure>, std::vector<int>> DedupClosures(
    const Representation& r) {
  std::map<Closure, int> index;
  for (const auto& i : r) index.emplace(Closure{i.left.value, i.right.value}, 0);
  std::vector<Closure> classes;
  for (auto& [c, id] : index) {
    id = static_cast<int>(classes.size());
    classes.push_back(c);
  }
  std::vector<int> class_of;
  for (const auto& i : r) {
    class_of.push_back(index.at(Closure{i.left.value, i.right.value}));
  }
  return {classes, class_of};
}

int Sign(const Rational& x) {
  if (x < Rational(0)) return -1;
  if (Rational(0) < x) return 1;
  return 0;
}

}  // namespace

Representation ToUnit(const Graph& g, const Representation& r) {
  if (!Verify(g, r)) {
    throw std::invalid_argument("representation does not represent the graph");
  }
  if (!IsStrict(r)) throw std::invalid_argument("representation is not strict");
  for (const auto& i : r) {
    if (i.IsDegenerate()) {
      throw std::invalid_argument("point intervals cannot be made unit");
    }
  }
  auto [classes, class_of] = DedupClosures(r);
  const int m = static_cast<int>(classes.size());
  // Sorted by (left, right); the family is proper iff both ends strictly
  // increase from each closure to the next.
  for (int i = 0; i + 1 < m; ++i) {
    if (classes[i + 1].left == classes[i].left ||
        classes[i + 1].right <= classes[i].right) {
      throw std::invalid_argument("closures of the representation are nested");
    }
  }
  const Rational eps(1, 2 * static_cast<std::int64_t>(g.size()) + 2);

  // x_j - x_i <= w is the edge i -> j with weight w; x is the new left end.
  struct Edge {
    int from;
    int to;
    Rational weight;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      switch (Sign(classes[i].right - classes[j].left)) {
        case 0:  // touching: x_j - x_i == 1
          edges.push_back({i, j, Rational(1)});
          edges.push_back({j, i, Rational(-1)});
          break;
        case 1:  // overlapping: x_j - x_i < 1
          edges.push_back({i, j, Rational(1) - eps});
          break;
        default:  // apart: x_j - x_i > 1
          edges.push_back({j, i, -(Rational(1) + eps)});
          break;
      }
    }
  }
  std::vector<Rational> x(m, Rational(0));
  bool changed = true;
  for (int round = 0; round <= m && changed; ++round) {
    changed = false;
    for (const auto& e : edges) {
      Rational via = x[e.from] + e.weight;
      if (via < x[e.to]) {
        x[e.to] = via;
        changed = true;
      }
    }
  }
  if (changed) throw std::logic_error("unit placement constraints infeasible");
  if (m > 0) {
    const Rational lowest = *std::min_element(x.begin(), x.end());
    for (auto& v : x) v -= lowest;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && Sign(classes[i].right - classes[j].left) !=
                        Sign(x[i] + Rational(1) - x[j])) {
        throw std::logic_error("unit placement changed an endpoint order");
      }
    }
  }

  Representation out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    const Rational left = x[class_of[v]];
    out[v] = r[v];
    out[v].left.value = left;
    out[v].right.value = left + Rational(1);
  }
  if (!PreservesTouching(r, out) || !IsUnit(out) || !Verify(g, out)) {
    throw std::logic_error("unit conversion failed its own checks");
  }
  return out;
}

bool PreservesTouching(const Representation& before,
                       const Representation& after) {
  if (before.size() != after.size()) return false;
  auto [classes, class_of] = DedupClosures(before);
  // One image per class; distinct vertices of a class must agree.
  std::vector<std::optional<Closure>> image(classes.size());
  for (std::size_t v = 0; v < before.size(); ++v) {
    Closure c{after[v].left.value, after[v].right.value};
    auto& slot = image[class_of[v]];
    if (slot && *slot != c) return false;
    slot = c;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      bool touch_before = classes[i].right == classes[j].left;
      bool touch_after = image[i]->right == image[j]->left;
      if (touch_before != touch_after) return false;
    }
  }
  return true;
}

const char* ToString(Peek p) {
  switch (p) {
    case Peek::kNo:
      return "no";
    case Peek::kLeft:
      return "left";
    case Peek::kRight:
      return "right";
    case Peek::kOther:
      return "other";
  }
  return "?";
}

Peek PeeksInto(const MixedInterval& x, const MixedInterval& a,
               const MixedInterval& b) {
  if (!Intersects(x, a) || Intersects(x, b)) return Peek::kNo;
  if (x.right.value <= b.left.value) return Peek::kLeft;
  if (b.right.value <= x.left.value) return Peek::kRight;
  return Peek::kOther;
}

Peek PeeksInto(const Representation& r, Vertex x, Vertex a, Vertex b) {
  if (x == a || x == b || a == b) {
    throw std::invalid_argument("peeking needs three distinct vertices");
  }
  return PeeksInto(r.at(x), r.at(a), r.at(b));
}

}  // namespace umix
