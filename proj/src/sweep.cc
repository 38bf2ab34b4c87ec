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

#include "umix/sweep.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace umix {

const char* ToString(RoleKind k) {
  switch (k) {
    case RoleKind::kA:
      return "a";
    case RoleKind::kB:
      return "b";
    case RoleKind::kC:
      return "c";
    case RoleKind::kD:
      return "d";
  }
  return "?";
}

const char* ToString(Side s) {
  switch (s) {
    case Side::kBase:
      return "base";
    case Side::kLeft:
      return "left";
    case Side::kRight:
      return "right";
  }
  return "?";
}

std::string Role::Name() const {
  return std::string(ToString(kind)) + "_" + std::to_string(index) +
         (side == Side::kRight ? "'" : "");
}

namespace {

MixedInterval Reflect(const MixedInterval& i) {
  MixedInterval o;
  o.left = Endpoint{-i.right.value, i.right.closed, i.right.colour};
  o.right = Endpoint{-i.left.value, i.left.closed, i.left.colour};
  return o;
}

// Range minimum over a fixed array of rationals.
class SparseMin {
 public:
  SparseMin(std::vector<Rational> values, std::int64_t* ops) {
    table_.push_back(std::move(values));
    const std::size_t n = table_[0].size();
    for (std::size_t width = 2; width <= n; width *= 2) {
      const auto& prev = table_.back();
      std::vector<Rational> level(n - width + 1);
      for (std::size_t i = 0; i + width <= n; ++i) {
        level[i] = std::min(prev[i], prev[i + width / 2]);
      }
      if (ops) *ops += static_cast<std::int64_t>(level.size());
      table_.push_back(std::move(level));
    }
  }
  // Minimum over [lo, hi), which must be nonempty.
  Rational Min(std::size_t lo, std::size_t hi) const {
    const std::size_t len = hi - lo;
    const int level = std::bit_width(len) - 1;
    const std::size_t width = std::size_t{1} << level;
    return std::min(table_[level][lo], table_[level][hi - width]);
  }

 private:
  std::vector<std::vector<Rational>> table_;
};

std::optional<std::pair<Vertex, Vertex>> FindAbPairCounted(
    const Graph& g, const Representation& r, std::int64_t* ops) {
  const int n = static_cast<int>(r.size());
  if (n < 2) return std::nullopt;
  auto count = [ops](std::int64_t k) {
    if (ops) *ops += k;
  };
  // Intervals sorted by left endpoint value.
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(), [&r](Vertex a, Vertex b) {
    return r[a].left.value < r[b].left.value;
  });
  count(static_cast<std::int64_t>(n) * std::bit_width(static_cast<unsigned>(n)));
  std::vector<Rational> lefts(n);
  Rational top = r[0].right.value;
  for (const auto& i : r) top = std::max(top, i.right.value);
  const Rational inf = top + Rational(1);
  std::vector<Rational> min_right(n);
  std::vector<Rational> min_right_open_right(n);
  std::vector<Rational> min_right_open_left(n);
  for (int i = 0; i < n; ++i) {
    const MixedInterval& iv = r[by_left[i]];
    lefts[i] = iv.left.value;
    min_right[i] = iv.right.value;
    min_right_open_right[i] = iv.right.closed ? inf : iv.right.value;
    min_right_open_left[i] = iv.left.closed ? inf : iv.right.value;
  }
  count(n);
  SparseMin all(min_right, ops);
  SparseMin open_right(min_right_open_right, ops);
  SparseMin open_left(min_right_open_left, ops);

  // Candidate containers in (L, R, label) order.
  std::vector<Vertex> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  auto key_less = [&](Vertex a, Vertex b) {
    if (r[a].left.value != r[b].left.value) {
      return r[a].left.value < r[b].left.value;
    }
    if (r[a].right.value != r[b].right.value) {
      return r[a].right.value < r[b].right.value;
    }
    return g.label(a) < g.label(b);
  };
  std::sort(candidates.begin(), candidates.end(), key_less);
  count(static_cast<std::int64_t>(n) * std::bit_width(static_cast<unsigned>(n)));

  for (Vertex a : candidates) {
    const MixedInterval& ia = r[a];
    const auto eq_lo = static_cast<std::size_t>(
        std::lower_bound(lefts.begin(), lefts.end(), ia.left.value) -
        lefts.begin());
    const auto gt_lo = static_cast<std::size_t>(
        std::upper_bound(lefts.begin(), lefts.end(), ia.left.value) -
        lefts.begin());
    const auto hi = static_cast<std::size_t>(
        std::upper_bound(lefts.begin(), lefts.end(), ia.right.value) -
        lefts.begin());
    count(3);
    bool found = false;
    if (gt_lo < hi) {
      Rational m = all.Min(gt_lo, hi);
      if (m < ia.right.value) {
        found = true;
      } else if (m == ia.right.value) {
        found = ia.right.closed || open_right.Min(gt_lo, hi) == ia.right.value;
      }
    }
    if (!found && eq_lo < gt_lo) {
      const SparseMin& table = ia.left.closed ? all : open_left;
      found = table.Min(eq_lo, gt_lo) < ia.right.value;
    }
    if (!found) continue;
    std::optional<Vertex> best;
    for (std::size_t i = eq_lo; i < hi; ++i) {
      Vertex b = by_left[i];
      if (b != a && StrictlyContains(ia, r[b]) && (!best || key_less(b, *best))) {
        best = b;
      }
    }
    count(static_cast<std::int64_t>(hi - eq_lo));
    if (!best) throw std::logic_error("ab-pair search lost its witness");
    return std::make_pair(a, *best);
  }
  return std::nullopt;
}

enum class Dir { kAny, kLeftward, kRightward };

constexpr Vertex kNone = -1;

class SweepRun {
 public:
  SweepRun(const Graph& g, Representation& r, int sweep_id,
           const SweepOptions& options, SweepTrace* trace, std::int64_t* ops)
      : g_(g),
        r_(r),
        n_(g.size()),
        sweep_id_(sweep_id),
        options_(options),
        trace_(trace),
        ops_(ops) {
    red_before_left_.resize(n_);
    red_before_right_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      red_before_left_[v] = r_[v].left.red();
      red_before_right_[v] = r_[v].right.red();
    }
  }

  std::optional<SweepFailure> Run(Vertex a0, Vertex b0) {
    if (trace_) {
      trace_->sweep_id = sweep_id_;
      trace_->a0 = a0;
      trace_->b0 = b0;
    }
    bool ok = Base(a0, b0);
    if (ok) ok = Part(left_start_);
    if (ok) {
      ReflectAll();
      ok = Part(right_start_);
      ReflectAll();
    }
    if (ok && options_.audit) ok = AuditZoneLines() && AuditNtm();
    if (reflected_) ReflectAll();
    return failure_;
  }

 private:
  // Where a left or right part begins; in the frame of that part.
  struct PartStart {
    Vertex a_prev = kNone;  // a_0
    Vertex d_prev = kNone;  // d_0 for the left part, c_0 for the right part
    Rational m_prev;        // M_0 (M_0' on the right)
    Rational m_prev2;       // M_{-1}: the opposite end of I(a_0)
    Vertex a = kNone;
    Vertex c = kNone;
    Vertex b = kNone;
  };

  struct Reddened {
    Vertex v;
    bool left;  // real left endpoint
    Rational value;
    bool exempt;
  };

  void Count(std::int64_t k) {
    if (ops_) *ops_ += k;
  }

  bool Fail(std::string step, std::string reason, std::vector<Vertex> witnesses) {
    witnesses.erase(std::remove(witnesses.begin(), witnesses.end(), kNone),
                    witnesses.end());
    failure_ = SweepFailure{std::move(step), std::move(reason),
                            std::move(witnesses)};
    return false;
  }

  std::string Label(int k, int sub) const {
    return "[" + std::to_string(k) + "." + std::to_string(sub) +
           (reflected_ ? "']" : "]");
  }

  Side CurrentSide() const { return reflected_ ? Side::kRight : Side::kLeft; }

  Rational Real(const Rational& x) const { return reflected_ ? -x : x; }

  bool RedBeforeLeft(Vertex v) const {
    return reflected_ ? red_before_right_[v] : red_before_left_[v];
  }
  bool RedBeforeRight(Vertex v) const {
    return reflected_ ? red_before_left_[v] : red_before_right_[v];
  }

  void ReflectAll() {
    for (auto& i : r_) i = Reflect(i);
    reflected_ = !reflected_;
  }

  void AddRole(Vertex v, RoleKind kind, int index, Side side) {
    if (!trace_ || v == kNone) return;
    // On the right, c and d trade places.
    if (side == Side::kRight && kind == RoleKind::kC) {
      kind = RoleKind::kD;
    } else if (side == Side::kRight && kind == RoleKind::kD) {
      kind = RoleKind::kC;
    }
    trace_->roles.push_back({v, Role{kind, index, side}});
  }

  Role* FindRole(Vertex v, RoleKind kind, int index, Side side) {
    if (!trace_) return nullptr;
    if (side == Side::kRight && kind == RoleKind::kC) {
      kind = RoleKind::kD;
    } else if (side == Side::kRight && kind == RoleKind::kD) {
      kind = RoleKind::kC;
    }
    for (auto& [u, role] : trace_->roles) {
      if (u == v && role.kind == kind && role.index == index &&
          role.side == side) {
        return &role;
      }
    }
    return nullptr;
  }

  void AddZone(const Rational& x, Side side) {
    zones_.push_back(Real(x));
    if (trace_) trace_->zone_lines.push_back({Real(x), sweep_id_, side});
  }

  // Replaces I(v) in the current frame. Existing colours are kept, the named
  // endpoints turn red, and red endpoints may not move.
  bool Set(const std::string& step, Vertex v, Rational l, bool lc, Rational r,
           bool rc, bool redden_left, bool redden_right, Dir left_dir = Dir::kAny,
           Dir right_dir = Dir::kAny, bool exempt_left = false) {
    Count(1);
    const MixedInterval old = r_[v];
    MixedInterval next = old;
    next.left.value = l;
    next.left.closed = lc;
    next.right.value = r;
    next.right.closed = rc;
    if (r < l || (l == r && !(lc && rc))) {
      return Fail(step, "redefinition of " + g_.label(v) + " is empty", {v});
    }
    if ((old.left.red() && !old.left.SameAs(next.left)) ||
        (old.right.red() && !old.right.SameAs(next.right))) {
      return Fail(step, "red endpoint of " + g_.label(v) + " would move", {v});
    }
    if (options_.audit) {
      auto wrong = [](Dir d, const Rational& from, const Rational& to) {
        return (d == Dir::kLeftward && from < to) ||
               (d == Dir::kRightward && to < from);
      };
      if (wrong(left_dir, old.left.value, l) ||
          wrong(right_dir, old.right.value, r)) {
        return Fail(step, "endpoint of " + g_.label(v) + " moved the wrong way",
                    {v});
      }
    }
    if (redden_left) next.left.colour = Colour::kRed;
    if (redden_right) next.right.colour = Colour::kRed;
    r_[v] = next;

    const bool real_left_red = reflected_ ? redden_right : redden_left;
    const bool real_right_red = reflected_ ? redden_left : redden_right;
    const MixedInterval real_old = reflected_ ? Reflect(old) : old;
    const MixedInterval real_new = reflected_ ? Reflect(next) : next;
    const bool newly_left = real_left_red && !real_old.left.red();
    const bool newly_right = real_right_red && !real_old.right.red();
    const bool exempt_real_left = !reflected_ && exempt_left;
    const bool exempt_real_right = reflected_ && exempt_left;
    if (newly_left) {
      reddened_.push_back({v, true, real_new.left.value, exempt_real_left});
    }
    if (newly_right) {
      reddened_.push_back({v, false, real_new.right.value, exempt_real_right});
    }
    if (trace_ && options_.record_events) {
      trace_->events.push_back(
          {step, sweep_id_, v, real_old, real_new, newly_left, newly_right});
    }
    return true;
  }

  bool Recolour(const std::string& step, Vertex v, bool left, bool right) {
    const MixedInterval& i = r_[v];
    return Set(step, v, i.left.value, i.left.closed, i.right.value,
               i.right.closed, left, right);
  }

  // Vertices peeking into ab or ac (either may be kNone) from `side`.
  std::vector<Vertex> Peekers(Vertex a, Vertex b, Vertex c, Peek side) {
    std::vector<Vertex> out;
    Count(n_);
    for (Vertex x = 0; x < n_; ++x) {
      if (x == a) continue;
      bool hit = false;
      if (b != kNone && x != b) hit = PeeksInto(r_[x], r_[a], r_[b]) == side;
      if (!hit && c != kNone && x != c) {
        hit = PeeksInto(r_[x], r_[a], r_[c]) == side;
      }
      if (hit) out.push_back(x);
    }
    return out;
  }

  // Splits the peekers into (a, c) with R(a) < R(c) in the current frame.
  bool OrderPeekers(const std::string& step, const std::vector<Vertex>& p,
                    Vertex* a, Vertex* c) {
    *a = kNone;
    *c = kNone;
    if (p.size() > 2) return Fail(step, "three or more peekers", p);
    if (p.size() == 1) *a = p[0];
    if (p.size() == 2) {
      const MixedInterval& x = r_[p[0]];
      const MixedInterval& y = r_[p[1]];
      if (x.right.value == y.right.value) {
        return Fail(step, "peekers share a right endpoint", p);
      }
      if (Contains(x, y) || Contains(y, x)) {
        return Fail(step, "one peeker contains the other", p);
      }
      *a = x.right.value < y.right.value ? p[0] : p[1];
      *c = *a == p[0] ? p[1] : p[0];
    }
    return true;
  }

  // The unique interval strictly inside I(a), if any.
  bool StrictlyInside(const std::string& step, Vertex a, Vertex* b) {
    *b = kNone;
    Count(n_);
    std::vector<Vertex> found;
    for (Vertex u = 0; u < n_; ++u) {
      if (u != a && StrictlyContains(r_[a], r_[u])) found.push_back(u);
    }
    if (found.size() > 1) {
      found.push_back(a);
      return Fail(step, "two intervals strictly inside one", found);
    }
    if (!found.empty()) *b = found[0];
    return true;
  }

  // The vertex w != a with N[w] == N[a] minus `drop`, if any.
  bool NeighbourhoodMatch(const std::string& step, Vertex a,
                          const std::vector<Vertex>& drop, Vertex* out) {
    *out = kNone;
    VertexSet target = ClosedNeighborhood(g_, a);
    for (Vertex x : drop) {
      if (x != kNone) target.reset(x);
    }
    std::vector<Vertex> hits;
    Count(g_.Degree(a));
    for (Vertex w = target.find_first(); w != static_cast<Vertex>(VertexSet::npos);
         w = static_cast<Vertex>(target.find_next(w))) {
      if (w != a && ClosedNeighborhood(g_, w) == target) hits.push_back(w);
    }
    if (hits.size() > 1) return Fail(step, "twins among role candidates", hits);
    if (!hits.empty()) *out = hits[0];
    return true;
  }

  bool Base(Vertex a0, Vertex b0) {
    const Rational m0 = r_[a0].left.value;
    const Rational m0p = r_[a0].right.value;
    AddRole(a0, RoleKind::kA, 0, Side::kBase);
    AddRole(b0, RoleKind::kB, 0, Side::kBase);
    zones_.push_back(m0);
    zones_.push_back(m0p);
    if (trace_) {
      trace_->zone_lines.push_back({m0, sweep_id_, Side::kBase});
      trace_->zone_lines.push_back({m0p, sweep_id_, Side::kBase});
    }

    // [0.2]
    std::vector<Vertex> left = Peekers(a0, b0, kNone, Peek::kLeft);
    std::vector<Vertex> right = Peekers(a0, b0, kNone, Peek::kRight);
    std::vector<Vertex> drop_left = left;
    drop_left.push_back(b0);
    Vertex c0 = kNone;
    Vertex d0 = kNone;
    if (!NeighbourhoodMatch("[0.2]", a0, left, &c0)) return false;
    if (!NeighbourhoodMatch("[0.2]", a0, right, &d0)) return false;
    if (c0 == b0) c0 = kNone;
    if (d0 == b0) d0 = kNone;
    AddRole(c0, RoleKind::kC, 0, Side::kBase);
    AddRole(d0, RoleKind::kD, 0, Side::kBase);

    // [0.3]
    Vertex a1 = kNone;
    Vertex c1 = kNone;
    Vertex a1p = kNone;
    Vertex d1p = kNone;
    std::vector<Vertex> lp = Peekers(a0, b0, c0, Peek::kLeft);
    if (lp.empty()) return Fail("[0.3]", "nothing peeks in from the left", {a0, b0});
    if (!OrderPeekers("[0.3]", lp, &a1, &c1)) return false;
    std::vector<Vertex> rp = Peekers(a0, b0, d0, Peek::kRight);
    if (rp.empty()) return Fail("[0.3]", "nothing peeks in from the right", {a0, b0});
    if (rp.size() > 2) return Fail("[0.3]", "three or more peekers", rp);
    // Mirror of the left rule: the peeker with the larger L is a_1'.
    if (rp.size() == 2) {
      const MixedInterval& x = r_[rp[0]];
      const MixedInterval& y = r_[rp[1]];
      if (x.left.value == y.left.value) {
        return Fail("[0.3]", "peekers share a left endpoint", rp);
      }
      if (Contains(x, y) || Contains(y, x)) {
        return Fail("[0.3]", "one peeker contains the other", rp);
      }
      a1p = y.left.value < x.left.value ? rp[0] : rp[1];
      d1p = a1p == rp[0] ? rp[1] : rp[0];
    } else {
      a1p = rp[0];
    }

    // [0.4]
    Vertex b1 = kNone;
    Vertex b1p = kNone;
    if (!StrictlyInside("[0.4]", a1, &b1)) return false;
    if (!StrictlyInside("[0.4]", a1p, &b1p)) return false;

    // [0.5]
    if (!Set("[0.5]", b0, m0, false, m0p, false, false, false, Dir::kLeftward,
             Dir::kRightward)) {
      return false;
    }
    auto white = [this](Vertex v) {
      return !r_[v].left.red() && !r_[v].right.red();
    };
    if (d0 != kNone && white(d0) &&
        !Set("[0.5]", d0, m0, true, m0p, false, true, true)) {
      return false;
    }
    if (c0 != kNone && white(c0) &&
        !Set("[0.5]", c0, m0, false, m0p, true, true, true)) {
      return false;
    }
    // [0.6]
    if (!Recolour("[0.6]", a0, true, true)) return false;
    if (!Recolour("[0.6]", b0, true, true)) return false;

    left_start_ = PartStart{a0, d0, m0, m0p, a1, c1, b1};
    right_start_ = PartStart{a0, c0, -m0p, -m0, a1p, d1p, b1p};
    return true;
  }

  // Left part in the current frame; the right part runs this on the mirror.
  bool Part(const PartStart& start) {
    const Side side = CurrentSide();
    Vertex a_prev = start.a_prev;
    Vertex d_prev = start.d_prev;
    Rational m_prev = start.m_prev;
    Rational m_prev2 = start.m_prev2;
    Vertex a = start.a;
    Vertex c = start.c;
    Vertex b = start.b;
    std::vector<Vertex> ds;        // d_k for k >= 1 (kNone if absent)
    std::vector<bool> peeks_next;  // d_k peeks into a_{k+1}b_{k+1} from the right

    for (int k = 1;; ++k) {
      if (k > n_ + 1) return Fail(Label(k, 1), "sweep part does not end", {a});
      AddRole(a, RoleKind::kA, k, side);
      AddRole(b, RoleKind::kB, k, side);
      AddRole(c, RoleKind::kC, k, side);

      // [k.1]
      const std::string s1 = Label(k, 1);
      if (!Set(s1, a, r_[a].left.value, true, m_prev, true, false, true,
               Dir::kAny, Dir::kLeftward)) {
        return false;
      }
      const bool left_red = r_[a].left.red();
      if (left_red && !RedBeforeLeft(a)) {
        return Fail(s1, "a vertex is reached twice in one sweep", {a});
      }
      if (c != kNone && left_red) {
        if (Role* role = FindRole(a, RoleKind::kA, k, side)) role->merging = true;
        if (Role* role = FindRole(c, RoleKind::kC, k, side)) role->merging = true;
        if (!Set(s1, c, r_[a].left.value, false, m_prev, true, true, true,
                 Dir::kLeftward, Dir::kLeftward, /*exempt_left=*/true)) {
          return false;
        }
        break;
      }
      if (b == kNone && c == kNone) {
        if (Role* role = FindRole(a, RoleKind::kA, k, side)) role->terminal = true;
        break;
      }

      // [k.2]
      const std::string s2 = Label(k, 2);
      if (!Recolour(s2, a, true, false)) return false;
      const Rational m_k = r_[a].left.value;
      AddZone(m_k, side);
      Vertex d = kNone;
      if (!NeighbourhoodMatch(s2, a, {a_prev, d_prev}, &d)) return false;
      AddRole(d, RoleKind::kD, k, side);
      ds.push_back(d);

      // [k.3]
      const std::string s3 = Label(k, 3);
      std::vector<Vertex> p = Peekers(a, b, c, Peek::kLeft);
      if (p.empty()) return Fail(s3, "nothing peeks in from the left", {a, b, c});
      Vertex a_next = kNone;
      Vertex c_next = kNone;
      Vertex b_next = kNone;
      if (!OrderPeekers(s3, p, &a_next, &c_next)) return false;
      if (!StrictlyInside(s3, a_next, &b_next)) return false;
      peeks_next.push_back(d != kNone && b_next != kNone && d != b_next &&
                           d != a_next &&
                           PeeksInto(r_[d], r_[a_next], r_[b_next]) ==
                               Peek::kRight);

      // [k.4]
      const std::string s4 = Label(k, 4);
      if (b != kNone && !Set(s4, b, m_k, false, m_prev, false, true, true,
                             Dir::kLeftward, Dir::kRightward)) {
        return false;
      }
      if (c != kNone && !Set(s4, c, m_k, false, m_prev, true, true, true,
                             Dir::kLeftward, Dir::kLeftward)) {
        return false;
      }

      // [k.5]
      const std::string s5 = Label(k, 5);
      if (d != kNone && !r_[d].left.red() && !r_[d].right.red()) {
        bool chain = d_prev == kNone ||
                     r_[d_prev].SameAs(
                         MixedInterval{{m_prev, true}, {m_prev2, false}});
        if (chain && !Set(s5, d, m_k, true, m_prev, false, true, true,
                          Dir::kRightward, Dir::kRightward)) {
          return false;
        }
      }

      a_prev = a;
      d_prev = d;
      m_prev2 = m_prev;
      m_prev = m_k;
      a = a_next;
      c = c_next;
      b = b_next;
    }

    // NTM-d flags, innermost first.
    bool next_ntm = false;
    for (int k = static_cast<int>(ds.size()); k >= 1; --k) {
      const Vertex d = ds[k - 1];
      bool ntm = d != kNone && (peeks_next[k - 1] || next_ntm);
      if (ntm) {
        ntm_.push_back(d);
        if (Role* role = FindRole(d, RoleKind::kD, k, side)) role->ntm = true;
      }
      next_ntm = ntm;
    }
    return true;
  }

  bool AuditZoneLines() {
    for (const Reddened& e : reddened_) {
      if (e.exempt) continue;
      if (std::find(zones_.begin(), zones_.end(), e.value) == zones_.end()) {
        return Fail("[audit]",
                    "endpoint of " + g_.label(e.v) + " turned red off the zone lines",
                    {e.v});
      }
    }
    return true;
  }

  bool AuditNtm() {
    for (Vertex d : ntm_) {
      if (red_before_left_[d] || red_before_right_[d]) {
        return Fail("[audit]", "needs-to-move vertex " + g_.label(d) +
                                   " was already red",
                    {d});
      }
    }
    return true;
  }

  const Graph& g_;
  Representation& r_;
  const int n_;
  const int sweep_id_;
  const SweepOptions& options_;
  SweepTrace* trace_;
  std::int64_t* ops_;

  bool reflected_ = false;
  std::vector<bool> red_before_left_;
  std::vector<bool> red_before_right_;
  std::vector<Rational> zones_;
  std::vector<Reddened> reddened_;
  std::vector<Vertex> ntm_;
  PartStart left_start_;
  PartStart right_start_;
  std::optional<SweepFailure> failure_;
};

}  // namespace

std::optional<std::pair<Vertex, Vertex>> FindAbPair(const Graph& g,
                                                    const Representation& r) {
  return FindAbPairCounted(g, r, nullptr);
}

std::optional<SweepFailure> RunSweep(const Graph& g, Representation& r,
                                     int sweep_id, const SweepOptions& options,
                                     SweepTrace* trace, std::int64_t* operations) {
  if (static_cast<int>(r.size()) != g.size()) {
    throw std::invalid_argument("representation size does not match graph");
  }
  auto pair = FindAbPairCounted(g, r, operations);
  if (!pair) throw std::invalid_argument("representation is already strict");
  SweepRun run(g, r, sweep_id, options, trace, operations);
  return run.Run(pair->first, pair->second);
}

SweepResult SweepAll(const Graph& g, const Representation& initial,
                     const SweepOptions& options) {
  if (static_cast<int>(initial.size()) != g.size()) {
    throw std::invalid_argument("representation size does not match graph");
  }
  for (const auto& i : initial) {
    if (!i.left.closed || !i.right.closed || i.left.red() || i.right.red()) {
      throw std::invalid_argument("sweeps start from closed white intervals");
    }
  }
  SweepResult result;
  Representation r = initial;
  const int budget = CountStrictInclusions(initial);
  int strict_before = budget;
  for (int sweep_id = 1;; ++sweep_id) {
    if (options.audit) {
      for (Vertex v = 0; v < g.size(); ++v) {
        const Endpoint& l = r[v].left;
        const Endpoint& rr = r[v].right;
        if ((!l.red() && !l.SameAs(initial[v].left)) ||
            (!rr.red() && !rr.SameAs(initial[v].right))) {
          result.failure = SweepFailure{
              "[audit]", "white endpoint of " + g.label(v) + " left its place",
              {v}};
          break;
        }
      }
      if (result.failure) break;
    }
    auto pair = FindAbPairCounted(g, r, &result.operations);
    if (!pair) break;
    if (sweep_id > budget) {
      result.failure = SweepFailure{"[0.1]", "more sweeps than inclusions",
                                    {pair->first, pair->second}};
      break;
    }
    const Representation before = r;
    SweepTrace trace;
    trace.strict_before = strict_before;
    SweepRun run(g, r, sweep_id, options, &trace, &result.operations);
    result.failure = run.Run(pair->first, pair->second);
    if (!result.failure && options.audit) {
      for (Vertex v = 0; v < g.size() && !result.failure; ++v) {
        if ((before[v].left.red() && !before[v].left.SameAs(r[v].left)) ||
            (before[v].right.red() && !before[v].right.SameAs(r[v].right))) {
          result.failure = SweepFailure{
              "[audit]", "red endpoint of " + g.label(v) + " moved", {v}};
        }
      }
      if (!result.failure && !Verify(g, r)) {
        result.failure = SweepFailure{
            "[audit]", "sweep changed the represented graph",
            {pair->first, pair->second}};
      }
    }
    trace.strict_after = CountStrictInclusions(r);
    if (!result.failure && options.audit && trace.strict_after >= strict_before) {
      result.failure = SweepFailure{"[audit]", "sweep did not remove an inclusion",
                                    {pair->first, pair->second}};
    }
    strict_before = trace.strict_after;
    result.sweeps.push_back(std::move(trace));
    if (result.failure) break;
  }
  result.final = r;
  result.ok = !result.failure && Verify(g, r) && IsStrict(r);
  if (!result.ok && !result.failure) {
    result.failure = SweepFailure{"[final]",
                                  "result is not a strict representation", {}};
  }
  return result;
}

Representation Replay(const Representation& initial,
                      const std::vector<SweepTrace>& sweeps) {
  Representation r = initial;
  for (const auto& s : sweeps) {
    for (const auto& e : s.events) r.at(e.vertex) = e.to;
  }
  return r;
}

}  // namespace umix
