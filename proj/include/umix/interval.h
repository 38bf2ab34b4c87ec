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

#ifndef UMIX_INTERVAL_H_
#define UMIX_INTERVAL_H_

#include <string>
#include <vector>

#include "umix/graph.h"
#include "umix/rational.h"

namespace umix {

// Sweep bookkeeping only; intersection semantics never look at colour.
enum class Colour { kWhite, kRed };

struct Endpoint {
  Rational value;
  bool closed = true;
  Colour colour = Colour::kWhite;

  bool red() const { return colour == Colour::kRed; }
  // Position and closedness; colour is ignored.
  bool SameAs(const Endpoint& other) const {
    return value == other.value && closed == other.closed;
  }
};

// A real interval that may be open or closed at each end. left.value <=
// right.value, and a zero-length interval must be closed at both ends.
struct MixedInterval {
  Endpoint left;
  Endpoint right;

  static MixedInterval Make(Rational l, bool left_closed, Rational r,
                            bool right_closed);
  static MixedInterval Closed(Rational l, Rational r) {
    return Make(l, true, r, true);
  }

  bool IsDegenerate() const { return left.value == right.value; }
  Rational Length() const { return right.value - left.value; }
  // Same point set (colour ignored).
  bool SameAs(const MixedInterval& other) const {
    return left.SameAs(other.left) && right.SameAs(other.right);
  }
  bool SameEndpointValues(const MixedInterval& other) const {
    return left.value == other.left.value && right.value == other.right.value;
  }
  // Throws std::invalid_argument when the invariants above fail.
  void Validate() const;
  // e.g. "(3/4,9/4]".
  std::string ToString() const;
};

// Interval of each vertex, indexed by the vertex id of the graph it is used
// with.
using Representation = std::vector<MixedInterval>;

bool Intersects(const MixedInterval& a, const MixedInterval& b);
// Point-set inclusion inner ⊆ outer.
bool Contains(const MixedInterval& outer, const MixedInterval& inner);
// inner ⊆ outer and the two do not have identical endpoint values.
bool StrictlyContains(const MixedInterval& outer, const MixedInterval& inner);

// True iff uv ∈ E ⇔ I(u) ∩ I(v) ≠ ∅ for every pair of distinct vertices.
// Throws std::invalid_argument if r does not cover exactly V(g).
bool Verify(const Graph& g, const Representation& r);

int CountStrictInclusions(const Representation& r);
bool IsStrict(const Representation& r);
// All lengths equal and positive. The empty representation is unit.
bool IsUnit(const Representation& r);

// All-closed representation of the same graph: each vertex gets the hull of
// one chosen point per incident edge. Vertices without neighbours become a
// point interval at their old left endpoint, or past every other interval if
// that point is taken. Throws std::invalid_argument if r does not represent g.
Representation MixedToClosed(const Graph& g, const Representation& r);

// Unit mixed representation of g from a strict one. Closures are
// deduplicated, placed as unit intervals by a difference-constraint system
// that keeps the sign of every R(u) - L(v), and each vertex then gets its own
// open/closed flags back. Throws std::invalid_argument if r is not a strict
// representation of g and std::logic_error if an internal check fails.
Representation ToUnit(const Graph& g, const Representation& r);

// R(u) = L(v) ⇔ R'(u) = L'(v) over the deduplicated closures of `before`,
// with each class's image taken from `after` (same vertex indexing).
bool PreservesTouching(const Representation& before,
                       const Representation& after);

enum class Peek { kNo, kLeft, kRight, kOther };
const char* ToString(Peek p);

// Whether I(x) peeks into the pair ab, and from which side. Throws
// std::invalid_argument unless x, a, b are distinct.
Peek PeeksInto(const Representation& r, Vertex x, Vertex a, Vertex b);
Peek PeeksInto(const MixedInterval& x, const MixedInterval& a,
               const MixedInterval& b);

}  // namespace umix

#endif  // UMIX_INTERVAL_H_
