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

#ifndef UMIX_SWEEP_H_
#define UMIX_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umix/graph.h"
#include "umix/interval.h"

namespace umix {

enum class RoleKind { kA, kB, kC, kD };
enum class Side { kBase, kLeft, kRight };

const char* ToString(RoleKind k);
const char* ToString(Side s);

struct Role {
  RoleKind kind = RoleKind::kA;
  int index = 0;
  Side side = Side::kBase;
  bool terminal = false;
  bool merging = false;
  bool ntm = false;

  // e.g. "a_3", "d_2'", "c_0".
  std::string Name() const;
};

struct ZoneLine {
  Rational position;
  int sweep_id = 0;
  Side side = Side::kBase;
};

// One endpoint or colour change, in real coordinates.
struct TraceEvent {
  std::string step;  // "[0.5]", "[3.4]", "[2.1']", ...
  int sweep_id = 0;
  Vertex vertex = 0;
  MixedInterval from;
  MixedInterval to;
  bool left_reddened = false;
  bool right_reddened = false;
};

struct SweepTrace {
  int sweep_id = 0;
  Vertex a0 = 0;
  Vertex b0 = 0;
  std::vector<std::pair<Vertex, Role>> roles;
  std::vector<ZoneLine> zone_lines;
  std::vector<TraceEvent> events;
  int strict_before = 0;
  int strict_after = 0;
};

// Why a sweep could not proceed. On an F-free twin-free input this never
// happens; otherwise the witnesses are the vertices that broke the rule.
struct SweepFailure {
  std::string step;
  std::string reason;
  std::vector<Vertex> witnesses;
};

struct SweepOptions {
  // Runtime checks of the algorithm's invariants after each step and sweep.
  // They are never counted in `operations`.
  bool audit = true;
  bool record_events = true;
};

struct SweepResult {
  bool ok = false;
  Representation final;
  std::vector<SweepTrace> sweeps;
  std::optional<SweepFailure> failure;
  // Elementary operations of the algorithm proper: endpoint visits during
  // pair search, vertices examined during role identification, and endpoint
  // writes.
  std::int64_t operations = 0;
};

// Deterministic ab-pair: the containing interval with leftmost L(a), then
// smaller R(a), then smaller label; b is chosen the same way among the
// intervals strictly inside I(a). nullopt iff r is strict.
std::optional<std::pair<Vertex, Vertex>> FindAbPair(const Graph& g,
                                                    const Representation& r);

// One complete sweep starting from FindAbPair(g, r). r is updated in place;
// on failure it holds the partial state. Returns nullopt on success.
std::optional<SweepFailure> RunSweep(const Graph& g, Representation& r,
                                     int sweep_id, const SweepOptions& options,
                                     SweepTrace* trace,
                                     std::int64_t* operations = nullptr);

// Sweeps until the representation is strict. `initial` must be all closed
// with white endpoints (std::invalid_argument otherwise). The result is ok
// only if the final representation represents g and is strict.
SweepResult SweepAll(const Graph& g, const Representation& initial,
                     const SweepOptions& options = {});

// Replays trace events over `initial` (colours included).
Representation Replay(const Representation& initial,
                      const std::vector<SweepTrace>& sweeps);

}  // namespace umix

#endif  // UMIX_SWEEP_H_
