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

// End-to-end decision and construction: reduce twins, recognize, sweep,
// restore twins.

#ifndef UMIX_PIPELINE_H_
#define UMIX_PIPELINE_H_

#include <optional>

#include "umix/forbidden.h"
#include "umix/graph.h"
#include "umix/interval.h"
#include "umix/recognition.h"
#include "umix/sweep.h"

namespace umix {

enum class Verdict { kNotInterval, kYes, kNo };

struct Analysis {
  Verdict verdict = Verdict::kNotInterval;
  TwinReduction twins;
  // Everything below refers to twins.reduced unless noted.
  std::optional<CliqueOrdering> ordering;
  Representation initial;
  std::optional<SweepResult> sweep;
  // Host vertices are ids of the original graph.
  std::optional<ForbiddenCertificate> certificate;
  // Original graph, twins restored. Present iff verdict is kYes.
  std::optional<Representation> strict;
  // Present iff verdict is kYes and a unit representation was requested.
  std::optional<Representation> unit;
};

// Every twin receives the interval of its class representative.
Representation RestoreTwins(const TwinReduction& t, const Representation& reduced);

// Runs the whole pipeline on g. Emitted representations are verified
// against g; a failed check throws std::logic_error.
Analysis Analyze(const Graph& g, bool want_unit = false,
                 const SweepOptions& options = {});

}  // namespace umix

#endif  // UMIX_PIPELINE_H_
