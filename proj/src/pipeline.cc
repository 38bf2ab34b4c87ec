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

#include "umix/pipeline.h"

#include <stdexcept>

namespace umix {

Representation RestoreTwins(const TwinReduction& t, const Representation& reduced) {
  if (reduced.size() != t.classes.size()) {
    throw std::invalid_argument("representation does not match the reduction");
  }
  Representation out(t.class_of.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = reduced[t.class_of[v]];
  return out;
}

Analysis Analyze(const Graph& g, bool want_unit, const SweepOptions& options) {
  Analysis a;
  a.twins = ReduceTwins(g);
  const Graph& h = a.twins.reduced;
  a.ordering = RecognizeInterval(h);
  if (!a.ordering) return a;
  a.initial = InitialRepresentation(h, *a.ordering);
  a.sweep = SweepAll(h, a.initial, options);
  if (!a.sweep->ok) {
    a.verdict = Verdict::kNo;
    auto cert = FindForbidden(h);
    if (!cert) {
      throw std::logic_error("sweep failed but no forbidden subgraph was found");
    }
    for (Vertex& v : cert->embedding) v = a.twins.classes[v].front();
    if (!ValidateCertificate(g, *cert)) {
      throw std::logic_error("forbidden certificate does not embed");
    }
    a.certificate = std::move(cert);
    return a;
  }
  a.verdict = Verdict::kYes;
  a.strict = RestoreTwins(a.twins, a.sweep->final);
  if (!Verify(g, *a.strict) || !IsStrict(*a.strict)) {
    throw std::logic_error("restored representation fails verification");
  }
  if (want_unit) {
    a.unit = RestoreTwins(a.twins, ToUnit(h, a.sweep->final));
    if (!Verify(g, *a.unit) || !IsUnit(*a.unit) || !IsStrict(*a.unit)) {
      throw std::logic_error("unit representation fails verification");
    }
  }
  return a;
}

}  // namespace umix
