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

// Text formats: edge lists, graph6, and the JSON documents exchanged by the
// command-line tool.

#ifndef UMIX_IO_H_
#define UMIX_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "umix/forbidden.h"
#include "umix/graph.h"
#include "umix/interval.h"
#include "umix/sweep.h"

namespace umix {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n m", then m lines "u v" with 0-based integer labels. '#' starts a
// comment. Loops, repeated edges and out-of-range labels are rejected.
Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

// One graph6 string per non-empty line.
std::vector<Graph> ParseGraph6Lines(std::string_view text);

// Edge list when the first meaningful line is two integers, graph6
// otherwise. Exactly one graph is expected.
Graph ParseGraph(std::string_view text);

// Graph text or graph6, possibly several graphs (graph6 only).
std::vector<Graph> ParseGraphs(std::string_view text);

// {"l": "p/q", "lc": bool, "r": "p/q", "rc": bool}
nlohmann::ordered_json IntervalToJson(const MixedInterval& i);
MixedInterval IntervalFromJson(const nlohmann::json& j);

// Array of {"v": label, "l", "lc", "r", "rc"} in vertex order.
nlohmann::ordered_json RepresentationToJson(const Graph& g,
                                            const Representation& r);

struct LabelledRepresentation {
  std::vector<std::string> labels;
  Representation intervals;
};

// Throws ParseError on anything malformed.
LabelledRepresentation RepresentationFromJson(const nlohmann::json& j);

// Reorders a labelled representation to match g's vertex ids. Throws
// ParseError unless the labels are exactly those of g.
Representation AlignToGraph(const Graph& g, const LabelledRepresentation& r);

// One line per event:
// {"step","sweep","v","from","to","reddened":["L","R"]}.
std::string TraceToJsonLines(const Graph& g,
                             const std::vector<SweepTrace>& sweeps);

// {"family","k"[,"n"],"embedding":{template label: host label}}; k is
// omitted for the finite graphs and n for everything but Fam5.
nlohmann::ordered_json CertificateToJson(const Graph& g,
                                         const ForbiddenCertificate& c);
ForbiddenCertificate CertificateFromJson(const Graph& g,
                                         const nlohmann::json& j);

}  // namespace umix

#endif  // UMIX_IO_H_
