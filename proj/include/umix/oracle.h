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

#ifndef UMIX_ORACLE_H_
#define UMIX_ORACLE_H_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umix/forbidden.h"
#include "umix/graph.h"
#include "umix/interval.h"

namespace umix {

inline constexpr int kMaxEnumeration = 8;
inline constexpr int kMaxOracle = 5;

// One graph per isomorphism class on n vertices, 1 <= n <= 8, ordered by
// canonical form. Each graph is the canonical relabelling of its class.
std::vector<Graph> EnumerateGraphs(int n);

// Exhaustive search for a strict mixed representation with nondegenerate
// intervals: every weak order of the 2n endpoints with L(v) < R(v), times
// every open/closed choice, realized on consecutive integers. Returns the
// first hit in search order. Throws std::invalid_argument for n > 5.
std::optional<Representation> BruteStrictMixed(const Graph& g);

struct CensusRow {
  std::string canonical;  // graph6 of the canonical form
  int n = 0;
  bool is_interval = false;
  bool is_twin_free = false;
  std::optional<bool> sweep_ok;
  std::optional<ForbiddenId> forbidden;
  std::optional<bool> oracle_ok;
  // Not part of the CSV.
  std::optional<bool> hypothesis_ok;
};

struct CensusViolation {
  std::string canonical;
  std::string what;
};

struct CensusOptions {
  int n_max = 5;
  int oracle_max = kMaxOracle;
  int threads = 1;
  // Rows are appended here as they complete. With `resume`, rows already in
  // the file are kept and their graphs skipped.
  std::optional<std::string> csv_path;
  bool resume = false;
  // Classify these graphs instead of enumerating (e.g. read from graph6).
  std::optional<std::vector<Graph>> graphs;
  // Called after each row in enumeration order.
  std::function<void(const CensusRow&)> on_row;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  std::vector<CensusViolation> violations;
};

// Thrown by RequireNoViolations.
class EquivalenceViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classifies one graph. Violations of the equivalences, and any emitted
// representation failing its checks, are appended to `violations`.
CensusRow ClassifyGraph(const Graph& g, int oracle_max,
                        std::vector<CensusViolation>* violations);

CensusReport Census(const CensusOptions& options);

// Throws EquivalenceViolation naming the offending graphs, if any.
void RequireNoViolations(const CensusReport& report);

std::string CensusCsvHeader();
std::string ToCsv(const CensusRow& row);
// Throws std::invalid_argument on a malformed line.
CensusRow ParseCsvRow(const std::string& line);

}  // namespace umix

#endif  // UMIX_ORACLE_H_
