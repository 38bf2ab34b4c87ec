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

#include "umix/oracle.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "umix/recognition.h"
#include "umix/sweep.h"

namespace umix {

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Graph> EnumerateGraphs(int n) {
  if (n < 1 || n > kMaxEnumeration) {
    throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumeration));
  }
  static std::mutex mu;
  static std::map<int, std::vector<std::string>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (memo.empty()) memo[1] = {CanonicalForm(Graph(1))};
  for (int m = 2; m <= n; ++m) {
    if (memo.count(m)) continue;
    std::set<std::string> next;
    for (const std::string& code : memo[m - 1]) {
      const Graph base = FromGraph6(code);
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        Graph g(m);
        for (const auto& [u, v] : base.Edges()) g.AddEdge(u, v);
        for (int u = 0; u < m - 1; ++u) {
          if (mask & (1u << u)) g.AddEdge(u, m - 1);
        }
        next.insert(CanonicalForm(g));
      }
    }
    memo[m].assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(memo[n].size());
  for (const std::string& code : memo[n]) out.push_back(FromGraph6(code));
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

class BruteSearch {
 public:
  explicit BruteSearch(const Graph& g)
      : g_(g), n_(g.size()), level_(2 * n_, -1), closed_(2 * n_, true) {}

  std::optional<Representation> Run() {
    if (n_ == 0) return Representation{};
    if (Extend(0)) return found_;
    return std::nullopt;
  }

 private:
  static int L(Vertex v) { return 2 * v; }
  static int R(Vertex v) { return 2 * v + 1; }

  MixedInterval Interval(Vertex v) const {
    return MixedInterval::Make(level_[L(v)], closed_[L(v)], level_[R(v)],
                               closed_[R(v)]);
  }

  bool Complete(Vertex v) const { return level_[R(v)] >= 0; }

  // False if the partial placement already rules out every completion.
  bool Consistent() const {
    for (Vertex u = 0; u < n_; ++u) {
      if (!Complete(u)) continue;
      for (Vertex v = 0; v < n_; ++v) {
        if (v == u) continue;
        if (Complete(v)) {
          if (v < u) continue;
          const MixedInterval a = Interval(u);
          const MixedInterval b = Interval(v);
          if (Intersects(a, b) != g_.Adjacent(u, v)) return false;
          if (StrictlyContains(a, b) || StrictlyContains(b, a)) return false;
          continue;
        }
        // v ends strictly after u.
        if (level_[L(v)] < 0) {
          if (g_.Adjacent(u, v)) return false;
          continue;
        }
        const int lu = level_[L(u)];
        const int lv = level_[L(v)];
        if (lv < lu || (lv == lu && (closed_[L(v)] || !closed_[L(u)]))) {
          return false;  // I(u) would sit strictly inside I(v)
        }
      }
    }
    return true;
  }

  bool Extend(int level) {
    std::vector<int> avail;
    bool done = true;
    for (Vertex v = 0; v < n_; ++v) {
      if (level_[L(v)] < 0) {
        avail.push_back(L(v));
        done = false;
      } else if (level_[R(v)] < 0) {
        avail.push_back(R(v));
        done = false;
      }
    }
    if (done) {
      Representation r(n_);
      for (Vertex v = 0; v < n_; ++v) r[v] = Interval(v);
      if (Verify(g_, r) && IsStrict(r)) {
        found_ = std::move(r);
        return true;
      }
      return false;
    }
    const unsigned k = static_cast<unsigned>(avail.size());
    for (unsigned subset = 1; subset < (1u << k); ++subset) {
      std::vector<int> chosen;
      for (unsigned i = 0; i < k; ++i) {
        if (subset & (1u << i)) chosen.push_back(avail[i]);
      }
      for (int s : chosen) level_[s] = level;
      for (unsigned flags = 0; flags < (1u << chosen.size()); ++flags) {
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          closed_[chosen[i]] = !(flags & (1u << i));
        }
        if (Consistent() && Extend(level + 1)) return true;
      }
      for (int s : chosen) {
        level_[s] = -1;
        closed_[s] = true;
      }
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  std::vector<int> level_;
  std::vector<bool> closed_;
  Representation found_;
};

}  // namespace

std::optional<Representation> BruteStrictMixed(const Graph& g) {
  if (g.size() > kMaxOracle) {
    throw std::invalid_argument("brute-force oracle limited to " +
                                std::to_string(kMaxOracle) + " vertices");
  }
  return BruteSearch(g).Run();
}

// ---------------------------------------------------------------------------
// Census

CensusRow ClassifyGraph(const Graph& g, int oracle_max,
                        std::vector<CensusViolation>* violations) {
  CensusRow row;
  row.canonical = CanonicalForm(g, std::max(g.size(), kDefaultEnumerationBound));
  row.n = g.size();
  auto note = [&](std::string what) {
    if (violations) violations->push_back({row.canonical, std::move(what)});
  };
  const auto ordering = RecognizeInterval(g);
  row.is_interval = ordering.has_value();
  row.is_twin_free = IsTwinFree(g);
  if (!row.is_interval || !row.is_twin_free) return row;

  const Representation initial = InitialRepresentation(g, *ordering);
  row.hypothesis_ok = CheckHypothesis(g, initial);
  if (!*row.hypothesis_ok) note("initial representation fails the hypothesis");

  const SweepResult sweep = SweepAll(g, initial);
  row.sweep_ok = sweep.ok;
  if (auto cert = FindForbidden(g)) {
    row.forbidden = cert->id;
    if (!ValidateCertificate(g, *cert)) note("invalid forbidden certificate");
  }
  if (row.n <= oracle_max) row.oracle_ok = BruteStrictMixed(g).has_value();

  if (*row.sweep_ok == row.forbidden.has_value()) {
    note(*row.sweep_ok ? "sweep succeeded on a graph containing " +
                             row.forbidden->ToString()
                       : "sweep failed on an F-free graph: " +
                             (sweep.failure ? sweep.failure->step + " " +
                                                  sweep.failure->reason
                                            : std::string("?")));
  }
  if (row.oracle_ok && *row.oracle_ok != *row.sweep_ok) {
    note("oracle disagrees with sweep");
  }
  if (*row.sweep_ok) {
    if (!Verify(g, sweep.final) || !IsStrict(sweep.final)) {
      note("emitted representation is not strict");
    } else {
      try {
        const Representation unit = ToUnit(g, sweep.final);
        if (!IsUnit(unit) || !Verify(g, unit) ||
            !PreservesTouching(sweep.final, unit)) {
          note("unit conversion failed its checks");
        }
      } catch (const std::exception& e) {
        note(std::string("unit conversion threw: ") + e.what());
      }
    }
  }
  return row;
}

namespace {

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string OptBool(const std::optional<bool>& b) {
  return b ? Bool(*b) : std::string();
}

std::optional<bool> ParseOptBool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("bad boolean '" + s + "' in census row");
}

}  // namespace

std::string CensusCsvHeader() {
  return "canonical,n,is_interval,is_twin_free,sweep_ok,forbidden_id,oracle_ok";
}

// graph6 uses characters 63..126, which include neither ',' nor '"'; the
// forbidden id may contain a comma and is quoted.
std::string ToCsv(const CensusRow& row) {
  std::ostringstream out;
  out << row.canonical << ',' << row.n << ',' << Bool(row.is_interval) << ','
      << Bool(row.is_twin_free) << ',' << OptBool(row.sweep_ok) << ',';
  if (row.forbidden) out << '"' << row.forbidden->ToString() << '"';
  out << ',' << OptBool(row.oracle_ok);
  return out.str();
}

CensusRow ParseCsvRow(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  if (fields.size() != 7 || quoted) {
    throw std::invalid_argument("census row needs 7 fields: " + line);
  }
  CensusRow row;
  row.canonical = fields[0];
  try {
    row.n = std::stoi(fields[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad vertex count in census row: " + line);
  }
  row.is_interval = ParseOptBool(fields[2]).value_or(false);
  row.is_twin_free = ParseOptBool(fields[3]).value_or(false);
  row.sweep_ok = ParseOptBool(fields[4]);
  if (!fields[5].empty()) row.forbidden = ParseForbiddenId(fields[5]);
  row.oracle_ok = ParseOptBool(fields[6]);
  return row;
}

CensusReport Census(const CensusOptions& options) {
  if (options.n_max < 1 || options.n_max > kMaxEnumeration) {
    throw std::invalid_argument("census supports 1 <= n_max <= " +
                                std::to_string(kMaxEnumeration));
  }
  if (options.oracle_max < 0 || options.oracle_max > kMaxOracle) {
    throw std::invalid_argument("oracle bound must be at most " +
                                std::to_string(kMaxOracle));
  }
  std::vector<Graph> graphs;
  if (options.graphs) {
    graphs = *options.graphs;
  } else {
    for (int n = 1; n <= options.n_max; ++n) {
      for (Graph& g : EnumerateGraphs(n)) graphs.push_back(std::move(g));
    }
  }

  // Rows from an earlier run, keyed by canonical form.
  std::map<std::string, CensusRow> done;
  if (options.csv_path && options.resume) {
    std::ifstream in(*options.csv_path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (first) {
        first = false;
        if (line == CensusCsvHeader()) continue;
      }
      if (line.empty()) continue;
      CensusRow row = ParseCsvRow(line);
      done.emplace(row.canonical, std::move(row));
    }
  }
  std::ofstream csv;
  if (options.csv_path) {
    const bool append = options.resume && !done.empty();
    csv.open(*options.csv_path, append ? std::ios::app : std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot write " + *options.csv_path);
    if (!append) csv << CensusCsvHeader() << '\n' << std::flush;
  }

  const std::size_t total = graphs.size();
  std::vector<std::optional<CensusRow>> rows(total);
  std::vector<std::vector<CensusViolation>> found(total);
  std::vector<bool> fresh(total, false);
  std::mutex mu;
  std::size_t next_to_write = 0;
  std::exception_ptr error;

  // Emits the completed prefix in enumeration order.
  auto flush = [&]() {
    while (next_to_write < total && rows[next_to_write]) {
      const CensusRow& row = *rows[next_to_write];
      if (csv.is_open() && fresh[next_to_write]) csv << ToCsv(row) << '\n' << std::flush;
      if (options.on_row) options.on_row(row);
      ++next_to_write;
    }
  };

  std::atomic<std::size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= total) return;
      try {
        const Graph& g = graphs[i];
        const std::string key =
            CanonicalForm(g, std::max(g.size(), kDefaultEnumerationBound));
        std::vector<CensusViolation> v;
        CensusRow row;
        bool is_fresh = false;
        if (auto it = done.find(key); it != done.end()) {
          row = it->second;
        } else {
          row = ClassifyGraph(g, options.oracle_max, &v);
          is_fresh = true;
        }
        std::lock_guard<std::mutex> lock(mu);
        found[i] = std::move(v);
        fresh[i] = is_fresh;
        rows[i] = std::move(row);
        flush();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        cursor = total;
        return;
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CensusReport report;
  report.rows.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    report.rows.push_back(std::move(*rows[i]));
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
  // Resumed rows are re-checked from their stored fields.
  for (std::size_t i = 0; i < total; ++i) {
    const CensusRow& row = report.rows[i];
    if (fresh[i] || !row.sweep_ok) continue;
    if (*row.sweep_ok == row.forbidden.has_value() ||
        (row.oracle_ok && *row.oracle_ok != *row.sweep_ok)) {
      report.violations.push_back({row.canonical, "stored row violates equivalence"});
    }
  }
  return report;
}

void RequireNoViolations(const CensusReport& report) {
  if (report.violations.empty()) return;
  std::string msg = std::to_string(report.violations.size()) +
                    " equivalence violation(s):";
  for (const auto& v : report.violations) {
    msg += "\n  " + v.canonical + ": " + v.what;
  }
  throw EquivalenceViolation(msg);
}

}  // namespace umix
