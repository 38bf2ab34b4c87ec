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

#include "umix/io.h"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace umix {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Lines with comments stripped and surrounding whitespace trimmed; empty
// lines are dropped. Each entry keeps its 1-based line number.
std::vector<std::pair<int, std::string>> MeaningfulLines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(number, std::string(line.substr(first, last - first + 1)));
  }
  return out;
}

std::vector<std::string> Fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

bool ParseInt(const std::string& s, long long* value) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, *value);
  return ec == std::errc() && ptr == end;
}

bool LooksLikeEdgeHeader(const std::string& line) {
  const auto f = Fields(line);
  long long a = 0;
  long long b = 0;
  return f.size() == 2 && ParseInt(f[0], &a) && ParseInt(f[1], &b);
}

ParseError LineError(int line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  const auto lines = MeaningfulLines(text);
  if (lines.empty()) throw ParseError("empty graph text");
  const auto header = Fields(lines[0].second);
  long long n = 0;
  long long m = 0;
  if (header.size() != 2 || !ParseInt(header[0], &n) || !ParseInt(header[1], &m) ||
      n < 0 || m < 0) {
    throw LineError(lines[0].first, "expected header \"n m\"");
  }
  if (n > 1'000'000) throw LineError(lines[0].first, "too many vertices");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto f = Fields(line);
    long long u = 0;
    long long v = 0;
    if (f.size() != 2 || !ParseInt(f[0], &u) || !ParseInt(f[1], &v)) {
      throw LineError(number, "expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw LineError(number, "vertex out of range");
    }
    if (u == v) throw LineError(number, "loop");
    if (g.Adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw LineError(number, "repeated edge");
    }
    g.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.Edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

std::vector<Graph> ParseGraph6Lines(std::string_view text) {
  std::vector<Graph> out;
  for (const auto& [number, line] : MeaningfulLines(text)) {
    try {
      out.push_back(FromGraph6(line));
    } catch (const std::invalid_argument& e) {
      throw LineError(number, e.what());
    }
  }
  return out;
}

std::vector<Graph> ParseGraphs(std::string_view text) {
  const auto lines = MeaningfulLines(text);
  if (lines.empty()) throw ParseError("empty graph text");
  if (LooksLikeEdgeHeader(lines[0].second)) return {ParseEdgeList(text)};
  return ParseGraph6Lines(text);
}

Graph ParseGraph(std::string_view text) {
  auto graphs = ParseGraphs(text);
  if (graphs.size() != 1) {
    throw ParseError("expected one graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs[0]);
}

ordered_json IntervalToJson(const MixedInterval& i) {
  ordered_json j;
  j["l"] = i.left.value.ToString();
  j["lc"] = i.left.closed;
  j["r"] = i.right.value.ToString();
  j["rc"] = i.right.closed;
  return j;
}

namespace {

Rational RationalField(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const json& f = j.at(key);
  if (f.is_number_integer()) return Rational(f.get<std::int64_t>());
  if (!f.is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be a rational string");
  }
  try {
    return Rational::Parse(f.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational in \"") + key + "\": " + e.what());
  }
}

bool BoolField(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_boolean()) {
    throw ParseError(std::string("\"") + key + "\" must be a boolean");
  }
  return j.at(key).get<bool>();
}

}  // namespace

MixedInterval IntervalFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("interval must be an object");
  try {
    return MixedInterval::Make(RationalField(j, "l"), BoolField(j, "lc"),
                               RationalField(j, "r"), BoolField(j, "rc"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad interval: ") + e.what());
  }
}

ordered_json RepresentationToJson(const Graph& g, const Representation& r) {
  if (static_cast<int>(r.size()) != g.size()) {
    throw std::invalid_argument("representation size does not match graph");
  }
  ordered_json out = ordered_json::array();
  for (Vertex v = 0; v < g.size(); ++v) {
    ordered_json item;
    item["v"] = g.label(v);
    item["l"] = r[v].left.value.ToString();
    item["lc"] = r[v].left.closed;
    item["r"] = r[v].right.value.ToString();
    item["rc"] = r[v].right.closed;
    out.push_back(std::move(item));
  }
  return out;
}

LabelledRepresentation RepresentationFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("representation must be a JSON array");
  LabelledRepresentation out;
  std::set<std::string> seen;
  for (const json& item : j) {
    if (!item.is_object() || !item.contains("v")) {
      throw ParseError("each interval needs a \"v\" label");
    }
    const json& v = item.at("v");
    std::string label;
    if (v.is_string()) {
      label = v.get<std::string>();
    } else if (v.is_number_integer()) {
      label = std::to_string(v.get<std::int64_t>());
    } else {
      throw ParseError("\"v\" must be a string or integer");
    }
    if (!seen.insert(label).second) throw ParseError("duplicate label " + label);
    out.labels.push_back(label);
    out.intervals.push_back(IntervalFromJson(item));
  }
  return out;
}

Representation AlignToGraph(const Graph& g, const LabelledRepresentation& r) {
  if (static_cast<int>(r.labels.size()) != g.size()) {
    throw ParseError("representation has " + std::to_string(r.labels.size()) +
                     " intervals for " + std::to_string(g.size()) + " vertices");
  }
  Representation out(g.size());
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    const auto v = g.Find(r.labels[i]);
    if (!v) throw ParseError("unknown vertex " + r.labels[i]);
    out[*v] = r.intervals[i];
  }
  return out;
}

std::string TraceToJsonLines(const Graph& g, const std::vector<SweepTrace>& sweeps) {
  std::string out;
  for (const SweepTrace& s : sweeps) {
    for (const TraceEvent& e : s.events) {
      ordered_json j;
      j["step"] = e.step;
      j["sweep"] = e.sweep_id;
      j["v"] = g.label(e.vertex);
      j["from"] = IntervalToJson(e.from);
      j["to"] = IntervalToJson(e.to);
      ordered_json red = ordered_json::array();
      if (e.left_reddened) red.push_back("L");
      if (e.right_reddened) red.push_back("R");
      j["reddened"] = std::move(red);
      out += j.dump();
      out += '\n';
    }
  }
  return out;
}

ordered_json CertificateToJson(const Graph& g, const ForbiddenCertificate& c) {
  const Graph pattern = Generate(c.id);
  ordered_json j;
  j["family"] = std::string(FamilyName(c.id.family));
  if (!c.id.IsFinite()) j["k"] = c.id.k;
  if (c.id.family == Family::kFam5) j["n"] = c.id.n;
  ordered_json embedding = ordered_json::object();
  for (Vertex t = 0; t < pattern.size(); ++t) {
    embedding[pattern.label(t)] = g.label(c.embedding.at(t));
  }
  j["embedding"] = std::move(embedding);
  return j;
}

ForbiddenCertificate CertificateFromJson(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string() ||
      !j.contains("embedding") || !j.at("embedding").is_object()) {
    throw ParseError("certificate needs \"family\" and \"embedding\"");
  }
  ForbiddenCertificate c;
  try {
    c.id.family = ParseFamily(j.at("family").get<std::string>());
    if (j.contains("k")) c.id.k = j.at("k").get<int>();
    if (j.contains("n")) c.id.n = j.at("n").get<int>();
    c.id.Validate();
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad certificate id: ") + e.what());
  }
  const Graph pattern = Generate(c.id);
  c.embedding.assign(pattern.size(), -1);
  for (const auto& [tmpl, host] : j.at("embedding").items()) {
    const auto t = pattern.Find(tmpl);
    if (!t) throw ParseError("unknown template vertex " + tmpl);
    if (!host.is_string()) throw ParseError("host labels must be strings");
    const auto h = g.Find(host.get<std::string>());
    if (!h) throw ParseError("unknown host vertex " + host.get<std::string>());
    c.embedding[*t] = *h;
  }
  for (Vertex h : c.embedding) {
    if (h < 0) throw ParseError("embedding does not cover the template");
  }
  return c;
}

}  // namespace umix
