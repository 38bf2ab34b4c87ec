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

// umix: recognize unit mixed interval graphs and build their representations.
//
// Exit codes: 0 yes / success, 1 no / check failed, 2 not an interval graph,
// 64 usage or graph parse error, 65 invalid JSON, 70 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "umix/forbidden.h"
#include "umix/io.h"
#include "umix/oracle.h"
#include "umix/pipeline.h"
#include "umix/plot.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitNotInterval = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadJson = 65;
constexpr int kExitInternal = 70;

using umix::Graph;

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw umix::ParseError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Writes to `path`, or stdout for "-" or empty.
void WriteAll(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph ReadGraph(const std::string& path, const std::string& format) {
  const std::string text = ReadAll(path);
  if (format == "edges") return umix::ParseEdgeList(text);
  if (format == "graph6") {
    auto graphs = umix::ParseGraph6Lines(text);
    if (graphs.size() != 1) throw umix::ParseError("expected one graph6 line");
    return std::move(graphs[0]);
  }
  return umix::ParseGraph(text);
}

nlohmann::json ReadJson(const std::string& path) {
  const std::string text = ReadAll(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
}

std::string TwinClasses(const Graph& g, const umix::TwinReduction& t) {
  std::string out;
  for (const auto& cls : t.classes) {
    if (cls.size() < 2) continue;
    if (!out.empty()) out += ',';
    out += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ',';
      out += g.label(cls[i]);
    }
    out += '}';
  }
  return out;
}

int Recognize(const std::string& input, const std::string& format) {
  const Graph g = ReadGraph(input, format);
  const umix::Analysis a = umix::Analyze(g);
  if (a.twins.HasTwins()) std::cout << "has-twins:" << TwinClasses(g, a.twins) << '\n';
  switch (a.verdict) {
    case umix::Verdict::kNotInterval:
      std::cout << "not-interval\n";
      return kExitNotInterval;
    case umix::Verdict::kYes:
      std::cout << "unit-mixed:yes\n";
      return kExitYes;
    case umix::Verdict::kNo:
      std::cout << "unit-mixed:no\n"
                << umix::CertificateToJson(g, *a.certificate).dump() << '\n';
      return kExitNo;
  }
  return kExitInternal;
}

int Represent(const std::string& input, const std::string& format, bool unit,
              bool trace, const std::string& output) {
  const Graph g = ReadGraph(input, format);
  const umix::Analysis a = umix::Analyze(g, unit);
  if (a.twins.HasTwins()) {
    std::cerr << "umix: twins reduced and restored: " << TwinClasses(g, a.twins)
              << '\n';
  }
  if (a.verdict == umix::Verdict::kNotInterval) {
    std::cerr << "umix: not an interval graph\n";
    return kExitNotInterval;
  }
  if (trace && a.sweep) {
    std::cerr << umix::TraceToJsonLines(a.twins.reduced, a.sweep->sweeps);
  } else if (a.sweep) {
    std::cerr << "umix: " << a.sweep->sweeps.size() << " sweep(s)\n";
  }
  if (a.verdict == umix::Verdict::kNo) {
    std::cerr << umix::CertificateToJson(g, *a.certificate).dump() << '\n';
    return kExitNo;
  }
  const umix::Representation& r = unit ? *a.unit : *a.strict;
  if (!umix::Verify(g, r)) throw std::logic_error("refusing to emit an invalid representation");
  WriteAll(output, umix::RepresentationToJson(g, r).dump(2) + "\n");
  return kExitYes;
}

int Forbidden(const std::string& input, const std::string& format) {
  const Graph g = ReadGraph(input, format);
  auto cert = umix::FindForbidden(g);
  if (!cert) {
    std::cout << "none\n";
    return kExitYes;
  }
  std::cout << umix::CertificateToJson(g, *cert).dump() << '\n';
  return kExitNo;
}

int VerifyPair(const std::string& graph_path, const std::string& format,
               const std::string& rep_path) {
  const Graph g = ReadGraph(graph_path, format);
  const nlohmann::json j = ReadJson(rep_path);
  umix::Representation r;
  try {
    r = umix::AlignToGraph(g, umix::RepresentationFromJson(j));
  } catch (const umix::ParseError& e) {
    throw JsonError(e.what());
  }
  const bool represents = umix::Verify(g, r);
  const bool strict = umix::IsStrict(r);
  const bool unit = umix::IsUnit(r);
  std::cout << "represents:" << (represents ? "yes" : "no") << '\n'
            << "strict:" << (strict ? "yes" : "no") << '\n'
            << "unit:" << (unit ? "yes" : "no") << '\n';
  return represents ? kExitYes : kExitNo;
}

int Plot(const std::string& input, const std::string& trace_path,
         const std::string& output) {
  const nlohmann::json j = ReadJson(input);
  umix::LabelledRepresentation r;
  try {
    r = umix::RepresentationFromJson(j);
  } catch (const umix::ParseError& e) {
    throw JsonError(e.what());
  }
  // Every reddened endpoint sits on a zone line of its sweep.
  std::set<umix::Rational> zones;
  if (!trace_path.empty()) {
    std::istringstream lines(ReadAll(trace_path));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      nlohmann::json e;
      try {
        e = nlohmann::json::parse(line);
        const umix::MixedInterval to = umix::IntervalFromJson(e.at("to"));
        for (const auto& side : e.at("reddened")) {
          zones.insert(side == "L" ? to.left.value : to.right.value);
        }
      } catch (const std::exception& ex) {
        throw JsonError(trace_path + ": " + ex.what());
      }
    }
  }
  WriteAll(output, umix::RenderSvg(r, {zones.begin(), zones.end()}));
  return kExitYes;
}

int RunCensus(int n_max, int oracle_max, int threads, const std::string& out,
              bool resume, const std::string& graph6) {
  umix::CensusOptions o;
  o.n_max = n_max;
  o.oracle_max = oracle_max;
  o.threads = threads;
  o.resume = resume;
  if (!graph6.empty()) o.graphs = umix::ParseGraph6Lines(ReadAll(graph6));
  if (!out.empty() && out != "-") {
    o.csv_path = out;
  } else {
    std::cout << umix::CensusCsvHeader() << '\n';
    o.on_row = [](const umix::CensusRow& row) { std::cout << umix::ToCsv(row) << '\n'; };
  }
  const umix::CensusReport report = umix::Census(o);
  std::size_t checked = 0;
  for (const auto& row : report.rows) checked += row.sweep_ok.has_value();
  std::cerr << "umix: " << report.rows.size() << " classes, " << checked
            << " twin-free interval graphs, " << report.violations.size()
            << " violation(s)\n";
  for (const auto& v : report.violations) {
    std::cerr << "umix: violation " << v.canonical << ": " << v.what << '\n';
  }
  return report.violations.empty() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit mixed interval graphs: recognition and representation"};
  app.require_subcommand(1);
  std::string format = "auto";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Graph input format")
        ->check(CLI::IsMember({"auto", "edges", "graph6"}));
  };

  std::string input = "-";
  auto* recognize = app.add_subcommand("recognize", "Decide membership in the class");
  recognize->add_option("input", input, "Graph file, or - for stdin");
  add_format(recognize);

  bool unit = false;
  bool trace = false;
  std::string output;
  auto* represent = app.add_subcommand("represent", "Emit a strict mixed representation");
  represent->add_option("input", input, "Graph file, or - for stdin");
  represent->add_flag("--unit", unit, "Convert to a unit representation");
  represent->add_flag("--trace", trace, "Write sweep events as JSON lines to stderr");
  represent->add_option("-o,--output", output, "Output path (default stdout)");
  add_format(represent);

  int n_max = 5;
  int oracle_max = umix::kMaxOracle;
  int threads = 1;
  bool resume = false;
  std::string census_out;
  std::string graph6_in;
  auto* census = app.add_subcommand("census", "Check the equivalences on small graphs");
  census->add_option("--n-max", n_max, "Largest vertex count")
      ->check(CLI::Range(1, umix::kMaxEnumeration));
  census->add_option("--oracle-max", oracle_max, "Largest graph for the brute-force oracle")
      ->check(CLI::Range(0, umix::kMaxOracle));
  census->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  census->add_option("--out", census_out, "CSV output path (default stdout)");
  census->add_flag("--resume", resume, "Keep rows already present in --out");
  census->add_option("--graph6", graph6_in, "Classify graphs from a graph6 file instead");

  std::string trace_in;
  auto* plot = app.add_subcommand("plot", "Render a representation as SVG");
  plot->add_option("input", input, "Representation JSON, or - for stdin");
  plot->add_option("--trace", trace_in, "Trace JSON lines; adds zone lines");
  plot->add_option("-o,--output", output, "Output path (default stdout)");

  auto* forbidden = app.add_subcommand("forbidden", "Search for an induced member of F");
  forbidden->add_option("input", input, "Graph file, or - for stdin");
  add_format(forbidden);

  std::string rep_in;
  auto* verify = app.add_subcommand("verify", "Check a representation against a graph");
  verify->add_option("graph", input, "Graph file")->required();
  verify->add_option("representation", rep_in, "Representation JSON")->required();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*recognize) return Recognize(input, format);
    if (*represent) return Represent(input, format, unit, trace, output);
    if (*census) {
      return RunCensus(n_max, oracle_max, threads, census_out, resume, graph6_in);
    }
    if (*plot) return Plot(input, trace_in, output);
    if (*forbidden) return Forbidden(input, format);
    if (*verify) return VerifyPair(input, format, rep_in);
  } catch (const umix::ParseError& e) {
    std::cerr << "umix: " << e.what() << '\n';
    return kExitUsage;
  } catch (const JsonError& e) {
    std::cerr << "umix: invalid JSON: " << e.what() << '\n';
    return kExitBadJson;
  } catch (const std::exception& e) {
    std::cerr << "umix: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
