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

#include "umix/plot.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace umix {
namespace {

constexpr double kWidth = 800;
constexpr double kLabelWidth = 80;
constexpr double kMargin = 24;
constexpr double kRowHeight = 24;
constexpr double kRadius = 4;

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const LabelledRepresentation& r,
                      const std::vector<Rational>& zone_lines) {
  const std::size_t n = r.intervals.size();
  const double height = 2 * kMargin + kRowHeight * static_cast<double>(n);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(kWidth)
      << "\" height=\"" << Num(height) << "\" viewBox=\"0 0 " << Num(kWidth)
      << ' ' << Num(height) << "\">\n";
  if (n == 0) {
    out << "</svg>\n";
    return out.str();
  }
  Rational lo = r.intervals[0].left.value;
  Rational hi = r.intervals[0].right.value;
  for (const auto& i : r.intervals) {
    lo = std::min(lo, i.left.value);
    hi = std::max(hi, i.right.value);
  }
  for (const auto& z : zone_lines) {
    lo = std::min(lo, z);
    hi = std::max(hi, z);
  }
  const double span = lo == hi ? 1.0 : (hi - lo).ToDouble();
  const double x0 = kLabelWidth;
  const double usable = kWidth - kLabelWidth - kMargin;
  auto x = [&](const Rational& v) { return x0 + (v - lo).ToDouble() / span * usable; };

  for (const auto& z : zone_lines) {
    out << "  <line class=\"zone\" x1=\"" << Num(x(z)) << "\" y1=\""
        << Num(kMargin / 2) << "\" x2=\"" << Num(x(z)) << "\" y2=\""
        << Num(height - kMargin / 2)
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const MixedInterval& iv = r.intervals[i];
    const double y = kMargin + kRowHeight * (static_cast<double>(i) + 0.5);
    out << "  <text x=\"" << Num(kMargin / 2) << "\" y=\"" << Num(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << Escape(r.labels[i]) << "</text>\n";
    out << "  <line class=\"interval\" x1=\"" << Num(x(iv.left.value))
        << "\" y1=\"" << Num(y) << "\" x2=\"" << Num(x(iv.right.value))
        << "\" y2=\"" << Num(y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const Endpoint* e : {&iv.left, &iv.right}) {
      out << "  <circle class=\"" << (e->closed ? "closed" : "open")
          << "\" cx=\"" << Num(x(e->value)) << "\" cy=\"" << Num(y) << "\" r=\""
          << Num(kRadius) << "\" fill=\"" << (e->closed ? "black" : "white")
          << "\" stroke=\"black\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace umix
