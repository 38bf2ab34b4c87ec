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

#ifndef UMIX_PLOT_H_
#define UMIX_PLOT_H_

#include <string>
#include <vector>

#include "umix/io.h"
#include "umix/rational.h"

namespace umix {

// Deterministic SVG: one horizontal segment per interval, top to bottom in
// input order, with a filled circle at closed ends and a hollow one at open
// ends. Zone lines are drawn as vertical dashed lines.
std::string RenderSvg(const LabelledRepresentation& r,
                      const std::vector<Rational>& zone_lines = {});

}  // namespace umix

#endif  // UMIX_PLOT_H_
