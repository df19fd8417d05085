// Copyright 2026 The aqcist Authors
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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "aqcist/family.hpp"
#include "aqcist/topology.hpp"
#include "aqcist/verification.hpp"

namespace aqcist::io {

enum class GraphFormat { kDot, kGraphMl, kEdgeList, kJson };
enum class LabelStyle { kBinary, kNumber };

std::optional<GraphFormat> parse_graph_format(std::string_view text);
std::optional<LabelStyle> parse_label_style(std::string_view text);

std::string render_label(Label v, int n, LabelStyle style);

/// Parses a vertex given as a binary string (kBinary) or a 1-based number
/// (kNumber). Throws Error(kInvalidInput).
VertexId parse_vertex(std::string_view text, int n, LabelStyle style);

/// Writes every edge of AQ_n sorted by (lo, hi). Edge-list lines are two
/// labels rendered in `style`; DOT and GraphML node ids are zero-padded binary
/// strings; JSON uses zero-based values.
void write_graph(std::ostream& out, int n, GraphFormat format,
                 LabelStyle style = LabelStyle::kBinary,
                 int max_n = kDefaultBuildCap);

/// Canonical family JSON: sorted edges, sorted endpoints, one tree per line.
std::string family_to_json(const CistFamily& family);
std::string family_to_json(const CandidateFamily& family);

/// Throws Error(kParse) for malformed documents. Tree contents are not
/// validated beyond being integer pairs.
CandidateFamily family_from_json(std::string_view text);

CandidateFamily read_family_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report, LabelStyle style);

}  // namespace aqcist::io
