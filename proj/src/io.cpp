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

#include "aqcist/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace aqcist::io {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kLabeling = "zero-based-value";

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorKind::kParse, "family file: " + message);
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.lo, e.hi});
  return out;
}

std::vector<Edge> canonical(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(make_edge(e.lo, e.hi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view text) {
  if (text == "dot") return GraphFormat::kDot;
  if (text == "graphml") return GraphFormat::kGraphMl;
  if (text == "edgelist") return GraphFormat::kEdgeList;
  if (text == "json") return GraphFormat::kJson;
  return std::nullopt;
}

std::optional<LabelStyle> parse_label_style(std::string_view text) {
  if (text == "binary") return LabelStyle::kBinary;
  if (text == "number" || text == "paper") return LabelStyle::kNumber;
  return std::nullopt;
}

std::string render_label(Label v, int n, LabelStyle style) {
  return style == LabelStyle::kBinary ? to_binary(v, n) : std::to_string(std::uint64_t{v} + 1);
}

VertexId parse_vertex(std::string_view text, int n, LabelStyle style) {
  if (style == LabelStyle::kBinary) return VertexId::from_binary(text, n);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorKind::kInvalidInput, "not a vertex number: '" + std::string(text) + "'");
  }
  return VertexId::from_number(value, n);
}

void write_graph(std::ostream& out, int n, GraphFormat format, LabelStyle style,
                 int max_n) {
  const AugmentedCube cube(n);
  const std::vector<Edge> edges = cube.edges(max_n);
  const Label size = static_cast<Label>(cube.vertex_count());
  switch (format) {
    case GraphFormat::kEdgeList:
      for (const Edge& e : edges) {
        out << render_label(e.lo, n, style) << ' ' << render_label(e.hi, n, style) << '\n';
      }
      break;
    case GraphFormat::kDot:
      out << "graph AQ_" << n << " {\n";
      for (Label v = 0; v < size; ++v) out << "  \"" << to_binary(v, n) << "\";\n";
      for (const Edge& e : edges) {
        out << "  \"" << to_binary(e.lo, n) << "\" -- \"" << to_binary(e.hi, n) << "\";\n";
      }
      out << "}\n";
      break;
    case GraphFormat::kGraphMl:
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
          << "  <key id=\"value\" for=\"node\" attr.name=\"value\" attr.type=\"long\"/>\n"
          << "  <graph id=\"AQ_" << n << "\" edgedefault=\"undirected\">\n";
      for (Label v = 0; v < size; ++v) {
        out << "    <node id=\"" << to_binary(v, n) << "\"><data key=\"value\">" << v
            << "</data></node>\n";
      }
      for (const Edge& e : edges) {
        out << "    <edge source=\"" << to_binary(e.lo, n) << "\" target=\""
            << to_binary(e.hi, n) << "\"/>\n";
      }
      out << "  </graph>\n</graphml>\n";
      break;
    case GraphFormat::kJson: {
      ordered_json doc;
      doc["n"] = n;
      doc["labeling"] = kLabeling;
      doc["vertex_count"] = cube.vertex_count();
      doc["edge_count"] = cube.edge_count();
      doc["edges"] = edges_json(edges);
      out << doc.dump() << '\n';
      break;
    }
  }
}

std::string family_to_json(const CandidateFamily& family) {
  std::ostringstream out;
  out << "{\n"
      << "  \"n\": " << family.n << ",\n"
      << "  \"k\": " << family.trees.size() << ",\n"
      << "  \"labeling\": \"" << kLabeling << "\",\n"
      << "  \"provenance\": \"" << to_string(family.provenance) << "\",\n"
      << "  \"trees\": [\n";
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    ordered_json tree;
    tree["id"] = i + 1;
    tree["edges"] = edges_json(canonical(family.trees[i]));
    out << "    " << tree.dump() << (i + 1 < family.trees.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string family_to_json(const CistFamily& family) {
  return family_to_json(family.to_candidate());
}

CandidateFamily family_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("top level must be an object");
  for (const char* key : {"n", "k", "labeling", "trees"}) {
    if (!doc.contains(key)) parse_error(std::string("missing \"") + key + "\"");
  }
  if (!doc["n"].is_number_integer()) parse_error("\"n\" must be an integer");
  if (!doc["k"].is_number_integer()) parse_error("\"k\" must be an integer");
  if (doc["labeling"] != kLabeling) {
    parse_error(std::string("\"labeling\" must be \"") + kLabeling + "\"");
  }
  if (!doc["trees"].is_array()) parse_error("\"trees\" must be an array");

  CandidateFamily family;
  family.n = doc["n"].get<int>();
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) parse_error("\"provenance\" must be a string");
    const auto p = parse_provenance(doc["provenance"].get<std::string>());
    if (!p) parse_error("unknown provenance " + doc["provenance"].dump());
    family.provenance = *p;
  }
  const auto& trees = doc["trees"];
  if (doc["k"].get<long long>() != static_cast<long long>(trees.size())) {
    parse_error("\"k\" does not match the number of trees");
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto& tree = trees[i];
    if (!tree.is_object() || !tree.contains("edges") || !tree["edges"].is_array()) {
      parse_error("tree " + std::to_string(i + 1) + " must be an object with \"edges\"");
    }
    if (tree.contains("id") &&
        (!tree["id"].is_number_integer() || tree["id"].get<long long>() != static_cast<long long>(i + 1))) {
      parse_error("tree ids must be 1, 2, ... in order");
    }
    std::vector<Edge> edges;
    for (const auto& e : tree["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned() || e[0].get<std::uint64_t>() > 0xffffffffu ||
          e[1].get<std::uint64_t>() > 0xffffffffu) {
        parse_error("tree " + std::to_string(i + 1) + " has a malformed edge " + e.dump());
      }
      edges.push_back({e[0].get<Label>(), e[1].get<Label>()});
    }
    family.trees.push_back(std::move(edges));
  }
  return family;
}

CandidateFamily read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return family_from_json(buffer.str());
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + path);
  out << contents;
  if (!out.flush()) throw Error(ErrorKind::kInvalidInput, "error writing " + path);
}

namespace {

ordered_json witness_json(const Witness& w) {
  ordered_json out = ordered_json::object();
  if (!w.trees.empty()) {
    ordered_json ids = ordered_json::array();
    for (int t : w.trees) ids.push_back(t + 1);
    out["trees"] = std::move(ids);
  }
  if (w.edge) out["edge"] = {w.edge->lo, w.edge->hi};
  if (w.vertex) out["vertex"] = *w.vertex;
  if (w.pair) out["pair"] = {w.pair->first, w.pair->second};
  if (!w.paths.empty()) out["paths"] = w.paths;
  return out;
}

template <typename T>
ordered_json optional_array(const std::vector<std::optional<T>>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) {
    if (v) {
      out.push_back(*v);
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

std::string witness_text(const Witness& w, int n, LabelStyle style) {
  std::ostringstream out;
  if (!w.trees.empty()) {
    out << "trees";
    for (std::size_t i = 0; i < w.trees.size(); ++i) out << (i ? "," : " ") << w.trees[i] + 1;
  }
  auto label = [&](Label v) { return render_label(v, n, style); };
  if (w.edge) out << " edge <" << label(w.edge->lo) << ", " << label(w.edge->hi) << ">";
  if (w.vertex) out << " vertex " << label(*w.vertex);
  if (w.pair) out << " pair (" << label(w.pair->first) << ", " << label(w.pair->second) << ")";
  for (const auto& path : w.paths) {
    out << "\n      path";
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " - " : " ") << label(path[i]);
  }
  return out.str();
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["verdict"] = report.pass ? "pass" : "fail";
  doc["mode"] = to_string(report.mode);
  doc["n"] = report.n;
  doc["k"] = report.k;
  ordered_json checks = ordered_json::array();
  for (const Check& c : report.checks) {
    ordered_json check;
    check["condition"] = to_string(c.condition);
    check["status"] = to_string(c.status);
    check["witness"] = c.witness ? witness_json(*c.witness) : ordered_json(nullptr);
    checks.push_back(std::move(check));
  }
  doc["checks"] = std::move(checks);
  doc["stats"]["diameters"] = optional_array(report.diameters);
  doc["stats"]["internal_counts"] = optional_array(report.internal_counts);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report, LabelStyle style) {
  std::ostringstream out;
  out << "verdict: " << (report.pass ? "pass" : "fail") << " (mode " << to_string(report.mode)
      << ", AQ_" << report.n << ", " << report.k << " trees)\n";
  for (const Check& c : report.checks) {
    out << "  " << std::left << std::setw(26) << to_string(c.condition) << to_string(c.status);
    if (c.witness) out << "  " << witness_text(*c.witness, report.n, style);
    out << '\n';
  }
  auto row = [&](const char* name, const std::vector<std::optional<int>>& values) {
    out << name << ':';
    for (const auto& v : values) {
      out << ' ';
      if (v) {
        out << *v;
      } else {
        out << '-';
      }
    }
    out << '\n';
  };
  row("diameters", report.diameters);
  row("internal", report.internal_counts);
  return out.str();
}

}  // namespace aqcist::io
