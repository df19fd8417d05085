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

// aqcist: build augmented cubes and completely independent spanning trees.
//
// Exit codes: 0 success / verification pass, 1 verification fail,
// 2 any error (bad arguments, unreadable or malformed input, unsupported n).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aqcist/base_families.hpp"
#include "aqcist/io.hpp"
#include "aqcist/lifting.hpp"
#include "aqcist/routing.hpp"
#include "aqcist/verification.hpp"

namespace {

using namespace aqcist;

constexpr int kExitError = 2;

void emit(const std::string& output, const std::string& contents) {
  if (output == "-") {
    std::cout << contents;
  } else {
    io::write_text_file(output, contents);
  }
}

io::LabelStyle label_style(const std::string& text) {
  const auto style = io::parse_label_style(text);
  if (!style) throw Error(ErrorKind::kInvalidInput, "unknown label style '" + text + "'");
  return *style;
}

int run_generate(int n, const std::string& format_name, const std::string& output,
                 const std::string& labels, int max_n) {
  const auto format = io::parse_graph_format(format_name);
  if (!format) throw Error(ErrorKind::kInvalidInput, "unsupported format '" + format_name + "'");
  std::ostringstream text;
  io::write_graph(text, n, *format, label_style(labels), max_n);
  emit(output, text.str());
  return 0;
}

int run_construct(int n, const std::string& output, int max_n) {
  const CistFamily family = construct_cists(n, {max_n});
  emit(output, io::family_to_json(family));
  std::ostream& info = output == "-" ? std::cerr : std::cout;
  info << "diameters:";
  for (int d : family.diameters()) info << ' ' << d;
  info << '\n';
  return 0;
}

int run_verify(const std::string& file, const std::string& mode_name,
               const std::string& report_format, const std::string& labels,
               int bruteforce_cap) {
  const CandidateFamily family = io::read_family_file(file);
  VerifyOptions options;
  if (bruteforce_cap > 0) options.bruteforce_max_n = bruteforce_cap;
  VerifyMode mode = default_mode(family.n, options);
  if (!mode_name.empty()) {
    const auto parsed = parse_verify_mode(mode_name);
    if (!parsed) throw Error(ErrorKind::kInvalidInput, "unknown mode '" + mode_name + "'");
    mode = *parsed;
  }
  const VerificationReport report = verify_family(family, mode, options);
  if (report_format == "json") {
    std::cout << io::report_to_json(report);
  } else {
    std::cout << io::report_to_text(report, label_style(labels));
  }
  return exit_code(report);
}

int run_route(const std::string& file, const std::string& src, const std::string& dst,
              const std::string& labels) {
  const io::LabelStyle style = label_style(labels);
  const CistFamily family = CistFamily::from_candidate(io::read_family_file(file));
  const int n = family.dimension();
  const VertexId u = io::parse_vertex(src, n, style);
  const VertexId v = io::parse_vertex(dst, n, style);
  const Router router(family);
  const auto routes = router.routes(u, v);
  std::cout << "routes " << io::render_label(u.bits(), n, style) << " -> "
            << io::render_label(v.bits(), n, style) << " (graph distance "
            << (are_adjacent(u, v) ? "1" : ">= 2") << ")\n";
  for (std::size_t i = 0; i < routes.size(); ++i) {
    std::cout << "T" << i + 1 << " length " << routes[i].length() << ':';
    for (Label x : routes[i].vertices) std::cout << ' ' << io::render_label(x, n, style);
    std::cout << '\n';
  }
  return 0;
}

int run_route_stats(const std::string& file, std::uint64_t pairs, std::uint64_t seed) {
  const Router router(CistFamily::from_candidate(io::read_family_file(file)));
  const PairSampler sampler = pairs == 0 ? PairSampler::all_pairs() : PairSampler::random(pairs, seed);
  const RouteSummary summary = route_stats(router, sampler);
  std::cout << "pairs " << summary.pairs << (summary.exhaustive ? " (all)" : "") << ", seed "
            << (summary.exhaustive ? std::string("-") : std::to_string(summary.seed))
            << ", adjacent in AQ_" << router.family().dimension() << ": "
            << summary.adjacent_pairs << '\n';
  std::cout << std::left << std::setw(6) << "tree" << std::setw(10) << "diameter"
            << std::setw(12) << "max length" << "mean length\n";
  for (std::size_t i = 0; i < summary.per_tree.size(); ++i) {
    std::cout << std::setw(6) << i + 1 << std::setw(10) << router.family().tree(i).diameter()
              << std::setw(12) << summary.per_tree[i].max_length << std::fixed
              << std::setprecision(3) << summary.per_tree[i].mean_length << '\n';
  }
  return 0;
}

int run_stats(const std::string& file, const std::string& labels) {
  const io::LabelStyle style = label_style(labels);
  const CandidateFamily candidate = io::read_family_file(file);
  const CistFamily family = CistFamily::from_candidate(candidate);
  const int n = family.dimension();
  std::cout << "AQ_" << n << ", " << family.size() << " trees, provenance "
            << to_string(family.provenance()) << '\n';
  std::cout << std::left << std::setw(6) << "tree" << std::setw(8) << "edges" << std::setw(10)
            << "diameter" << std::setw(8) << "radius" << std::setw(std::max(8, n + 2))
            << "center" << "internal\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    const SpanningTree& t = family.tree(i);
    const std::string center =
        t.vertex_count() >= 3 ? io::render_label(t.center().bits(), n, style) : "-";
    std::cout << std::setw(6) << i + 1 << std::setw(8) << t.edges().size() << std::setw(10)
              << t.diameter() << std::setw(8) << t.radius() << std::setw(std::max(8, n + 2))
              << center << t.internal_count() << '\n';
  }
  const VerificationReport report = verify_characterization(candidate);
  auto yes_no = [&](Condition c) {
    const Check* check = report.find(c);
    return check && check->status == CheckStatus::kPass ? "yes" : "no";
  };
  std::cout << "edge-disjoint: " << yes_no(Condition::kEdgeDisjoint) << '\n'
            << "internal-disjoint: " << yes_no(Condition::kInternalOverlap) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Augmented cubes and completely independent spanning trees"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "edgelist";
  std::string output = "-";
  std::string labels = "binary";
  std::string mode;
  std::string report_format = "text";
  std::string file;
  std::string src;
  std::string dst;
  int max_n_override = 0;

  auto* generate = app.add_subcommand("generate", "Write the edge set of AQ_n");
  generate->add_option("--n", n, "Dimension")->required();
  generate->add_option("--format", format, "dot | graphml | edgelist | json");
  generate->add_option("--output", output, "Output file, - for stdout");
  generate->add_option("--labels", labels, "Edge-list labels: binary | number");
  generate->add_option("--max-n-override", max_n_override, "Raise the size cap");

  auto* construct = app.add_subcommand("construct", "Construct CISTs on AQ_n as family JSON");
  construct->add_option("--n", n, "Dimension (>= 3)")->required();
  construct->add_option("--output", output, "Output file, - for stdout");
  construct->add_option("--max-n-override", max_n_override, "Raise the size cap");

  auto* verify = app.add_subcommand("verify", "Verify a family JSON file");
  verify->add_option("family", file, "Family JSON file")->required();
  verify->add_option("--mode", mode, "characterization | bruteforce | both");
  verify->add_option("--report", report_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--labels", labels, "Witness labels: binary | number");
  verify->add_option("--max-n-override", max_n_override, "Raise the brute-force cap");

  auto* route = app.add_subcommand("route", "Print the disjoint routes between two vertices");
  route->add_option("family", file, "Family JSON file")->required();
  route->add_option("src", src, "Source vertex")->required();
  route->add_option("dst", dst, "Destination vertex")->required();
  route->add_option("--labels", labels, "binary (e.g. 00101) | number (1-based)");

  std::uint64_t pairs = 1000;
  std::uint64_t seed = 1;
  auto* route_stats_cmd =
      app.add_subcommand("route-stats", "Route lengths per tree over sampled vertex pairs");
  route_stats_cmd->add_option("family", file, "Family JSON file")->required();
  route_stats_cmd->add_option("--pairs", pairs, "Random pairs to sample, 0 for every pair");
  route_stats_cmd->add_option("--seed", seed, "Sampler seed");

  auto* stats = app.add_subcommand("stats", "Per-tree statistics of a family JSON file");
  stats->add_option("family", file, "Family JSON file")->required();
  stats->add_option("--labels", labels, "binary | number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*generate) {
      return run_generate(n, format, output, labels,
                          max_n_override > 0 ? max_n_override : kDefaultBuildCap);
    }
    if (*construct) {
      return run_construct(n, output,
                           max_n_override > 0 ? max_n_override : kDefaultConstructCap);
    }
    if (*verify) return run_verify(file, mode, report_format, labels, max_n_override);
    if (*route) return run_route(file, src, dst, labels);
    if (*route_stats_cmd) return run_route_stats(file, pairs, seed);
    if (*stats) return run_stats(file, labels);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
