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

#include "aqcist/verification.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "aqcist/kernels.hpp"
#include "aqcist/tree.hpp"

namespace aqcist {

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kCharacterization: return "characterization";
    case VerifyMode::kBruteForce: return "bruteforce";
    case VerifyMode::kBoth: return "both";
  }
  return "unknown";
}

const char* to_string(Condition condition) {
  switch (condition) {
    case Condition::kSpanning: return "spanning";
    case Condition::kAcyclic: return "acyclic";
    case Condition::kSubgraph: return "subgraph";
    case Condition::kEdgeDisjoint: return "edge-disjoint";
    case Condition::kInternalOverlap: return "internal-overlap";
    case Condition::kPathVertexIntersection: return "path-vertex-intersection";
    case Condition::kPathEdgeIntersection: return "path-edge-intersection";
  }
  return "unknown";
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::optional<VerifyMode> parse_verify_mode(std::string_view text) {
  for (VerifyMode m : {VerifyMode::kCharacterization, VerifyMode::kBruteForce,
                       VerifyMode::kBoth}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

const Check* VerificationReport::find(Condition condition) const {
  for (const Check& c : checks) {
    if (c.condition == condition) return &c;
  }
  return nullptr;
}

const Check* VerificationReport::first_failure() const {
  // checks are stored in check order.
  for (const Check& c : checks) {
    if (c.status != CheckStatus::kPass) return &c;
  }
  return nullptr;
}

int exit_code(const VerificationReport& report) { return report.pass ? 0 : 1; }

VerifyMode default_mode(int n, const VerifyOptions& options) {
  return n <= options.bruteforce_max_n ? VerifyMode::kBoth
                                       : VerifyMode::kCharacterization;
}

namespace {

[[noreturn]] void structural(const std::string& message) {
  throw Error(ErrorKind::kStructural, message);
}

void check_interpretable(const CandidateFamily& family) {
  if (family.n < 1 || family.n > kMaxDimension) {
    structural("dimension " + std::to_string(family.n) + " is not supported");
  }
  if (family.n > kDefaultBuildCap) {
    throw Error(ErrorKind::kResource, "verification is capped at n = " +
                                          std::to_string(kDefaultBuildCap));
  }
  if (family.trees.empty()) structural("family has no trees");
  const Label size = Label{1} << family.n;
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    for (const Edge& e : family.trees[i]) {
      if (e.lo >= size || e.hi >= size || e.lo == e.hi) {
        structural("tree " + std::to_string(i + 1) + " has edge {" +
                   std::to_string(e.lo) + ", " + std::to_string(e.hi) +
                   "} which is not a pair of distinct vertices of AQ_" +
                   std::to_string(family.n));
      }
    }
  }
}

std::vector<Edge> normalized(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(make_edge(e.lo, e.hi));
  std::sort(out.begin(), out.end());
  return out;
}

// Spanning / acyclic / subgraph outcome for one edge list.
struct Shape {
  std::optional<Edge> non_aq_edge;
  std::optional<Edge> cycle_edge;
  std::optional<Label> unreached;

  bool ok() const { return !non_aq_edge && !cycle_edge && !unreached; }
};

Shape analyze(int n, const std::vector<Edge>& sorted_edges) {
  Shape shape;
  const Label size = Label{1} << n;
  std::vector<Label> parent(size);
  std::iota(parent.begin(), parent.end(), Label{0});
  auto find = [&](Label x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : sorted_edges) {
    if (!shape.non_aq_edge && !labels_adjacent(e.lo, e.hi)) shape.non_aq_edge = e;
    const Label a = find(e.lo);
    const Label b = find(e.hi);
    if (a == b) {
      if (!shape.cycle_edge) shape.cycle_edge = e;
    } else {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (Label v = 0; v < size; ++v) {
    if (find(v) != 0) {
      shape.unreached = v;
      break;
    }
  }
  return shape;
}

struct Prepared {
  int n = 0;
  std::vector<std::vector<Edge>> trees;  // normalized and sorted
  std::vector<Shape> shapes;
  std::vector<std::optional<SpanningTree>> built;

  bool all_ok() const {
    return std::all_of(shapes.begin(), shapes.end(), [](const Shape& s) { return s.ok(); });
  }
};

Prepared prepare(const CandidateFamily& family) {
  check_interpretable(family);
  Prepared p;
  p.n = family.n;
  for (const auto& edges : family.trees) {
    p.trees.push_back(normalized(edges));
    p.shapes.push_back(analyze(family.n, p.trees.back()));
    if (p.shapes.back().ok()) {
      p.built.push_back(SpanningTree::from_edges(family.n, p.trees.back()));
    } else {
      p.built.emplace_back(std::nullopt);
    }
  }
  return p;
}

Check passed(Condition condition) {
  return {condition, CheckStatus::kPass, std::nullopt};
}

Check failed(Condition condition, Witness witness) {
  return {condition, CheckStatus::kFail, std::move(witness)};
}

void add_structural_checks(const Prepared& p, VerificationReport& report) {
  Check spanning = passed(Condition::kSpanning);
  Check acyclic = passed(Condition::kAcyclic);
  Check subgraph = passed(Condition::kSubgraph);
  for (std::size_t i = 0; i < p.shapes.size(); ++i) {
    const Shape& s = p.shapes[i];
    const int tree = static_cast<int>(i);
    if (s.unreached && spanning.status == CheckStatus::kPass) {
      spanning = failed(Condition::kSpanning, {{tree}, std::nullopt, s.unreached, {}, {}});
    }
    if (s.cycle_edge && acyclic.status == CheckStatus::kPass) {
      acyclic = failed(Condition::kAcyclic, {{tree}, s.cycle_edge, std::nullopt, {}, {}});
    }
    if (s.non_aq_edge && subgraph.status == CheckStatus::kPass) {
      subgraph = failed(Condition::kSubgraph, {{tree}, s.non_aq_edge, std::nullopt, {}, {}});
    }
  }
  report.checks.push_back(std::move(spanning));
  report.checks.push_back(std::move(acyclic));
  report.checks.push_back(std::move(subgraph));
}

Check edge_disjoint_check(const Prepared& p) {
  std::vector<std::pair<std::uint64_t, int>> owned;
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    for (const Edge& e : p.trees[i]) owned.emplace_back(edge_key(e), static_cast<int>(i));
  }
  std::sort(owned.begin(), owned.end());
  owned.erase(std::unique(owned.begin(), owned.end()), owned.end());
  for (std::size_t a = 0; a + 1 < owned.size(); ++a) {
    if (owned[a].first == owned[a + 1].first) {
      const std::uint64_t key = owned[a].first;
      const Edge e{static_cast<Label>(key >> 32), static_cast<Label>(key & 0xffffffffu)};
      return failed(Condition::kEdgeDisjoint,
                    {{owned[a].second, owned[a + 1].second}, e, std::nullopt, {}, {}});
    }
  }
  return passed(Condition::kEdgeDisjoint);
}

std::vector<std::vector<std::uint8_t>> degree_tables(const Prepared& p) {
  const std::size_t size = std::size_t{1} << p.n;
  std::vector<std::vector<std::uint8_t>> tables;
  for (const auto& edges : p.trees) {
    std::vector<std::uint8_t> table(size, 0);
    for (const Edge& e : edges) {
      if (table[e.lo] < 255) ++table[e.lo];
      if (table[e.hi] < 255) ++table[e.hi];
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

Check internal_overlap_check(const Prepared& p) {
  const auto tables = degree_tables(p);
  std::vector<std::span<const std::uint8_t>> views(tables.begin(), tables.end());
  const std::size_t v = kernels::first_shared_internal(views);
  if (v == kernels::kNotFound) return passed(Condition::kInternalOverlap);
  Witness w;
  w.vertex = static_cast<Label>(v);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i][v] >= 2) w.trees.push_back(static_cast<int>(i));
  }
  return failed(Condition::kInternalOverlap, std::move(w));
}

void add_stats(const Prepared& p, VerificationReport& report) {
  for (const auto& tree : p.built) {
    if (tree) {
      report.diameters.emplace_back(tree->diameter());
      report.internal_counts.emplace_back(static_cast<int>(tree->internal_count()));
    } else {
      report.diameters.emplace_back(std::nullopt);
      report.internal_counts.emplace_back(std::nullopt);
    }
  }
}

void finish(VerificationReport& report) {
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const Check& c) { return c.status == CheckStatus::kPass; });
}

VerificationReport start_report(const Prepared& p, VerifyMode mode) {
  VerificationReport report;
  report.mode = mode;
  report.n = p.n;
  report.k = static_cast<int>(p.trees.size());
  add_structural_checks(p, report);
  return report;
}

VerificationReport characterize(const Prepared& p) {
  VerificationReport report = start_report(p, VerifyMode::kCharacterization);
  report.checks.push_back(edge_disjoint_check(p));
  report.checks.push_back(internal_overlap_check(p));
  add_stats(p, report);
  finish(report);
  return report;
}

// Tree rooted at vertex 0, for repeated path extraction.
struct RootedTree {
  std::vector<Label> parent;
  std::vector<int> depth;

  explicit RootedTree(const SpanningTree& tree)
      : parent(tree.vertex_count()), depth(tree.distances_from(0)) {
    parent[0] = 0;
    for (Label v = 0; v < tree.vertex_count(); ++v) {
      for (Label w : tree.neighbors(v)) {
        if (depth[w] == depth[v] + 1) parent[w] = v;
      }
    }
  }

  void path(Label u, Label v, std::vector<Label>& out) const {
    std::vector<Label> tail;
    out.clear();
    while (depth[u] > depth[v]) out.push_back(std::exchange(u, parent[u]));
    while (depth[v] > depth[u]) tail.push_back(std::exchange(v, parent[v]));
    while (u != v) {
      out.push_back(std::exchange(u, parent[u]));
      tail.push_back(std::exchange(v, parent[v]));
    }
    out.push_back(u);
    out.insert(out.end(), tail.rbegin(), tail.rend());
  }
};

// First violation of each path condition, ordered by (u, v, i, j).
struct PathViolations {
  using Key = std::tuple<Label, Label, int, int>;
  std::optional<Key> vertex_key;
  std::optional<Witness> vertex_witness;
  std::optional<Key> edge_key;
  std::optional<Witness> edge_witness;

  void merge(PathViolations&& other) {
    if (other.vertex_key && (!vertex_key || *other.vertex_key < *vertex_key)) {
      vertex_key = other.vertex_key;
      vertex_witness = std::move(other.vertex_witness);
    }
    if (other.edge_key && (!edge_key || *other.edge_key < *edge_key)) {
      edge_key = other.edge_key;
      edge_witness = std::move(other.edge_witness);
    }
  }
};

void scan_pairs(const std::vector<RootedTree>& rooted, Label size, Label first_u,
                Label stride, PathViolations& found) {
  const std::size_t k = rooted.size();
  std::vector<std::vector<Label>> paths(k);
  std::vector<Label> stamp(size, 0);
  Label token = 0;
  for (Label u = first_u; u < size; u += stride) {
    if (found.vertex_key && found.edge_key) return;
    for (Label v = u + 1; v < size; ++v) {
      for (std::size_t i = 0; i < k; ++i) rooted[i].path(u, v, paths[i]);
      for (std::size_t i = 0; i < k; ++i) {
        ++token;
        for (Label x : paths[i]) stamp[x] = token;
        for (std::size_t j = i + 1; j < k; ++j) {
          const auto key = std::make_tuple(u, v, static_cast<int>(i), static_cast<int>(j));
          const auto& pj = paths[j];
          if (!found.vertex_key) {
            for (std::size_t a = 1; a + 1 < pj.size(); ++a) {
              if (stamp[pj[a]] == token) {
                found.vertex_key = key;
                found.vertex_witness = Witness{{static_cast<int>(i), static_cast<int>(j)},
                                               std::nullopt, pj[a], std::pair{u, v},
                                               {paths[i], pj}};
                break;
              }
            }
          }
          if (!found.edge_key) {
            for (std::size_t a = 0; a + 1 < paths[i].size() && !found.edge_key; ++a) {
              const Edge ei = make_edge(paths[i][a], paths[i][a + 1]);
              for (std::size_t b = 0; b + 1 < pj.size(); ++b) {
                if (make_edge(pj[b], pj[b + 1]) == ei) {
                  found.edge_key = key;
                  found.edge_witness = Witness{{static_cast<int>(i), static_cast<int>(j)},
                                               ei, std::nullopt, std::pair{u, v},
                                               {paths[i], pj}};
                  break;
                }
              }
            }
          }
        }
      }
    }
  }
}

VerificationReport brute_force(const Prepared& p, const VerifyOptions& options) {
  VerificationReport report = start_report(p, VerifyMode::kBruteForce);
  if (!p.all_ok()) {
    report.checks.push_back({Condition::kPathVertexIntersection, CheckStatus::kSkipped, {}});
    report.checks.push_back({Condition::kPathEdgeIntersection, CheckStatus::kSkipped, {}});
    add_stats(p, report);
    finish(report);
    return report;
  }
  std::vector<RootedTree> rooted;
  for (const auto& tree : p.built) rooted.emplace_back(*tree);
  const Label size = Label{1} << p.n;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, std::min(64u, static_cast<unsigned>(size)));
  std::vector<PathViolations> partial(threads);
  if (threads == 1) {
    scan_pairs(rooted, size, 0, 1, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] { scan_pairs(rooted, size, t, threads, partial[t]); });
    }
  }
  PathViolations merged;
  for (auto& part : partial) merged.merge(std::move(part));

  report.checks.push_back(merged.vertex_witness
                              ? failed(Condition::kPathVertexIntersection,
                                       std::move(*merged.vertex_witness))
                              : passed(Condition::kPathVertexIntersection));
  report.checks.push_back(merged.edge_witness
                              ? failed(Condition::kPathEdgeIntersection,
                                       std::move(*merged.edge_witness))
                              : passed(Condition::kPathEdgeIntersection));
  add_stats(p, report);
  finish(report);
  return report;
}

void check_bruteforce_cap(int n, const VerifyOptions& options) {
  if (n > options.bruteforce_max_n) {
    throw Error(ErrorKind::kUnsupported,
                "brute-force verification is capped at n = " +
                    std::to_string(options.bruteforce_max_n) +
                    "; use characterization mode or raise the cap");
  }
}

}  // namespace

VerificationReport verify_characterization(const CandidateFamily& family) {
  return characterize(prepare(family));
}

VerificationReport verify_characterization(const CistFamily& family) {
  return verify_characterization(family.to_candidate());
}

VerificationReport verify_bruteforce(const CandidateFamily& family,
                                     const VerifyOptions& options) {
  check_bruteforce_cap(family.n, options);
  return brute_force(prepare(family), options);
}

VerificationReport verify_bruteforce(const CistFamily& family,
                                     const VerifyOptions& options) {
  return verify_bruteforce(family.to_candidate(), options);
}

VerificationReport verify_family(const CandidateFamily& family, VerifyMode mode,
                                 const VerifyOptions& options) {
  if (mode == VerifyMode::kCharacterization) return verify_characterization(family);
  check_bruteforce_cap(family.n, options);
  const Prepared p = prepare(family);
  if (mode == VerifyMode::kBruteForce) return brute_force(p, options);

  VerificationReport by_characterization = characterize(p);
  VerificationReport by_paths = brute_force(p, options);
  if (by_characterization.pass != by_paths.pass) {
    throw Error(ErrorKind::kInternal,
                std::string("verifiers disagree: characterization ") +
                    (by_characterization.pass ? "pass" : "fail") + ", brute force " +
                    (by_paths.pass ? "pass" : "fail"));
  }
  VerificationReport both = std::move(by_characterization);
  both.mode = VerifyMode::kBoth;
  for (Check& c : by_paths.checks) {
    if (c.condition == Condition::kPathVertexIntersection ||
        c.condition == Condition::kPathEdgeIntersection) {
      both.checks.push_back(std::move(c));
    }
  }
  return both;
}

VerificationReport verify_family(const CistFamily& family, VerifyMode mode,
                                 const VerifyOptions& options) {
  return verify_family(family.to_candidate(), mode, options);
}

}  // namespace aqcist
