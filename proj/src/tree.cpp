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

#include "aqcist/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "aqcist/kernels.hpp"

namespace aqcist {

const char* to_string(TreeDefect defect) {
  switch (defect) {
    case TreeDefect::kBadLabel: return "bad-label";
    case TreeDefect::kWrongEdgeCount: return "wrong-edge-count";
    case TreeDefect::kNotSubgraph: return "not-subgraph";
    case TreeDefect::kCyclic: return "cyclic";
    case TreeDefect::kDisconnected: return "disconnected";
  }
  return "unknown";
}

TreeError::TreeError(TreeDefect defect, const std::string& message,
                     std::optional<Edge> edge, std::optional<Label> vertex)
    : Error(ErrorKind::kInvalidInput, message),
      defect_(defect),
      edge_(edge),
      vertex_(vertex) {}

namespace {

std::string describe(const Edge& e, int n) {
  return "<" + to_binary(e.lo, n) + ", " + to_binary(e.hi, n) + ">";
}

// Path-compressed union-find over 2^n labels.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), Label{0});
  }
  Label find(Label x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<Label> parent_;
};

}  // namespace

SpanningTree SpanningTree::from_edges(int n, std::span<const Edge> edges) {
  check_dimension(n);
  SpanningTree tree;
  tree.n_ = n;
  tree.vertex_count_ = std::uint32_t{1} << n;
  tree.edges_.reserve(edges.size());
  for (const Edge& e : edges) tree.edges_.push_back(make_edge(e.lo, e.hi));
  std::sort(tree.edges_.begin(), tree.edges_.end());

  for (const Edge& e : tree.edges_) {
    if (e.hi >= tree.vertex_count_ || e.lo == e.hi) {
      throw TreeError(TreeDefect::kBadLabel,
                      "edge {" + std::to_string(e.lo) + ", " + std::to_string(e.hi) +
                          "} is not a pair of distinct vertices of AQ_" +
                          std::to_string(n),
                      e, std::nullopt);
    }
  }
  for (const Edge& e : tree.edges_) {
    if (!labels_adjacent(e.lo, e.hi)) {
      throw TreeError(TreeDefect::kNotSubgraph,
                      describe(e, n) + " is not an edge of AQ_" + std::to_string(n),
                      e, std::nullopt);
    }
  }
  const std::size_t expected = tree.vertex_count_ - 1;
  if (tree.edges_.size() > expected) {
    throw TreeError(TreeDefect::kWrongEdgeCount,
                    std::to_string(tree.edges_.size()) + " edges, a spanning tree of AQ_" +
                        std::to_string(n) + " has " + std::to_string(expected),
                    tree.edges_[expected], std::nullopt);
  }
  DisjointSets sets(tree.vertex_count_);
  for (const Edge& e : tree.edges_) {
    if (!sets.unite(e.lo, e.hi)) {
      throw TreeError(TreeDefect::kCyclic, describe(e, n) + " closes a cycle", e,
                      std::nullopt);
    }
  }
  for (Label v = 0; v < tree.vertex_count_; ++v) {
    if (sets.find(v) != 0) {
      throw TreeError(TreeDefect::kDisconnected,
                      "vertex " + to_binary(v, n) + " is not connected to " +
                          to_binary(0, n),
                      std::nullopt, v);
    }
  }
  tree.build_adjacency();
  return tree;
}

void SpanningTree::build_adjacency() {
  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.lo + 1];
    ++offsets_[e.hi + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.lo]++] = e.hi;
    adjacency_[fill[e.hi]++] = e.lo;
  }
  for (Label v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

bool SpanningTree::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.lo, e.hi));
}

std::vector<std::uint8_t> SpanningTree::degree_table() const {
  std::vector<std::uint8_t> table(vertex_count_);
  for (Label v = 0; v < vertex_count_; ++v) {
    table[v] = static_cast<std::uint8_t>(std::min(degree(v), 255));
  }
  return table;
}

void SpanningTree::check_vertex(const VertexId& v) const {
  if (v.dim() != n_) {
    throw Error(ErrorKind::kInvalidInput, "vertex " + v.to_binary() +
                                              " is not a vertex of AQ_" +
                                              std::to_string(n_));
  }
}

std::vector<int> SpanningTree::distances_from(Label source) const {
  std::vector<int> dist(vertex_count_, -1);
  std::vector<Label> queue;
  queue.reserve(vertex_count_);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Label x = queue[head];
    for (Label y : neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::pair<Label, int> SpanningTree::farthest_from(Label source) const {
  const std::vector<int> dist = distances_from(source);
  Label best = source;
  for (Label v = 0; v < vertex_count_; ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return {best, dist[best]};
}

std::vector<Label> SpanningTree::path_labels(Label from, Label to) const {
  std::vector<Label> parent(vertex_count_, vertex_count_);
  std::vector<Label> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size() && parent[to] == vertex_count_; ++head) {
    const Label x = queue[head];
    for (Label y : neighbors(x)) {
      if (parent[y] == vertex_count_) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Label> path{to};
  for (Label x = to; x != from; x = parent[x]) path.push_back(parent[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

TreePath SpanningTree::path(const VertexId& u, const VertexId& v) const {
  check_vertex(u);
  check_vertex(v);
  return {path_labels(u.bits(), v.bits())};
}

int SpanningTree::eccentricity(const VertexId& u) const {
  check_vertex(u);
  return farthest_from(u.bits()).second;
}

int SpanningTree::diameter() const {
  const Label end = farthest_from(0).first;
  return farthest_from(end).second;
}

VertexId SpanningTree::center() const {
  if (vertex_count_ < 3) {
    throw Error(ErrorKind::kInvalidInput, "tree center needs at least 3 vertices");
  }
  // The center is the middle of any longest path.
  const Label a = farthest_from(0).first;
  const auto [b, length] = farthest_from(a);
  const std::vector<Label> longest = path_labels(a, b);
  const auto mid = static_cast<std::size_t>(length / 2);
  Label c = longest[mid];
  if (length % 2 == 1) c = std::min(c, longest[mid + 1]);
  return VertexId(c, n_);
}

int SpanningTree::radius() const { return (diameter() + 1) / 2; }

std::vector<VertexId> SpanningTree::internal_vertices() const {
  std::vector<VertexId> out;
  for (Label v = 0; v < vertex_count_; ++v) {
    if (degree(v) >= 2) out.emplace_back(v, n_);
  }
  return out;
}

std::size_t SpanningTree::internal_count() const {
  const std::vector<std::uint8_t> table = degree_table();
  return kernels::count_internal(table);
}

SpanningTree SpanningTree::doubled(const Edge& connector) const {
  const Label half = vertex_count_;
  std::vector<Edge> edges;
  edges.reserve(2 * edges_.size() + 1);
  for (const Edge& e : edges_) edges.push_back(e);
  for (const Edge& e : edges_) edges.push_back({e.lo | half, e.hi | half});
  edges.push_back(make_edge(connector.lo, connector.hi));
  return from_edges(n_ + 1, edges);
}

}  // namespace aqcist
