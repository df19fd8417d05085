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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqcist/error.hpp"
#include "aqcist/topology.hpp"
#include "aqcist/vertex.hpp"

namespace aqcist {

enum class TreeDefect {
  kBadLabel,        // endpoint outside [0, 2^n) or a self-loop
  kWrongEdgeCount,  // |E| != 2^n - 1
  kNotSubgraph,     // an edge that is not an edge of AQ_n
  kCyclic,
  kDisconnected,
};

const char* to_string(TreeDefect defect);

/// Raised by SpanningTree::from_edges. Carries the offending edge or vertex.
class TreeError : public Error {
 public:
  TreeError(TreeDefect defect, const std::string& message,
            std::optional<Edge> edge, std::optional<Label> vertex);

  TreeDefect defect() const noexcept { return defect_; }
  const std::optional<Edge>& witness_edge() const noexcept { return edge_; }
  const std::optional<Label>& witness_vertex() const noexcept { return vertex_; }

 private:
  TreeDefect defect_;
  std::optional<Edge> edge_;
  std::optional<Label> vertex_;
};

/// Unique path between two vertices of a tree, source first.
struct TreePath {
  std::vector<Label> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

/// A spanning tree of AQ_n. Immutable once built; all queries are const.
class SpanningTree {
 public:
  /// Validates and builds. Checks, in order: labels, edge count, AQ_n
  /// membership, acyclicity, connectivity.
  static SpanningTree from_edges(int n, std::span<const Edge> edges);

  int dimension() const noexcept { return n_; }
  std::uint32_t vertex_count() const noexcept { return vertex_count_; }

  /// Sorted by (lo, hi).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains_edge(const Edge& e) const;

  std::span<const Label> neighbors(Label v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Label v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  /// Per-vertex degree saturated to 255.
  std::vector<std::uint8_t> degree_table() const;

  /// Breadth-first distances from `source` to every vertex.
  std::vector<int> distances_from(Label source) const;

  TreePath path(const VertexId& u, const VertexId& v) const;
  int eccentricity(const VertexId& u) const;

  /// Exact diameter by two farthest-vertex passes.
  int diameter() const;

  /// Minimum-eccentricity vertex; the smaller label when there are two.
  /// Requires at least 3 vertices.
  VertexId center() const;

  /// Eccentricity of center(); defined for every tree (1 for K_2).
  int radius() const;

  /// Vertices of degree >= 2, sorted.
  std::vector<VertexId> internal_vertices() const;
  std::size_t internal_count() const;

  /// The tree on AQ_{n+1} made of the 0- and 1-prefixed copies of this tree
  /// plus `connector`, which must join the two copies.
  SpanningTree doubled(const Edge& connector) const;

 private:
  SpanningTree() = default;
  void build_adjacency();
  void check_vertex(const VertexId& v) const;
  std::pair<Label, int> farthest_from(Label source) const;
  std::vector<Label> path_labels(Label from, Label to) const;

  int n_ = 0;
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Label> adjacency_;
};

}  // namespace aqcist
