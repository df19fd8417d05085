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

#include "aqcist/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "aqcist/error.hpp"

namespace aqcist {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kStructural: return "structural";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorKind::kInvalidInput,
                "dimension " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxDimension) + "]");
  }
}

VertexId::VertexId(Label bits, int dim) : dim_(dim), bits_(bits) {
  check_dimension(dim);
  if (bits >= (Label{1} << dim)) {
    throw Error(ErrorKind::kInvalidInput,
                "label " + std::to_string(bits) + " does not fit in " +
                    std::to_string(dim) + " bits");
  }
}

VertexId VertexId::from_number(std::uint64_t label, int dim) {
  check_dimension(dim);
  if (label < 1 || label > (std::uint64_t{1} << dim)) {
    throw Error(ErrorKind::kInvalidInput,
                "vertex number " + std::to_string(label) + " outside [1, 2^" +
                    std::to_string(dim) + "]");
  }
  return VertexId(static_cast<Label>(label - 1), dim);
}

VertexId VertexId::from_binary(std::string_view text, int dim) {
  if (static_cast<int>(text.size()) != dim) {
    throw Error(ErrorKind::kInvalidInput,
                "expected " + std::to_string(dim) + " binary digits, got '" +
                    std::string(text) + "'");
  }
  return from_binary(text);
}

VertexId VertexId::from_binary(std::string_view text) {
  const int dim = static_cast<int>(text.size());
  check_dimension(dim);
  Label bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kInvalidInput,
                  "not a binary label: '" + std::string(text) + "'");
    }
    bits = (bits << 1) | static_cast<Label>(c - '0');
  }
  return VertexId(bits, dim);
}

int VertexId::bit(int k) const {
  if (k < 1 || k > dim_) {
    throw Error(ErrorKind::kInvalidInput, "bit index " + std::to_string(k) +
                                              " outside [1, " +
                                              std::to_string(dim_) + "]");
  }
  return static_cast<int>((bits_ >> (dim_ - k)) & 1u);
}

VertexId VertexId::prefixed(int b) const {
  return VertexId(bits_ | (b ? Label{1} << dim_ : Label{0}), dim_ + 1);
}

std::string VertexId::to_binary() const { return aqcist::to_binary(bits_, dim_); }

std::string to_binary(Label bits, int dim) {
  std::string s(static_cast<std::size_t>(dim), '0');
  for (int i = 0; i < dim; ++i) {
    if ((bits >> (dim - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

namespace {

void check_same_dimension(const VertexId& u, const VertexId& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorKind::kInvalidInput,
                "dimension mismatch: " + u.to_binary() + " vs " + v.to_binary());
  }
}

void check_build_dimension(int n, int max_n) {
  check_dimension(n);
  if (n > max_n) {
    throw Error(ErrorKind::kResource,
                "dimension " + std::to_string(n) + " exceeds build cap " +
                    std::to_string(max_n));
  }
}

}  // namespace

bool are_adjacent(const VertexId& u, const VertexId& v) {
  check_same_dimension(u, v);
  return labels_adjacent(u.bits(), v.bits());
}

std::vector<VertexId> neighbors(const VertexId& u) {
  const AugmentedCube cube(u.dim());
  std::vector<VertexId> out;
  for (Label v : cube.neighbors(u.bits())) out.emplace_back(v, u.dim());
  return out;
}

EdgeKind classify_edge(const VertexId& u, const VertexId& v) {
  check_same_dimension(u, v);
  if (!labels_adjacent(u.bits(), v.bits())) {
    throw Error(ErrorKind::kInvalidInput,
                "not an edge: " + u.to_binary() + " - " + v.to_binary());
  }
  const int n = u.dim();
  const Label d = u.bits() ^ v.bits();
  // A last-bit flip (d == 1) matches both rules; it is reported as a
  // hypercube edge so that the hypercube edges form exactly Q_n.
  if (std::has_single_bit(d)) {
    return {EdgeType::kHypercube, n - std::countr_zero(d)};
  }
  const int run = std::countr_one(d);
  return {EdgeType::kComplement, n - run + 1};
}

VertexId apply_edge_kind(const VertexId& u, const EdgeKind& kind) {
  const int n = u.dim();
  if (kind.split_dim < 1 || kind.split_dim > n ||
      (kind.type == EdgeType::kComplement && kind.split_dim == n)) {
    throw Error(ErrorKind::kInvalidInput, "bad edge kind for dimension " +
                                              std::to_string(n));
  }
  const int shift = n - kind.split_dim;
  const Label mask = kind.type == EdgeType::kHypercube
                         ? Label{1} << shift
                         : (Label{1} << (shift + 1)) - 1;
  return VertexId(u.bits() ^ mask, n);
}

GraphStats graph_stats(int n) {
  check_dimension(n);
  return {std::uint64_t{1} << n,
          (std::uint64_t{1} << (n - 1)) * static_cast<std::uint64_t>(2 * n - 1),
          2 * n - 1};
}

AugmentedCube::AugmentedCube(int n) : n_(n), edge_count_(0) {
  edge_count_ = graph_stats(n).edge_count;
}

std::vector<Label> AugmentedCube::neighbors(Label v) const {
  if (!contains(v)) {
    throw Error(ErrorKind::kInvalidInput, "label " + std::to_string(v) +
                                              " outside AQ_" + std::to_string(n_));
  }
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int shift = 0; shift < n_; ++shift) out.push_back(v ^ (Label{1} << shift));
  for (int run = 2; run <= n_; ++run) out.push_back(v ^ ((Label{1} << run) - 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> AugmentedCube::edges(int max_n) const {
  check_build_dimension(n_, max_n);
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Label v = 0; v < vertex_count(); ++v) {
    for (Label w : neighbors(v)) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

std::vector<Edge> build_recursive(int n, int max_n) {
  check_build_dimension(n, max_n);
  std::vector<Edge> edges{{0, 1}};
  for (int m = 2; m <= n; ++m) {
    const Label half = Label{1} << (m - 1);
    const Label full = (Label{1} << m) - 1;
    const std::size_t previous = edges.size();
    edges.reserve(2 * previous + 2 * half);
    for (std::size_t i = 0; i < previous; ++i) {
      edges.push_back({edges[i].lo | half, edges[i].hi | half});
    }
    for (Label x = 0; x < half; ++x) {
      edges.push_back(make_edge(x, x | half));  // equal suffixes
      edges.push_back(make_edge(x, x ^ full));  // complemented suffixes
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace aqcist
