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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqcist/topology.hpp"
#include "aqcist/tree.hpp"

namespace aqcist {

enum class Provenance { kTable, kDrawing, kSearch, kLifted };

const char* to_string(Provenance provenance);
std::optional<Provenance> parse_provenance(std::string_view text);

/// Unvalidated family: per-tree edge lists over AQ_n. This is what files
/// decode into and what the verifiers consume, so that malformed trees
/// produce a report instead of an exception.
struct CandidateFamily {
  int n = 0;
  std::vector<std::vector<Edge>> trees;
  Provenance provenance = Provenance::kSearch;
};

/// Ordered spanning trees of one AQ_n claimed to be completely independent.
/// The container only enforces a common dimension; the CIST property is
/// established by the verification module.
class CistFamily {
 public:
  CistFamily(int n, std::vector<SpanningTree> trees, Provenance provenance);

  /// Validates each tree with SpanningTree::from_edges (throws TreeError).
  static CistFamily from_candidate(const CandidateFamily& candidate);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<SpanningTree>& trees() const noexcept { return trees_; }
  const SpanningTree& tree(std::size_t i) const { return trees_.at(i); }
  Provenance provenance() const noexcept { return provenance_; }

  std::vector<int> diameters() const;
  CandidateFamily to_candidate() const;

  friend bool operator==(const CistFamily& a, const CistFamily& b);

 private:
  int n_;
  std::vector<SpanningTree> trees_;
  Provenance provenance_;
};

}  // namespace aqcist
