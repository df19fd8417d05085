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

#include "aqcist/family.hpp"

#include <string>

namespace aqcist {

const char* to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kTable: return "table";
    case Provenance::kDrawing: return "drawing";
    case Provenance::kSearch: return "search";
    case Provenance::kLifted: return "lifted";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  for (Provenance p : {Provenance::kTable, Provenance::kDrawing,
                       Provenance::kSearch, Provenance::kLifted}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

CistFamily::CistFamily(int n, std::vector<SpanningTree> trees, Provenance provenance)
    : n_(n), trees_(std::move(trees)), provenance_(provenance) {
  check_dimension(n);
  if (trees_.empty()) throw Error(ErrorKind::kInvalidInput, "family has no trees");
  for (const SpanningTree& t : trees_) {
    if (t.dimension() != n) {
      throw Error(ErrorKind::kInvalidInput,
                  "tree of AQ_" + std::to_string(t.dimension()) +
                      " in a family on AQ_" + std::to_string(n));
    }
  }
}

CistFamily CistFamily::from_candidate(const CandidateFamily& candidate) {
  std::vector<SpanningTree> trees;
  trees.reserve(candidate.trees.size());
  for (const auto& edges : candidate.trees) {
    trees.push_back(SpanningTree::from_edges(candidate.n, edges));
  }
  return CistFamily(candidate.n, std::move(trees), candidate.provenance);
}

std::vector<int> CistFamily::diameters() const {
  std::vector<int> out;
  out.reserve(trees_.size());
  for (const SpanningTree& t : trees_) out.push_back(t.diameter());
  return out;
}

CandidateFamily CistFamily::to_candidate() const {
  CandidateFamily out{n_, {}, provenance_};
  out.trees.reserve(trees_.size());
  for (const SpanningTree& t : trees_) out.trees.push_back(t.edges());
  return out;
}

bool operator==(const CistFamily& a, const CistFamily& b) {
  if (a.n_ != b.n_ || a.provenance_ != b.provenance_ || a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.trees_[i].edges() != b.trees_[i].edges()) return false;
  }
  return true;
}

}  // namespace aqcist
