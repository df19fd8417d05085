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

#include "aqcist/lifting.hpp"

#include <string>

#include "aqcist/base_families.hpp"
#include "aqcist/verification.hpp"

namespace aqcist {

std::pair<VertexId, VertexId> connector_edge(const SpanningTree& tree) {
  if (tree.vertex_count() < 3 || tree.diameter() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                "connector needs a tree of diameter at least 2");
  }
  const VertexId c = tree.center();
  return {c.prefixed(0), c.prefixed(1)};
}

SpanningTree lift_tree(const SpanningTree& tree) {
  const auto [low, high] = connector_edge(tree);
  return tree.doubled(make_edge(low.bits(), high.bits()));
}

CistFamily lift_family(const CistFamily& family, const LiftOptions& options) {
  const int n = family.dimension();
  if (n < 3 || (n < 5 && !options.allow_small_base)) {
    throw Error(ErrorKind::kUnsupported,
                "lifting from AQ_" + std::to_string(n) +
                    " requires n >= 5 (n = 3, 4 only with allow_small_base)");
  }
  if (n + 1 > kMaxDimension) {
    throw Error(ErrorKind::kResource, "cannot lift beyond AQ_" + std::to_string(kMaxDimension));
  }
  const VerificationReport report = verify_characterization(family);
  if (!report.pass) {
    const Check* failure = report.first_failure();
    throw Error(ErrorKind::kInvalidInput,
                std::string("input family is not a CIST family (") +
                    (failure ? to_string(failure->condition) : "unknown") + ")");
  }
  std::vector<SpanningTree> lifted;
  lifted.reserve(family.size());
  for (const SpanningTree& t : family.trees()) lifted.push_back(lift_tree(t));
  return CistFamily(n + 1, std::move(lifted), Provenance::kLifted);
}

CistFamily construct_cists(int n, const ConstructOptions& options) {
  if (n < 3) {
    throw Error(ErrorKind::kUnsupported,
                "AQ_" + std::to_string(n) + " is too small; construction needs n >= 3");
  }
  if (n > options.max_n) {
    throw Error(ErrorKind::kResource,
                "n = " + std::to_string(n) + " exceeds the construction cap " +
                    std::to_string(options.max_n));
  }
  if (n <= 5) return base_family(n);
  CistFamily family = base_family(5);
  for (int m = 5; m < n; ++m) family = lift_family(family);
  return family;
}

}  // namespace aqcist
