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
#include <utility>
#include <vector>

#include "aqcist/family.hpp"
#include "aqcist/topology.hpp"

namespace aqcist {

enum class VerifyMode { kCharacterization, kBruteForce, kBoth };

enum class Condition {
  kSpanning,
  kAcyclic,
  kSubgraph,
  kEdgeDisjoint,
  kInternalOverlap,
  kPathVertexIntersection,
  kPathEdgeIntersection,
};

enum class CheckStatus { kPass, kFail, kSkipped };

const char* to_string(VerifyMode mode);
const char* to_string(Condition condition);
const char* to_string(CheckStatus status);
std::optional<VerifyMode> parse_verify_mode(std::string_view text);

/// Concrete evidence for a failed check. Tree indices are 0-based.
struct Witness {
  std::vector<int> trees;
  std::optional<Edge> edge;
  std::optional<Label> vertex;
  std::optional<std::pair<Label, Label>> pair;
  std::vector<std::vector<Label>> paths;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Check {
  Condition condition;
  CheckStatus status = CheckStatus::kPass;
  std::optional<Witness> witness;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  bool pass = false;
  VerifyMode mode = VerifyMode::kCharacterization;
  int n = 0;
  int k = 0;
  std::vector<Check> checks;
  /// Per tree; empty when the tree is not a valid spanning tree.
  std::vector<std::optional<int>> diameters;
  std::vector<std::optional<int>> internal_counts;

  const Check* find(Condition condition) const;
  /// First failed check in check order, or nullptr.
  const Check* first_failure() const;
};

struct VerifyOptions {
  /// Largest n accepted by the brute-force verifier.
  int bruteforce_max_n = 6;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Edge-disjoint spanning trees in which every vertex is internal in at most
/// one tree. Throws Error(kStructural) for uninterpretable input.
VerificationReport verify_characterization(const CandidateFamily& family);
VerificationReport verify_characterization(const CistFamily& family);

/// Checks the definition directly: for every vertex pair and tree pair, the
/// two tree paths share only their endpoints and no edge.
VerificationReport verify_bruteforce(const CandidateFamily& family,
                                     const VerifyOptions& options = {});
VerificationReport verify_bruteforce(const CistFamily& family,
                                     const VerifyOptions& options = {});

/// kBoth runs both verifiers and throws Error(kInternal) if they disagree.
VerificationReport verify_family(const CandidateFamily& family, VerifyMode mode,
                                 const VerifyOptions& options = {});
VerificationReport verify_family(const CistFamily& family, VerifyMode mode,
                                 const VerifyOptions& options = {});

/// kBoth up to the brute-force cap, characterization above it.
VerifyMode default_mode(int n, const VerifyOptions& options = {});

/// 0 pass, 1 fail.
int exit_code(const VerificationReport& report);

}  // namespace aqcist
