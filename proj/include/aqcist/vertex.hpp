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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace aqcist {

/// Raw 0-based vertex value: the binary label read as an unsigned integer with
/// u_1 as the most significant bit.
using Label = std::uint32_t;

inline constexpr int kMaxDimension = 30;

/// Default cap for operations that materialize the whole edge set of AQ_n.
inline constexpr int kDefaultBuildCap = 20;

/// Throws Error(kInvalidInput) unless 1 <= n <= kMaxDimension.
void check_dimension(int n);

/// One vertex of AQ_n. The label u_1 u_2 ... u_n is stored as an integer with
/// u_1 in the most significant position, so 00000 is 0 and 11111 is 31.
/// The 1-based numbering used in printed tables is value + 1.
class VertexId {
 public:
  VertexId(Label bits, int dim);

  static VertexId from_number(std::uint64_t label, int dim);
  /// Parses a string of exactly `dim` characters from {0,1}.
  static VertexId from_binary(std::string_view text, int dim);
  /// Parses a string of '0'/'1' characters; the dimension is its length.
  static VertexId from_binary(std::string_view text);

  Label bits() const noexcept { return bits_; }
  int dim() const noexcept { return dim_; }
  std::uint64_t number() const noexcept { return std::uint64_t{bits_} + 1; }

  /// Bit u_k, 1 <= k <= dim.
  int bit(int k) const;

  /// The label `b u_1 ... u_n` in AQ_{n+1}.
  VertexId prefixed(int b) const;

  std::string to_binary() const;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;

 private:
  // dim_ is declared first so that ordering compares within one dimension by
  // value.
  int dim_;
  Label bits_;
};

std::string to_binary(Label bits, int dim);

}  // namespace aqcist
