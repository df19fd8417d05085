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

// Compiled with -mavx2. Only reached through dispatch after a cpuid check.

#include <immintrin.h>

#include <array>
#include <bit>
#include <cstring>

#include "aqcist/kernels.hpp"

namespace aqcist::kernels::avx2 {
namespace {

// Byte j of kExpand[m] is bit j of m.
constexpr std::array<std::uint64_t, 256> make_expand_table() {
  std::array<std::uint64_t, 256> table{};
  for (unsigned m = 0; m < 256; ++m) {
    std::uint64_t bytes = 0;
    for (unsigned j = 0; j < 8; ++j) {
      if ((m >> j) & 1u) bytes |= std::uint64_t{1} << (8 * j);
    }
    table[m] = bytes;
  }
  return table;
}

constexpr auto kExpand = make_expand_table();

// 0xFF in every byte where x >= 2 (unsigned).
inline __m256i at_least_two(__m256i x) {
  const __m256i two = _mm256_set1_epi8(2);
  return _mm256_cmpeq_epi8(_mm256_max_epu8(x, two), x);
}

}  // namespace

void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out) {
  const std::size_t size = candidates.size();
  const __m256i vu = _mm256_set1_epi32(static_cast<int>(u));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= size; i += 8) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidates.data() + i));
    const __m256i d = _mm256_xor_si256(vu, v);
    const __m256i single =
        _mm256_cmpeq_epi32(_mm256_and_si256(d, _mm256_sub_epi32(d, one)), zero);
    const __m256i suffix =
        _mm256_cmpeq_epi32(_mm256_and_si256(d, _mm256_add_epi32(d, one)), zero);
    const __m256i is_zero = _mm256_cmpeq_epi32(d, zero);
    const __m256i adjacent =
        _mm256_andnot_si256(is_zero, _mm256_or_si256(single, suffix));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(adjacent));
    std::memcpy(out.data() + i, &kExpand[static_cast<unsigned>(mask)], 8);
  }
  scalar::adjacency_row(u, candidates.subspan(i), out.subspan(i));
}

std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables) {
  if (degree_tables.size() < 2) return kNotFound;
  const std::size_t length = degree_tables.front().size();
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t v = 0;
  for (; v + 32 <= length; v += 32) {
    __m256i count = _mm256_setzero_si256();
    for (const auto& table : degree_tables) {
      const __m256i x =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.data() + v));
      count = _mm256_sub_epi8(count, at_least_two(x));
    }
    const auto mask = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpgt_epi8(count, one)));
    if (mask != 0) return v + static_cast<std::size_t>(std::countr_zero(mask));
  }
  for (; v < length; ++v) {
    int internal = 0;
    for (const auto& table : degree_tables) {
      if (table[v] >= 2 && ++internal == 2) return v;
    }
  }
  return kNotFound;
}

std::size_t count_internal(std::span<const std::uint8_t> degrees) {
  std::size_t total = 0;
  std::size_t v = 0;
  for (; v + 32 <= degrees.size(); v += 32) {
    const __m256i x =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(degrees.data() + v));
    total += static_cast<std::size_t>(std::popcount(
        static_cast<std::uint32_t>(_mm256_movemask_epi8(at_least_two(x)))));
  }
  return total + scalar::count_internal(degrees.subspan(v));
}

}  // namespace aqcist::kernels::avx2
