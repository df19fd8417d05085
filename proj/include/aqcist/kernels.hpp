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

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant. The dispatching entry points pick a backend once at first use
// based on cpuid; the per-backend namespaces are exposed so tests can check
// that every variant agrees with the reference.

#include <cstddef>
#include <cstdint>
#include <span>

#include "aqcist/vertex.hpp"

namespace aqcist::kernels {

enum class Backend { kScalar, kAvx2 };

const char* to_string(Backend backend);

bool backend_available(Backend backend);

/// Backend used by the dispatching entry points.
Backend active_backend();

/// Forces a backend; returns false (and changes nothing) if it is unavailable.
/// Intended for tests and benchmarking.
bool set_backend(Backend backend);

inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

/// out[i] = 1 if u and candidates[i] are adjacent in AQ_n, else 0.
/// Requires out.size() >= candidates.size().
void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out);

/// Each table holds per-vertex tree degrees (saturated to 255) for one tree;
/// all tables have the same length. Returns the smallest vertex index whose
/// degree is >= 2 in at least two tables, or kNotFound.
std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables);

/// Number of entries >= 2.
std::size_t count_internal(std::span<const std::uint8_t> degrees);

namespace scalar {
void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out);
std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables);
std::size_t count_internal(std::span<const std::uint8_t> degrees);
}  // namespace scalar

namespace avx2 {
void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out);
std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables);
std::size_t count_internal(std::span<const std::uint8_t> degrees);
}  // namespace avx2

}  // namespace aqcist::kernels
