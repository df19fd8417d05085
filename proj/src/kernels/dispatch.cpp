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

#include <atomic>

#include "aqcist/kernels.hpp"

namespace aqcist::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(AQCIST_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

const char* to_string(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  return backend == Backend::kScalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  current().store(backend, std::memory_order_relaxed);
  return true;
}

void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out) {
  if (active_backend() == Backend::kAvx2) {
    avx2::adjacency_row(u, candidates, out);
  } else {
    scalar::adjacency_row(u, candidates, out);
  }
}

std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables) {
  return active_backend() == Backend::kAvx2
             ? avx2::first_shared_internal(degree_tables)
             : scalar::first_shared_internal(degree_tables);
}

std::size_t count_internal(std::span<const std::uint8_t> degrees) {
  return active_backend() == Backend::kAvx2 ? avx2::count_internal(degrees)
                                            : scalar::count_internal(degrees);
}

#if !defined(AQCIST_HAVE_AVX2_TU)
// Non-x86 builds: the AVX2 entry points exist but are never selected.
namespace avx2 {
void adjacency_row(Label u, std::span<const Label> candidates,
                   std::span<std::uint8_t> out) {
  scalar::adjacency_row(u, candidates, out);
}
std::size_t first_shared_internal(
    std::span<const std::span<const std::uint8_t>> degree_tables) {
  return scalar::first_shared_internal(degree_tables);
}
std::size_t count_internal(std::span<const std::uint8_t> degrees) {
  return scalar::count_internal(degrees);
}
}  // namespace avx2
#endif

}  // namespace aqcist::kernels
