// Copyright 2026 The multidom Authors
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

#include "multidom/bitset_kernels.h"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

namespace multidom::kernels {
namespace {

std::uint64_t popcount_scalar(const Word* a, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t and_count_scalar(const Word* a, const Word* b,
                               std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::uint64_t andnot_count_scalar(const Word* a, const Word* b,
                                  std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += std::popcount(a[i] & ~b[i]);
  }
  return total;
}

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

constexpr KernelTable kScalar{"scalar", popcount_scalar, and_count_scalar,
                              andnot_count_scalar, or_into_scalar};

std::atomic<const KernelTable*> g_active{nullptr};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* pick_default() {
  if (const char* env = std::getenv("MULTIDOM_KERNELS")) {
    std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && avx2() != nullptr) return avx2();
  }
  if (const KernelTable* t = avx2()) return t;
  return &kScalar;
}

}  // namespace

#ifndef MULTIDOM_HAVE_AVX2_TU
namespace detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace detail
#endif

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
  static const bool supported = cpu_has_avx2();
  return supported ? detail::avx2_table() : nullptr;
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const KernelTable* picked = pick_default();
    g_active.compare_exchange_strong(t, picked, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

bool select(std::string_view name) {
  const KernelTable* t = nullptr;
  if (name == "scalar") {
    t = &kScalar;
  } else if (name == "avx2") {
    t = avx2();
  }
  if (t == nullptr) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

}  // namespace multidom::kernels
