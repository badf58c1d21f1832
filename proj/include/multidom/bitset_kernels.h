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

#ifndef MULTIDOM_BITSET_KERNELS_H_
#define MULTIDOM_BITSET_KERNELS_H_

#include <cstdint>
#include <span>
#include <string_view>

// Word-parallel kernels over packed vertex bitsets. Every kernel has a
// portable scalar reference; an AVX2 variant is selected at runtime when the
// CPU supports it. All variants must return bit-identical results.
namespace multidom::kernels {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  // |a|
  std::uint64_t (*popcount)(const Word* a, std::size_t words);
  // |a & b|
  std::uint64_t (*and_count)(const Word* a, const Word* b, std::size_t words);
  // |a & ~b|
  std::uint64_t (*andnot_count)(const Word* a, const Word* b,
                                std::size_t words);
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
};

const KernelTable& scalar();

// Null when the AVX2 translation unit is not built or the CPU lacks AVX2.
const KernelTable* avx2();

// Table used by the library. Picks the widest supported variant on first
// use; the MULTIDOM_KERNELS environment variable ("scalar" or "avx2")
// overrides the choice.
const KernelTable& active();

// Forces a backend by name. Returns false if it is unavailable here.
bool select(std::string_view name);

inline std::uint64_t popcount(std::span<const Word> a) {
  return active().popcount(a.data(), a.size());
}
inline std::uint64_t and_count(std::span<const Word> a,
                               std::span<const Word> b) {
  return active().and_count(a.data(), b.data(), a.size());
}
inline std::uint64_t andnot_count(std::span<const Word> a,
                                  std::span<const Word> b) {
  return active().andnot_count(a.data(), b.data(), a.size());
}
inline void or_into(std::span<Word> dst, std::span<const Word> src) {
  active().or_into(dst.data(), src.data(), dst.size());
}

namespace detail {
const KernelTable* avx2_table();  // defined in the AVX2 unit
}  // namespace detail

}  // namespace multidom::kernels

#endif  // MULTIDOM_BITSET_KERNELS_H_
