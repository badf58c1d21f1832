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

// Compiled with -mavx2 -mpopcnt; only reached through the runtime dispatch in
// bitset_kernels.cc after a CPUID check.

#include <immintrin.h>

#include "multidom/bitset_kernels.h"

namespace multidom::kernels {
namespace {

// Nibble-lookup population count (Mula et al.), 256 bits per step. Byte
// counts are folded into four 64-bit lanes with a SAD against zero.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                         _mm256_shuffle_epi8(lookup, hi));
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

template <typename Combine>
std::uint64_t count_blocks(std::size_t words, Combine combine,
                           std::size_t& done) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc,
                           _mm256_sad_epu8(popcount_bytes(combine(i)), zero));
  }
  done = i;
  return horizontal_sum(acc);
}

std::uint64_t popcount_avx2(const Word* a, std::size_t words) {
  std::size_t i = 0;
  std::uint64_t total =
      count_blocks(words, [a](std::size_t j) { return load(a + j); }, i);
  for (; i < words; ++i) total += _mm_popcnt_u64(a[i]);
  return total;
}

std::uint64_t and_count_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  std::uint64_t total = count_blocks(
      words,
      [a, b](std::size_t j) { return _mm256_and_si256(load(a + j), load(b + j)); },
      i);
  for (; i < words; ++i) total += _mm_popcnt_u64(a[i] & b[i]);
  return total;
}

std::uint64_t andnot_count_avx2(const Word* a, const Word* b,
                                std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y.
  std::uint64_t total = count_blocks(
      words,
      [a, b](std::size_t j) {
        return _mm256_andnot_si256(load(b + j), load(a + j));
      },
      i);
  for (; i < words; ++i) total += _mm_popcnt_u64(a[i] & ~b[i]);
  return total;
}

void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i d = load(dst + i);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(d, load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

constexpr KernelTable kAvx2{"avx2", popcount_avx2, and_count_avx2,
                            andnot_count_avx2, or_into_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() { return &kAvx2; }
}  // namespace detail

}  // namespace multidom::kernels
