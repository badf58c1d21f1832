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

#include <random>
#include <vector>

#include "doctest.h"
#include "multidom/bitset_kernels.h"
#include "multidom/graph.h"
#include "test_graphs.h"

namespace multidom {
namespace {

using kernels::Word;

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t count) {
  std::vector<Word> out(count);
  for (Word& w : out) w = rng();
  return out;
}

// Restores the process-wide backend after a test forces one.
struct BackendGuard {
  std::string saved{kernels::active().name};
  ~BackendGuard() { kernels::select(saved); }
};

TEST_CASE("scalar kernels match a bit-by-bit count") {
  const Word a[] = {0xffULL, 0x8000000000000001ULL, 0};
  const Word b[] = {0x0fULL, 0x1ULL, ~Word{0}};
  const auto& s = kernels::scalar();
  CHECK(s.popcount(a, 3) == 10);
  CHECK(s.and_count(a, b, 3) == 5);
  CHECK(s.andnot_count(a, b, 3) == 5);
  Word dst[] = {0x1ULL, 0, 0};
  s.or_into(dst, b, 3);
  CHECK(dst[0] == 0x0fULL);
  CHECK(dst[2] == ~Word{0});
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  const kernels::KernelTable* wide = kernels::avx2();
  if (wide == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  const auto& ref = kernels::scalar();
  std::mt19937_64 rng(7);
  // Lengths cover empty input, sub-block tails and several full blocks.
  for (std::size_t len = 0; len <= 41; ++len) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_words(rng, len);
      auto b = random_words(rng, len);
      if (rep % 5 == 0) b.assign(len, ~Word{0});
      CHECK(wide->popcount(a.data(), len) == ref.popcount(a.data(), len));
      CHECK(wide->and_count(a.data(), b.data(), len) ==
            ref.and_count(a.data(), b.data(), len));
      CHECK(wide->andnot_count(a.data(), b.data(), len) ==
            ref.andnot_count(a.data(), b.data(), len));
      auto d1 = a;
      auto d2 = a;
      wide->or_into(d1.data(), b.data(), len);
      ref.or_into(d2.data(), b.data(), len);
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("greedy traces do not depend on the kernel backend") {
  if (kernels::avx2() == nullptr) return;
  BackendGuard guard;
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    // Large enough that rows span several 256-bit blocks.
    const Graph g = generate(FamilySpec::erdos_renyi(300, 0.05, rng()));
    REQUIRE(kernels::select("scalar"));
    const Solution scalar_dom = greedy_dominating_set(g);
    const Solution scalar_kdom = greedy_kdominating_set(g, 2);
    REQUIRE(kernels::select("avx2"));
    CHECK(greedy_dominating_set(g) == scalar_dom);
    CHECK(greedy_kdominating_set(g, 2) == scalar_kdom);
  }
}

TEST_CASE("select rejects unknown backends") {
  BackendGuard guard;
  CHECK_FALSE(kernels::select("neon-on-x86"));
  CHECK(kernels::select("scalar"));
  CHECK(kernels::active().name == "scalar");
}

}  // namespace
}  // namespace multidom
