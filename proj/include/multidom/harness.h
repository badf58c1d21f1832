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

#ifndef MULTIDOM_HARNESS_H_
#define MULTIDOM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multidom/exact.h"
#include "multidom/graph.h"
#include "multidom/greedy.h"
#include "multidom/ledger.h"

namespace multidom {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kStar,
  kCompleteBipartite,
  kErdosRenyi,
  kGapWitness,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

// Parameters per family:
//   path, cycle, complete, star   n (star(n) is K_{1,n-1}; cycle needs n >= 3)
//   complete_bipartite            a, b
//   erdos_renyi                   n, p, seed
//   gap_witness                   k >= 2, giving the star K_{1,3k}
struct FamilySpec {
  Family family = Family::kPath;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::size_t k = 0;

  static FamilySpec path(std::size_t n) { return {Family::kPath, n}; }
  static FamilySpec cycle(std::size_t n) { return {Family::kCycle, n}; }
  static FamilySpec complete(std::size_t n) { return {Family::kComplete, n}; }
  static FamilySpec star(std::size_t n) { return {Family::kStar, n}; }
  static FamilySpec complete_bipartite(std::size_t a, std::size_t b) {
    return {Family::kCompleteBipartite, 0, a, b};
  }
  static FamilySpec erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    return {Family::kErdosRenyi, n, 0, 0, p, seed};
  }
  static FamilySpec gap_witness(std::size_t k) {
    return {Family::kGapWitness, 0, 0, 0, 0.0, 0, k};
  }

  // Throws PreconditionError on invalid parameters.
  void validate() const;
  // "n=10;p=0.3" style parameter string, without the seed.
  std::string params() const;
  std::string label() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Deterministic in the spec. Erdos-Renyi draws one value from
// std::mt19937_64(seed) per vertex pair (i, j), i < j, in lexicographic
// order; the top 53 bits form u in [0, 1) and the edge is present iff u < p.
Graph generate(const FamilySpec& spec);

struct RunSpec {
  Mode mode = Mode::kDom;
  std::size_t k = 1;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

// ln(max_degree + 1) + 1 for DOM and KTUPLE, ln(max_degree + k) + 1 for KDOM.
double theorem_bound(Mode mode, std::size_t max_degree, std::size_t k);

struct RatioReport {
  std::size_t instance_id = 0;
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  Mode mode = Mode::kDom;
  std::size_t k = 1;
  std::size_t greedy_size = 0;
  // Absent when the instance exceeds the oracle cap.
  std::optional<std::size_t> exact_size;
  std::optional<double> ratio;
  double bound = 0.0;
  // greedy <= bound * exact; true when there is no exact value to compare.
  bool bound_satisfied = false;
  bool ledger_checks_passed = false;
  bool trivial = false;
  // Non-empty when the combination was not run (e.g. k > min degree + 1).
  std::string skip_reason;
  // Non-empty when a solver raised an error.
  std::string error;
  double greedy_ms = 0.0;
  double ledger_ms = 0.0;
  double exact_ms = 0.0;
  // Per-vertex neighbourhood bound (lhs, bound), filled on request.
  std::vector<VertexBoundRow> ledger_rows;

  bool skipped() const { return !skip_reason.empty(); }
};

struct VerifyOptions {
  std::size_t max_n = kDefaultExactCap;
  bool keep_ledger_rows = false;
};

// Greedy solve, ledger checks, replay check and (within the cap) exact
// solve for one instance.
RatioReport verify_instance(const Graph& g, Mode mode, std::size_t k,
                            const VerifyOptions& options = {});

struct CorpusSpec {
  std::vector<FamilySpec> instances;
  std::vector<RunSpec> runs;
  std::size_t max_n = kDefaultExactCap;
};

struct CorpusSummary {
  std::size_t reports = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t unchecked = 0;  // no exact value (over the cap)
  double max_ratio = 0.0;
  std::size_t bound_violations = 0;
  std::size_t ledger_failures = 0;

  bool passed() const {
    return errors == 0 && bound_violations == 0 && ledger_failures == 0;
  }
};

struct CorpusResult {
  std::vector<RatioReport> reports;  // by instance id, then run order
  CorpusSummary summary;
};

// One report per (instance, run). Runs whose precondition fails on an
// instance become skip records. Throws PreconditionError when nothing is
// left to run. Output is independent of jobs.
CorpusResult run_corpus(const CorpusSpec& spec, std::size_t jobs = 1);

CorpusSummary summarize(const std::vector<RatioReport>& reports);

// Erdos-Renyi n in {8, 12, 16} x p in {0.2, 0.4, 0.7} x seeds 1..10, the
// structured families at n in {8, 12, 16}, gap witnesses k = 2..5; runs DOM,
// KTUPLE k = 1..3, KDOM k = 1..3.
CorpusSpec default_corpus();

// ln(Delta + k) + 1 <= ln(2 Delta) + 1 for 1 <= k <= Delta <= delta_max,
// with equality exactly when k = Delta.
bool check_ratio_improvement(std::size_t delta_max);

// The k-tuple greedy (multiplicity 2) on gap_witness(k): the centre is
// picked first, and in the second iteration the centre's uncovered closed
// neighbourhood is still strictly larger than that of the vertex picked.
struct GapWitnessResult {
  std::size_t k = 0;
  Vertex centre = 0;
  Vertex first = 0;
  Vertex second = 0;
  std::size_t second_uncovered = 0;  // |U_1[d_2]|
  std::size_t centre_uncovered = 0;  // |U_1[centre]|
  bool holds = false;
};

GapWitnessResult check_gap_witness(std::size_t k);

}  // namespace multidom

#endif  // MULTIDOM_HARNESS_H_
