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

#include "multidom/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <thread>

#include "multidom/errors.h"

namespace multidom {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kPath:
      return "path";
    case Family::kCycle:
      return "cycle";
    case Family::kComplete:
      return "complete";
    case Family::kStar:
      return "star";
    case Family::kCompleteBipartite:
      return "complete_bipartite";
    case Family::kErdosRenyi:
      return "erdos_renyi";
    case Family::kGapWitness:
      return "gap_witness";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kComplete,
                   Family::kStar, Family::kCompleteBipartite,
                   Family::kErdosRenyi, Family::kGapWitness}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  auto fail = [this](const std::string& why) {
    throw PreconditionError(std::string(family_name(family)) + ": " + why);
  };
  switch (family) {
    case Family::kPath:
    case Family::kComplete:
    case Family::kStar:
      if (n < 1) fail("n must be at least 1");
      break;
    case Family::kCycle:
      if (n < 3) fail("n must be at least 3");
      break;
    case Family::kCompleteBipartite:
      if (a < 1 || b < 1) fail("both sides must be non-empty");
      break;
    case Family::kErdosRenyi:
      if (n < 1) fail("n must be at least 1");
      if (!(p >= 0.0 && p <= 1.0)) fail("p must lie in [0, 1]");
      break;
    case Family::kGapWitness:
      if (k < 2) fail("k must be at least 2");
      break;
  }
}

std::string FamilySpec::params() const {
  switch (family) {
    case Family::kPath:
    case Family::kCycle:
    case Family::kComplete:
    case Family::kStar:
      return "n=" + std::to_string(n);
    case Family::kCompleteBipartite:
      return "a=" + std::to_string(a) + ";b=" + std::to_string(b);
    case Family::kErdosRenyi:
      return "n=" + std::to_string(n) + ";p=" + format_double(p);
    case Family::kGapWitness:
      return "k=" + std::to_string(k);
  }
  return "";
}

std::string FamilySpec::label() const {
  std::string out = std::string(family_name(family)) + "(" + params();
  if (family == Family::kErdosRenyi) out += ";seed=" + std::to_string(seed);
  return out + ")";
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::kPath:
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edges(spec.n, edges);
    case Family::kCycle:
      for (Vertex v = 0; v < spec.n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % spec.n));
      }
      return Graph::from_edges(spec.n, edges);
    case Family::kComplete:
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      }
      return Graph::from_edges(spec.n, edges);
    case Family::kStar:
      for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(0, v);
      return Graph::from_edges(spec.n, edges);
    case Family::kCompleteBipartite:
      for (Vertex u = 0; u < spec.a; ++u) {
        for (Vertex v = 0; v < spec.b; ++v) {
          edges.emplace_back(u, static_cast<Vertex>(spec.a + v));
        }
      }
      return Graph::from_edges(spec.a + spec.b, edges);
    case Family::kErdosRenyi: {
      std::mt19937_64 rng(spec.seed);
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
          const double draw =
              static_cast<double>(rng() >> 11) * 0x1.0p-53;
          if (draw < spec.p) edges.emplace_back(u, v);
        }
      }
      return Graph::from_edges(spec.n, edges);
    }
    case Family::kGapWitness: {
      const std::size_t leaves = 3 * spec.k;
      for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
      return Graph::from_edges(leaves + 1, edges);
    }
  }
  throw PreconditionError("unknown family");
}

double theorem_bound(Mode mode, std::size_t max_degree, std::size_t k) {
  const double arg = mode == Mode::kKDom
                         ? static_cast<double>(max_degree + k)
                         : static_cast<double>(max_degree + 1);
  return std::log(arg) + 1.0;
}

RatioReport verify_instance(const Graph& g, Mode mode, std::size_t k,
                            const VerifyOptions& options) {
  if (mode == Mode::kDom) k = 1;
  RatioReport r;
  r.n = g.order();
  r.m = g.edge_count();
  r.max_degree = max_degree(g);
  r.min_degree = min_degree(g);
  r.mode = mode;
  r.k = k;
  r.bound = theorem_bound(mode, r.max_degree, k);

  auto t0 = std::chrono::steady_clock::now();
  const Solution sol = solve_greedy(g, mode, k);
  r.greedy_ms = elapsed_ms(t0);
  r.greedy_size = sol.chosen.size();
  r.trivial = sol.trivial;

  t0 = std::chrono::steady_clock::now();
  const CostLedger ledger = build_ledger(sol, g);
  LedgerCheckResult checks = run_ledger_checks(ledger);
  r.ledger_checks_passed = checks.passed() && replay_is_greedy(g, sol);
  r.ledger_ms = elapsed_ms(t0);
  if (options.keep_ledger_rows) r.ledger_rows = std::move(checks.rows);

  if (g.order() <= std::min(options.max_n, kHardExactCap)) {
    const ExactResult exact = exact_minimum(g, mode, k, options.max_n);
    r.exact_ms = std::chrono::duration<double, std::milli>(exact.time).count();
    r.exact_size = exact.optimum;
    r.ratio = static_cast<double>(r.greedy_size) /
              static_cast<double>(exact.optimum);
    r.bound_satisfied = static_cast<double>(r.greedy_size) <=
                        r.bound * (1.0 + 1e-9) *
                            static_cast<double>(exact.optimum);
  } else {
    r.bound_satisfied = true;
  }
  return r;
}

CorpusSummary summarize(const std::vector<RatioReport>& reports) {
  CorpusSummary s;
  for (const RatioReport& r : reports) {
    ++s.reports;
    if (r.skipped()) {
      ++s.skipped;
      continue;
    }
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    if (!r.exact_size) ++s.unchecked;
    if (r.ratio) s.max_ratio = std::max(s.max_ratio, *r.ratio);
    if (!r.bound_satisfied) ++s.bound_violations;
    if (!r.ledger_checks_passed) ++s.ledger_failures;
  }
  return s;
}

CorpusResult run_corpus(const CorpusSpec& spec, std::size_t jobs) {
  if (spec.instances.empty() || spec.runs.empty()) {
    throw PreconditionError("corpus needs at least one instance and one run");
  }
  struct Task {
    std::size_t instance;
    RunSpec run;
  };
  std::vector<Graph> graphs;
  graphs.reserve(spec.instances.size());
  for (const FamilySpec& f : spec.instances) graphs.push_back(generate(f));

  std::vector<RatioReport> reports;
  std::vector<Task> tasks;
  std::vector<std::size_t> task_slot;
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    const FamilySpec& f = spec.instances[i];
    const Graph& g = graphs[i];
    for (RunSpec run : spec.runs) {
      if (run.mode == Mode::kDom) run.k = 1;
      RatioReport r;
      r.instance_id = i;
      r.family = std::string(family_name(f.family));
      r.params = f.params();
      if (f.family == Family::kErdosRenyi) r.seed = f.seed;
      r.n = g.order();
      r.m = g.edge_count();
      r.max_degree = max_degree(g);
      r.min_degree = min_degree(g);
      r.mode = run.mode;
      r.k = run.k;
      r.bound = theorem_bound(run.mode, r.max_degree, run.k);
      if (run.k == 0) {
        r.skip_reason = "k must be at least 1";
      } else if (run.mode == Mode::kKTuple && run.k > r.min_degree + 1) {
        r.skip_reason = "k > min degree + 1";
      } else {
        tasks.push_back({i, run});
        task_slot.push_back(reports.size());
      }
      reports.push_back(std::move(r));
    }
  }
  if (tasks.empty()) {
    throw PreconditionError("no runnable (instance, mode, k) combination");
  }

  const VerifyOptions options{spec.max_n, false};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      RatioReport& slot = reports[task_slot[t]];
      try {
        RatioReport r = verify_instance(graphs[task.instance], task.run.mode,
                                        task.run.k, options);
        r.instance_id = slot.instance_id;
        r.family = std::move(slot.family);
        r.params = std::move(slot.params);
        r.seed = slot.seed;
        slot = std::move(r);
      } catch (const std::exception& e) {
        slot.error = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CorpusResult out;
  out.reports = std::move(reports);
  out.summary = summarize(out.reports);
  return out;
}

CorpusSpec default_corpus() {
  CorpusSpec spec;
  const std::size_t sizes[] = {8, 12, 16};
  for (std::size_t n : sizes) {
    for (double p : {0.2, 0.4, 0.7}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        spec.instances.push_back(FamilySpec::erdos_renyi(n, p, seed));
      }
    }
  }
  for (std::size_t n : sizes) {
    spec.instances.push_back(FamilySpec::path(n));
    spec.instances.push_back(FamilySpec::cycle(n));
    spec.instances.push_back(FamilySpec::complete(n));
    spec.instances.push_back(FamilySpec::star(n));
    spec.instances.push_back(FamilySpec::complete_bipartite(n / 2, n - n / 2));
  }
  for (std::size_t k = 2; k <= 5; ++k) {
    spec.instances.push_back(FamilySpec::gap_witness(k));
  }
  spec.runs.push_back({Mode::kDom, 1});
  for (std::size_t k = 1; k <= 3; ++k) spec.runs.push_back({Mode::kKTuple, k});
  for (std::size_t k = 1; k <= 3; ++k) spec.runs.push_back({Mode::kKDom, k});
  return spec;
}

bool check_ratio_improvement(std::size_t delta_max) {
  for (std::size_t delta = 1; delta <= delta_max; ++delta) {
    const double prior = std::log(2.0 * static_cast<double>(delta)) + 1.0;
    for (std::size_t k = 1; k <= delta; ++k) {
      const double improved = theorem_bound(Mode::kKDom, delta, k);
      if (k == delta) {
        if (improved != prior) return false;
      } else if (!(improved < prior)) {
        return false;
      }
    }
  }
  return true;
}

GapWitnessResult check_gap_witness(std::size_t k) {
  const Graph g = generate(FamilySpec::gap_witness(k));
  GapWitnessResult out;
  out.k = k;
  out.centre = 0;
  const Solution sol = greedy_ktuple_dominating_set(g, 2);
  if (sol.chosen.size() < 2) return out;
  out.first = sol.chosen[0];
  out.second = sol.chosen[1];

  GreedyState state(g, Mode::kKTuple, 2);
  state.select(out.first);
  out.second_uncovered = state.potential(out.second);
  out.centre_uncovered = state.potential(out.centre);

  bool centre_strictly_largest = true;
  for (Vertex v = 1; v < g.order(); ++v) {
    centre_strictly_largest =
        centre_strictly_largest && g.degree(v) < g.degree(out.centre);
  }
  out.holds = centre_strictly_largest && out.first == out.centre &&
              out.second_uncovered == sol.iterations[1].score &&
              out.second_uncovered < out.centre_uncovered;
  return out;
}

}  // namespace multidom
