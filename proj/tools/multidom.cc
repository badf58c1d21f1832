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

// Command-line entry point: graph generation, greedy and exact solves,
// single-instance verification, corpus benchmarks and the self-check suite.
//
// Exit status: 0 when every requested check passes, 1 when a check fails
// (a JSON failure summary goes to stderr), 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "multidom/errors.h"
#include "multidom/exact.h"
#include "multidom/greedy.h"
#include "multidom/harness.h"
#include "multidom/io.h"
#include "multidom/ledger.h"
#include "multidom/rational.h"

namespace {

using multidom::GraphFormat;
using multidom::Mode;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int fail(const json& failures) {
  std::cerr << json{{"status", "fail"}, {"failures", failures}}.dump() << '\n';
  return kExitFail;
}

struct GraphInput {
  std::string path = "-";
  std::string format = "dimacs";
  std::size_t vertices = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-i,--input", path, "Graph file ('-' for stdin)");
    cmd->add_option("--format", format, "dimacs or edgelist")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    cmd->add_option("--vertices", vertices,
                    "Vertex count for edge lists (default: inferred)");
  }

  multidom::Graph load() const {
    const auto fmt = *multidom::parse_graph_format(format);
    std::optional<std::size_t> n;
    if (vertices > 0) n = vertices;
    return multidom::parse_graph(read_input(path), fmt, n);
  }
};

struct ModeOptions {
  std::string mode = "DOM";
  std::size_t k = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "DOM, KTUPLE or KDOM")
        ->check(CLI::IsMember({"DOM", "KTUPLE", "KDOM", "dom", "ktuple", "kdom"}));
    cmd->add_option("--k", k, "Multiplicity")->check(CLI::PositiveNumber);
  }

  Mode parsed() const { return *multidom::parse_mode(mode); }
};

int run_gen(const std::string& family, const multidom::FamilySpec& params,
            const std::string& format, const std::string& output) {
  const auto f = multidom::parse_family(family);
  if (!f) throw multidom::PreconditionError("unknown family " + family);
  multidom::FamilySpec spec = params;
  spec.family = *f;
  const multidom::Graph g = multidom::generate(spec);
  write_output(output, multidom::write_graph(
                           g, *multidom::parse_graph_format(format)));
  return 0;
}

int run_solve(const GraphInput& input, const ModeOptions& mode,
              const std::string& trace_path) {
  const multidom::Graph g = input.load();
  const multidom::Solution sol =
      multidom::solve_greedy(g, mode.parsed(), mode.k);
  if (!trace_path.empty()) {
    write_output(trace_path, multidom::to_json(sol).dump(2) + "\n");
  }
  const bool feasible =
      multidom::is_feasible(g, sol.mode, sol.k, sol.chosen_set());
  std::cout << json{{"mode", multidom::mode_name(sol.mode)},
                    {"k", sol.k},
                    {"size", sol.chosen.size()},
                    {"chosen", sol.chosen},
                    {"trivial", sol.trivial},
                    {"feasible", feasible}}
                   .dump()
            << '\n';
  if (!feasible) return fail(json::array({"solution is not feasible"}));
  return 0;
}

int run_exact(const GraphInput& input, const ModeOptions& mode,
              std::size_t max_n) {
  const multidom::Graph g = input.load();
  const multidom::ExactResult r =
      multidom::exact_minimum(g, mode.parsed(), mode.k, max_n);
  std::cout << multidom::to_json(r).dump() << '\n';
  return 0;
}

int run_verify(const GraphInput& input, const ModeOptions& mode,
               std::size_t max_n) {
  const multidom::Graph g = input.load();
  multidom::VerifyOptions options;
  options.max_n = max_n;
  options.keep_ledger_rows = true;
  multidom::RatioReport r =
      multidom::verify_instance(g, mode.parsed(), mode.k, options);
  r.family = "file";
  r.params = "path=" + input.path;
  std::cout << multidom::to_json(r).dump(2) << '\n';
  json failures = json::array();
  if (!r.bound_satisfied) failures.push_back("approximation bound violated");
  if (!r.ledger_checks_passed) failures.push_back("ledger checks failed");
  return failures.empty() ? 0 : fail(failures);
}

int run_bench(const std::string& spec_path, bool use_default,
              std::size_t jobs, std::size_t max_n, bool max_n_given,
              const std::string& csv_path, const std::string& json_path,
              bool timings) {
  multidom::CorpusSpec spec;
  if (use_default) {
    spec = multidom::default_corpus();
  } else {
    if (spec_path.empty()) {
      throw multidom::PreconditionError("bench needs --spec or --default");
    }
    spec = multidom::parse_corpus_spec(json::parse(read_input(spec_path)));
  }
  if (max_n_given) spec.max_n = max_n;
  const multidom::CorpusResult result = multidom::run_corpus(spec, jobs);
  const std::string csv = multidom::write_report_csv(result.reports, timings);
  if (!csv_path.empty()) write_output(csv_path, csv);
  if (!json_path.empty()) {
    write_output(json_path, multidom::to_json(result, timings).dump(2) + "\n");
  }
  if (csv_path.empty() && json_path.empty()) std::cout << csv;
  std::cerr << multidom::to_json(result.summary).dump() << '\n';
  if (result.summary.passed()) return 0;
  return fail(multidom::to_json(result.summary));
}

int run_selfcheck(std::size_t x_max, std::size_t log_x_max,
                  std::size_t delta_max, std::size_t gap_k_max) {
  json checks = json::object();
  json failures = json::array();
  auto record = [&](const std::string& name, bool ok) {
    checks[name] = ok;
    if (!ok) failures.push_back(name);
  };
  record("harmonic_difference_bound",
         multidom::check_harmonic_difference_bound(x_max));
  record("harmonic_log_bound", multidom::check_harmonic_log_bound(log_x_max));
  record("ratio_improvement", multidom::check_ratio_improvement(delta_max));
  for (std::size_t k = 2; k <= gap_k_max; ++k) {
    const auto w = multidom::check_gap_witness(k);
    record("gap_witness_k" + std::to_string(k), w.holds);
  }
  std::cout << json{{"checks", checks}}.dump(2) << '\n';
  return failures.empty() ? 0 : fail(failures);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy multiple-domination solvers with exact oracles and "
               "approximation-ratio verification"};
  app.require_subcommand(1);

  std::string kernels;
  app.add_option("--kernels", kernels, "Force bitset kernels: scalar or avx2");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph from a family");
  std::string family;
  multidom::FamilySpec params;
  std::string gen_format = "dimacs";
  std::string gen_output;
  gen->add_option("family", family,
                  "path, cycle, complete, star, complete_bipartite, "
                  "erdos_renyi, gap_witness")
      ->required();
  gen->add_option("--n", params.n, "Vertex count");
  gen->add_option("--a", params.a, "Left side (complete_bipartite)");
  gen->add_option("--b", params.b, "Right side (complete_bipartite)");
  gen->add_option("--p", params.p, "Edge probability (erdos_renyi)");
  gen->add_option("--seed", params.seed, "RNG seed (erdos_renyi)");
  gen->add_option("--k", params.k, "Multiplicity (gap_witness)");
  gen->add_option("--format", gen_format, "dimacs or edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  gen->add_option("-o,--output", gen_output, "Output path (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run a greedy solver");
  GraphInput solve_in;
  ModeOptions solve_mode;
  std::string trace_path;
  solve_in.add_to(solve);
  solve_mode.add_to(solve);
  solve->add_option("--trace", trace_path, "Write the iteration trace (JSON)");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact minimum by branch-and-bound");
  GraphInput exact_in;
  ModeOptions exact_mode;
  std::size_t exact_max_n = multidom::kDefaultExactCap;
  exact_in.add_to(exact);
  exact_mode.add_to(exact);
  exact->add_option("--max-n", exact_max_n, "Vertex cap for exact search");

  // verify
  auto* verify = app.add_subcommand("verify", "Full report for one instance");
  GraphInput verify_in;
  ModeOptions verify_mode;
  std::size_t verify_max_n = multidom::kDefaultExactCap;
  verify_in.add_to(verify);
  verify_mode.add_to(verify);
  verify->add_option("--max-n", verify_max_n, "Vertex cap for exact search");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a corpus of instances");
  std::string spec_path;
  bool use_default = false;
  std::size_t jobs = 1;
  std::size_t bench_max_n = multidom::kDefaultExactCap;
  std::string csv_path;
  std::string json_path;
  bool no_timings = false;
  bench->add_option("--spec", spec_path, "Corpus spec (JSON)");
  bench->add_flag("--default", use_default, "Use the built-in default corpus");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* bench_max_n_opt =
      bench->add_option("--max-n", bench_max_n, "Vertex cap for exact search");
  bench->add_option("--csv", csv_path, "CSV report path");
  bench->add_option("--json", json_path, "JSON report path");
  bench->add_flag("--no-timings", no_timings,
                  "Omit runtime columns for byte-stable output");

  // selfcheck
  auto* selfcheck = app.add_subcommand(
      "selfcheck", "Harmonic inequalities, ratio improvement, gap witnesses");
  std::size_t x_max = 1000;
  std::size_t log_x_max = 10000;
  std::size_t delta_max = 1000;
  std::size_t gap_k_max = 5;
  selfcheck->add_option("--x-max", x_max, "Exact harmonic difference range");
  selfcheck->add_option("--log-x-max", log_x_max, "H(x) <= ln x + 1 range");
  selfcheck->add_option("--delta-max", delta_max, "Ratio improvement range");
  selfcheck->add_option("--gap-k-max", gap_k_max, "Largest gap witness k");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!kernels.empty() && !multidom::kernels::select(kernels)) {
      throw multidom::PreconditionError("kernels '" + kernels +
                                        "' unavailable on this machine");
    }
    if (*gen) return run_gen(family, params, gen_format, gen_output);
    if (*solve) return run_solve(solve_in, solve_mode, trace_path);
    if (*exact) return run_exact(exact_in, exact_mode, exact_max_n);
    if (*verify) return run_verify(verify_in, verify_mode, verify_max_n);
    if (*bench) {
      return run_bench(spec_path, use_default, jobs, bench_max_n,
                       bench_max_n_opt->count() > 0, csv_path, json_path,
                       !no_timings);
    }
    if (*selfcheck) return run_selfcheck(x_max, log_x_max, delta_max, gap_k_max);
  } catch (const std::exception& e) {
    std::cerr << json{{"status", "error"}, {"message", e.what()}}.dump() << '\n';
    return kExitError;
  }
  return kExitError;
}
