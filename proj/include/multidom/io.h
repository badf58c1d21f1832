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

#ifndef MULTIDOM_IO_H_
#define MULTIDOM_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "multidom/exact.h"
#include "multidom/graph.h"
#include "multidom/greedy.h"
#include "multidom/harness.h"

namespace multidom {

// DIMACS edge format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          1-indexed, exactly m edge lines
// Edge list:
//   # <comment>        "# vertices <n>" fixes the vertex count
//   <u> <v>            0-indexed; n defaults to max id + 1
enum class GraphFormat { kDimacs, kEdgeList };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

// Throws ParseError (with a 1-based line number) on syntax errors, a
// header/edge-count mismatch, out-of-range endpoints and self-loops.
// vertex_count overrides the edge-list vertex count; ignored for DIMACS.
Graph parse_graph(std::string_view text, GraphFormat format,
                  std::optional<std::size_t> vertex_count = std::nullopt);

// Canonical text: edges ascending with u < v, one per line.
std::string write_graph(const Graph& g, GraphFormat format);

// Columns, in order:
//   instance_id, family, params, seed, n, m, max_degree, min_degree, mode, k,
//   greedy_size, exact_size, ratio, bound, bound_satisfied,
//   ledger_checks_passed, trivial, status[, greedy_ms, ledger_ms, exact_ms]
// ratio and bound use 6 decimal places; absent values are empty fields.
std::string csv_header(bool include_timings = true);
std::string write_report_csv(const std::vector<RatioReport>& reports,
                             bool include_timings = true);

nlohmann::json to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const RatioReport& report, bool include_timings = true);
nlohmann::json to_json(const CorpusSummary& summary);
nlohmann::json to_json(const CorpusResult& result, bool include_timings = true);
nlohmann::json to_json(const ExactResult& result);

// {"default": true} selects default_corpus(). Otherwise
//   {"max_n": 24,
//    "instances": [{"family": "erdos_renyi", "n": 10, "p": 0.3, "seed": 42},
//                  {"family": "star", "n": 7}, ...],
//    "runs": [{"mode": "DOM"}, {"mode": "KDOM", "k": [1, 2, 3]}, ...]}
// where n, p, seed, a, b and k may each be a scalar or an array (expanded
// as a cartesian product).
CorpusSpec parse_corpus_spec(const nlohmann::json& doc);

}  // namespace multidom

#endif  // MULTIDOM_IO_H_
