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
#include <sstream>

#include "doctest.h"
#include "multidom/errors.h"
#include "multidom/io.h"
#include "multidom/ledger.h"
#include "test_graphs.h"

namespace multidom {
namespace {

std::size_t parse_error_line(std::string_view text, GraphFormat format) {
  try {
    parse_graph(text, format);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST_CASE("DIMACS parsing") {
  const Graph g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n",
                              GraphFormat::kDimacs);
  CHECK(g == testing::complete(3));

  // Comments anywhere, blank lines, duplicate edges collapse.
  const Graph dup = parse_graph("p edge 3 3\n\ne 1 2\nc x\ne 2 1\ne 2 3\n",
                                GraphFormat::kDimacs);
  CHECK(dup == testing::path(3));

  CHECK(parse_error_line("p edge 3 1\ne 1 4\n", GraphFormat::kDimacs) == 2);
  CHECK(parse_error_line("p edge 3 1\ne 2 2\n", GraphFormat::kDimacs) == 2);
  CHECK(parse_error_line("e 1 2\n", GraphFormat::kDimacs) == 1);
  CHECK(parse_error_line("p edge 3 2\ne 1 2\n", GraphFormat::kDimacs) == 1);
  CHECK(parse_error_line("p edge 3 1\np edge 3 1\n", GraphFormat::kDimacs) ==
        2);
  CHECK(parse_error_line("p edge 3 1\ne 1 2\nx\n", GraphFormat::kDimacs) == 3);
  CHECK(parse_error_line("p edge 3 1\ne 1 b\n", GraphFormat::kDimacs) == 2);
  CHECK(parse_error_line("c only\n", GraphFormat::kDimacs) == 1);
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_graph("0 1\n1 2\n", GraphFormat::kEdgeList);
  CHECK(g == testing::path(3));

  // Isolated trailing vertices need a count.
  const Graph padded =
      parse_graph("# vertices 5\n0 1\n", GraphFormat::kEdgeList);
  CHECK(padded.order() == 5);
  CHECK(parse_graph("0 1\n", GraphFormat::kEdgeList, 4).order() == 4);

  CHECK(parse_error_line("0 1\n1 1\n", GraphFormat::kEdgeList) == 2);
  CHECK(parse_error_line("0 1\n1 2 3\n", GraphFormat::kEdgeList) == 2);
  CHECK(parse_error_line("# vertices 2\n0 1\n1 2\n", GraphFormat::kEdgeList) ==
        3);
  CHECK(parse_error_line("", GraphFormat::kEdgeList) == 1);
  CHECK_THROWS_AS(parse_graph("# vertices 3\n", GraphFormat::kEdgeList, 4),
                  ParseError);
  CHECK(parse_graph_format("dimacs") == GraphFormat::kDimacs);
  CHECK(parse_graph_format("edgelist") == GraphFormat::kEdgeList);
  CHECK_FALSE(parse_graph_format("gml").has_value());
}

TEST_CASE("write then parse is the identity") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = testing::random_graph(rng, 1, 40);
    for (GraphFormat f : {GraphFormat::kDimacs, GraphFormat::kEdgeList}) {
      const std::string text = write_graph(g, f);
      const Graph back = parse_graph(text, f);
      CHECK(back == g);
      CHECK(write_graph(back, f) == text);
    }
  }
  // Edgeless graphs survive through the vertex directive.
  const Graph lonely = Graph::from_edges(3, std::vector<Edge>{});
  CHECK(parse_graph(write_graph(lonely, GraphFormat::kEdgeList),
                    GraphFormat::kEdgeList) == lonely);
}

TEST_CASE("CSV reports") {
  CHECK(write_report_csv({}, false) == csv_header(false));
  CHECK(split_lines(csv_header(true)).front().find("exact_ms") !=
        std::string::npos);

  RatioReport r = verify_instance(testing::star(7), Mode::kKDom, 2);
  r.family = "star";
  r.params = "n=7";
  const auto lines = split_lines(write_report_csv({r}, false));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] ==
        "0,star,n=7,,7,6,6,1,KDOM,2,7,6,1.166667,3.079442,true,true,false,ok");

  RatioReport skip;
  skip.family = "a,b";
  skip.skip_reason = "k \"too\" large";
  const auto skipped = split_lines(write_report_csv({skip}, false));
  REQUIRE(skipped.size() == 2);
  CHECK(skipped[1].find("\"a,b\"") != std::string::npos);
  CHECK(skipped[1].find("\"skipped: k \"\"too\"\" large\"") !=
        std::string::npos);
}

TEST_CASE("solution traces round trip through JSON") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = testing::random_graph(rng, 2, 20);
    for (Mode mode : {Mode::kDom, Mode::kKTuple, Mode::kKDom}) {
      const Solution sol = solve_greedy(g, mode, 1);
      const nlohmann::json doc = nlohmann::json::parse(to_json(sol).dump());
      const Solution back = solution_from_json(doc);
      CHECK(back == sol);
      CHECK(run_ledger_checks(build_ledger(back, g)).passed());
    }
  }
}

TEST_CASE("report and summary JSON") {
  const RatioReport r = verify_instance(testing::star(7), Mode::kDom, 1,
                                        {.max_n = 24, .keep_ledger_rows = true});
  const nlohmann::json doc = to_json(r);
  CHECK(doc.at("greedy_size") == 1);
  CHECK(doc.at("ledger").size() == 7);
  CHECK_FALSE(to_json(r, false).contains("runtime_ms"));

  const ExactResult e = exact_minimum(testing::cycle(6), Mode::kDom, 1);
  CHECK(to_json(e).at("optimum") == 2);
}

TEST_CASE("corpus spec parsing") {
  const CorpusSpec def = parse_corpus_spec(nlohmann::json::parse(
      R"({"default": true})"));
  CHECK(def.instances == default_corpus().instances);

  const CorpusSpec spec = parse_corpus_spec(nlohmann::json::parse(R"({
    "instances": [
      {"family": "erdos_renyi", "n": [8, 10], "p": 0.3, "seed": [1, 2, 3]},
      {"family": "gap_witness", "k": 2}
    ],
    "runs": [{"mode": "DOM"}, {"mode": "KDOM", "k": [1, 2]}],
    "max_n": 12
  })"));
  CHECK(spec.instances.size() == 7);
  CHECK(spec.instances[0] == FamilySpec::erdos_renyi(8, 0.3, 1));
  CHECK(spec.instances[6] == FamilySpec::gap_witness(2));
  CHECK(spec.runs.size() == 3);
  CHECK(spec.runs[2] == RunSpec{Mode::kKDom, 2});
  CHECK(spec.max_n == 12);

  CHECK_THROWS_AS(parse_corpus_spec(nlohmann::json::parse(
                      R"({"instances":[{"family":"tree","n":3}],"runs":[]})")),
                  PreconditionError);
  CHECK_THROWS(parse_corpus_spec(nlohmann::json::parse(R"({"runs": []})")));
}

}  // namespace
}  // namespace multidom
