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

#include "multidom/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "multidom/errors.h"

namespace multidom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!(end == std::string_view::npos && line.empty())) fn(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      const auto nv = to_index(tok[2]);
      const auto mv = to_index(tok[3]);
      if (!nv || !mv) throw ParseError(line_no, "malformed vertex/edge count");
      if (*nv == 0) throw ParseError(line_no, "graph must have a vertex");
      n = *nv;
      declared_m = *mv;
      header_line = line_no;
      return;
    }
    if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = to_index(tok[1]);
      const auto v = to_index(tok[2]);
      if (!u || !v) throw ParseError(line_no, "malformed endpoint");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) {
        throw ParseError(line_no, "endpoint out of range 1.." +
                                      std::to_string(*n));
      }
      if (*u == *v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(*u - 1),
                         static_cast<Vertex>(*v - 1));
      return;
    }
    throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
  });
  if (!n) throw ParseError(1, "missing 'p edge' problem line");
  if (edges.size() != declared_m) {
    throw ParseError(header_line, "header declares " +
                                      std::to_string(declared_m) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Graph::from_edges(*n, edges);
}

Graph parse_edge_list(std::string_view text,
                      std::optional<std::size_t> vertex_count) {
  std::optional<std::size_t> n = vertex_count;
  std::size_t max_id = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok[0].front() == '#') {
      // "# vertices <n>" is a directive; any other comment is ignored.
      std::vector<std::string_view> rest = tok;
      if (rest[0] == "#") {
        rest.erase(rest.begin());
      } else {
        rest[0].remove_prefix(1);
      }
      if (rest.size() == 2 && rest[0] == "vertices") {
        const auto nv = to_index(rest[1]);
        if (!nv || *nv == 0) throw ParseError(line_no, "bad vertex count");
        if (vertex_count && *vertex_count != *nv) {
          throw ParseError(line_no, "vertex count conflicts with override");
        }
        n = *nv;
      }
      return;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    const auto u = to_index(tok[0]);
    const auto v = to_index(tok[1]);
    if (!u || !v) throw ParseError(line_no, "malformed endpoint");
    if (*u == *v) throw ParseError(line_no, "self-loop");
    max_id = std::max({max_id, *u, *v});
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    edge_lines.push_back(line_no);
  });
  if (!n) {
    if (edges.empty()) throw ParseError(1, "cannot infer vertex count");
    n = max_id + 1;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first >= *n || edges[i].second >= *n) {
      throw ParseError(edge_lines[i],
                       "endpoint out of range 0.." + std::to_string(*n - 1));
    }
  }
  return Graph::from_edges(*n, edges);
}

std::string fixed(double x, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string hex64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(x));
  return buf;
}

std::string report_status(const RatioReport& r) {
  if (r.skipped()) return "skipped: " + r.skip_reason;
  if (!r.error.empty()) return "error: " + r.error;
  return "ok";
}

// Scalar or array field, expanded to a list.
template <typename T>
std::vector<T> values_of(const nlohmann::json& obj, const char* key,
                         std::vector<T> fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format,
                  std::optional<std::size_t> vertex_count) {
  return format == GraphFormat::kDimacs ? parse_dimacs(text)
                                        : parse_edge_list(text, vertex_count);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::kDimacs) {
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
      out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
  } else {
    out << "# vertices " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string csv_header(bool include_timings) {
  std::string h =
      "instance_id,family,params,seed,n,m,max_degree,min_degree,mode,k,"
      "greedy_size,exact_size,ratio,bound,bound_satisfied,"
      "ledger_checks_passed,trivial,status";
  if (include_timings) h += ",greedy_ms,ledger_ms,exact_ms";
  return h + "\n";
}

std::string write_report_csv(const std::vector<RatioReport>& reports,
                             bool include_timings) {
  std::string out = csv_header(include_timings);
  for (const RatioReport& r : reports) {
    const bool ran = !r.skipped() && r.error.empty();
    std::vector<std::string> f;
    f.push_back(std::to_string(r.instance_id));
    f.push_back(csv_field(r.family));
    f.push_back(csv_field(r.params));
    f.push_back(r.seed ? std::to_string(*r.seed) : "");
    f.push_back(std::to_string(r.n));
    f.push_back(std::to_string(r.m));
    f.push_back(std::to_string(r.max_degree));
    f.push_back(std::to_string(r.min_degree));
    f.push_back(std::string(mode_name(r.mode)));
    f.push_back(std::to_string(r.k));
    f.push_back(ran ? std::to_string(r.greedy_size) : "");
    f.push_back(ran && r.exact_size ? std::to_string(*r.exact_size) : "");
    f.push_back(ran && r.ratio ? fixed(*r.ratio, 6) : "");
    f.push_back(fixed(r.bound, 6));
    f.push_back(ran ? (r.bound_satisfied ? "true" : "false") : "");
    f.push_back(ran ? (r.ledger_checks_passed ? "true" : "false") : "");
    f.push_back(ran ? (r.trivial ? "true" : "false") : "");
    f.push_back(csv_field(report_status(r)));
    if (include_timings) {
      f.push_back(fixed(r.greedy_ms, 3));
      f.push_back(fixed(r.ledger_ms, 3));
      f.push_back(fixed(r.exact_ms, 3));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ',';
      out += f[i];
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Solution& sol) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const IterationRecord& rec : sol.iterations) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const TokenPlacement& t : rec.tokens) {
      tokens.push_back({{"vertex", t.vertex}, {"count", t.count}});
    }
    iterations.push_back({{"index", rec.index},
                          {"vertex", rec.chosen},
                          {"score", rec.score},
                          {"newly_covered", rec.newly_covered},
                          {"tokens", tokens},
                          {"covered_after", rec.covered_after}});
  }
  return {{"mode", mode_name(sol.mode)},
          {"k", sol.k},
          {"trivial", sol.trivial},
          {"graph",
           {{"n", sol.graph.n}, {"m", sol.graph.m}, {"hash", hex64(sol.graph.hash)}}},
          {"chosen", sol.chosen},
          {"iterations", iterations}};
}

Solution solution_from_json(const nlohmann::json& doc) {
  Solution sol;
  const auto mode = parse_mode(doc.at("mode").get<std::string>());
  if (!mode) throw PreconditionError("unknown mode in trace");
  sol.mode = *mode;
  sol.k = doc.at("k").get<std::size_t>();
  sol.trivial = doc.value("trivial", false);
  const auto& g = doc.at("graph");
  sol.graph.n = g.at("n").get<std::size_t>();
  sol.graph.m = g.at("m").get<std::size_t>();
  sol.graph.hash = std::stoull(g.at("hash").get<std::string>(), nullptr, 16);
  sol.chosen = doc.at("chosen").get<std::vector<Vertex>>();
  for (const auto& it : doc.at("iterations")) {
    IterationRecord rec;
    rec.index = it.at("index").get<std::size_t>();
    rec.chosen = it.at("vertex").get<Vertex>();
    rec.score = it.at("score").get<std::size_t>();
    rec.newly_covered = it.at("newly_covered").get<std::vector<Vertex>>();
    for (const auto& t : it.at("tokens")) {
      rec.tokens.push_back(
          {t.at("vertex").get<Vertex>(), t.at("count").get<std::uint32_t>()});
    }
    rec.covered_after = it.at("covered_after").get<std::size_t>();
    sol.iterations.push_back(std::move(rec));
  }
  return sol;
}

nlohmann::json to_json(const RatioReport& r, bool include_timings) {
  nlohmann::json doc = {
      {"instance_id", r.instance_id},
      {"family", r.family},
      {"params", r.params},
      {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
      {"n", r.n},
      {"m", r.m},
      {"max_degree", r.max_degree},
      {"min_degree", r.min_degree},
      {"mode", mode_name(r.mode)},
      {"k", r.k},
      {"greedy_size", r.greedy_size},
      {"exact_size",
       r.exact_size ? nlohmann::json(*r.exact_size) : nlohmann::json(nullptr)},
      {"ratio", r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr)},
      {"bound", r.bound},
      {"bound_satisfied", r.bound_satisfied},
      {"ledger_checks_passed", r.ledger_checks_passed},
      {"trivial", r.trivial},
      {"status", report_status(r)},
  };
  if (include_timings) {
    doc["runtime_ms"] = {
        {"greedy", r.greedy_ms}, {"ledger", r.ledger_ms}, {"exact", r.exact_ms}};
  }
  if (!r.ledger_rows.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const VertexBoundRow& row : r.ledger_rows) {
      rows.push_back({{"w", row.w},
                      {"lhs", to_string(row.lhs)},
                      {"bound", to_string(row.bound)},
                      {"holds", row.lhs <= row.bound}});
    }
    doc["ledger"] = rows;
  }
  return doc;
}

nlohmann::json to_json(const CorpusSummary& s) {
  return {{"reports", s.reports},
          {"skipped", s.skipped},
          {"errors", s.errors},
          {"unchecked", s.unchecked},
          {"max_ratio", s.max_ratio},
          {"bound_violations", s.bound_violations},
          {"ledger_failures", s.ledger_failures},
          {"passed", s.passed()}};
}

nlohmann::json to_json(const CorpusResult& result, bool include_timings) {
  nlohmann::json reports = nlohmann::json::array();
  for (const RatioReport& r : result.reports) {
    reports.push_back(to_json(r, include_timings));
  }
  return {{"summary", to_json(result.summary)}, {"reports", reports}};
}

nlohmann::json to_json(const ExactResult& r) {
  return {{"mode", mode_name(r.mode)},
          {"k", r.k},
          {"optimum", r.optimum},
          {"witness", r.witness.to_vector()},
          {"nodes_explored", r.nodes_explored},
          {"trivial", r.trivial},
          {"time_ms", std::chrono::duration<double, std::milli>(r.time).count()}};
}

CorpusSpec parse_corpus_spec(const nlohmann::json& doc) {
  if (doc.value("default", false)) {
    CorpusSpec spec = default_corpus();
    spec.max_n = doc.value("max_n", spec.max_n);
    return spec;
  }
  CorpusSpec spec;
  spec.max_n = doc.value("max_n", kDefaultExactCap);
  for (const auto& inst : doc.at("instances")) {
    const std::string name = inst.at("family").get<std::string>();
    const auto family = parse_family(name);
    if (!family) throw PreconditionError("unknown family '" + name + "'");
    FamilySpec base;
    base.family = *family;
    for (std::size_t n : values_of<std::size_t>(inst, "n", {0})) {
      for (std::size_t a : values_of<std::size_t>(inst, "a", {0})) {
        for (std::size_t b : values_of<std::size_t>(inst, "b", {0})) {
          for (double p : values_of<double>(inst, "p", {0.0})) {
            for (std::uint64_t seed :
                 values_of<std::uint64_t>(inst, "seed", {0})) {
              for (std::size_t k : values_of<std::size_t>(inst, "k", {0})) {
                FamilySpec f = base;
                f.n = n;
                f.a = a;
                f.b = b;
                f.p = p;
                f.seed = seed;
                f.k = k;
                f.validate();
                spec.instances.push_back(f);
              }
            }
          }
        }
      }
    }
  }
  for (const auto& run : doc.at("runs")) {
    const std::string name = run.at("mode").get<std::string>();
    const auto mode = parse_mode(name);
    if (!mode) throw PreconditionError("unknown mode '" + name + "'");
    for (std::size_t k : values_of<std::size_t>(run, "k", {1})) {
      spec.runs.push_back({*mode, k});
    }
  }
  return spec;
}

}  // namespace multidom
