// Copyright 2026 The cpbc Authors
//
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

#include "cpbc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cpbc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value > 0xFFFFFFFEull) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> header;
  std::uint64_t max_id = 0;
  bool any_content = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (any_content) throw ParseError("header 'n <count>' must precede all edges", line_no);
      if (tokens.size() != 2) throw ParseError("header must be 'n <count>'", line_no);
      header = parse_id(tokens[1], line_no);
      any_content = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge line must hold exactly two ids", line_no);
    }
    const auto u = parse_id(tokens[0], line_no);
    const auto v = parse_id(tokens[1], line_no);
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    any_content = true;
  }

  std::size_t n = 0;
  if (header) {
    n = *header;
    if (!edges.empty() && max_id >= n) {
      throw ParseError("id " + std::to_string(max_id) + " exceeds header count " +
                           std::to_string(n), 0);
    }
  } else if (!edges.empty()) {
    n = max_id + 1;
  }
  if (n == 0) throw ParseError("edge list describes no vertices", 0);

  Graph g = Graph::from_edges(n, edges);
  if (n > 1) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 0) {
        throw ParseError("vertex " + std::to_string(v) + " has no incident edge (ids must be dense)", 0);
      }
    }
  }
  return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  try {
    return read_edge_list(in);
  } catch (const GraphError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_coords(const Coordinates& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

void write_edge_list_coords(std::ostream& out, const ProductGraph& product) {
  out << "n " << product.graph.order() << '\n';
  for (const auto& [u, v] : product.graph.edges()) {
    out << format_coords(product.spec.decode(u)) << ' ' << format_coords(product.spec.decode(v))
        << '\n';
  }
}

void write_report_csv(std::ostream& out, const CentralityReport& report,
                      const std::vector<std::string>& vertex_labels) {
  out << "vertex,betweenness,decimal\n";
  for (std::size_t v = 0; v < report.values.size(); ++v) {
    const auto& value = report.values[v];
    if (vertex_labels.empty()) {
      out << v;
    } else {
      out << '"' << vertex_labels.at(v) << '"';
    }
    out << ',' << to_fraction_string(value) << ',' << to_decimal_string(value) << '\n';
  }
}

void write_report_csv(std::ostream& out, const CentralityReport& report) {
  write_report_csv(out, report, {});
}

void write_report_json(std::ostream& out, const CentralityReport& report) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t v = 0; v < report.values.size(); ++v) {
    values.push_back({{"vertex", v},
                      {"num", report.values[v].get_num().get_str()},
                      {"den", report.values[v].get_den().get_str()}});
  }
  nlohmann::json doc = {{"method", std::string(to_string(report.method))},
                        {"graph", report.graph},
                        {"uniform", report.uniform},
                        {"values", std::move(values)}};
  out << doc.dump(2) << '\n';
}

std::vector<ExactRational> read_report_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line.rfind("vertex,betweenness,decimal", 0) != 0) {
    throw ParseError("missing report header 'vertex,betweenness,decimal'", line_no);
  }
  std::vector<ExactRational> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    // The vertex label may be a quoted coordinate vector containing commas.
    std::size_t pos = 0;
    if (line.front() == '"') {
      pos = line.find('"', 1);
      if (pos == std::string::npos) throw ParseError("unterminated vertex label", line_no);
      ++pos;
    } else {
      pos = line.find(',');
    }
    if (pos >= line.size() || line[pos] != ',') throw ParseError("malformed report row", line_no);
    const auto end = line.find(',', pos + 1);
    if (end == std::string::npos) throw ParseError("malformed report row", line_no);
    try {
      values.push_back(parse_rational(std::string_view(line).substr(pos + 1, end - pos - 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return values;
}

}  // namespace cpbc
