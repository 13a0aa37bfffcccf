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

#ifndef CPBC_IO_HPP
#define CPBC_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpbc/centrality.hpp"
#include "cpbc/graph.hpp"
#include "cpbc/product.hpp"

namespace cpbc {

/// Malformed edge-list or report text. Carries the 1-based line number
/// when one applies.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& message, std::size_t line)
      : GraphError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format:
//   # comment lines are skipped, as are blank lines
//   n <count>          optional header, first non-comment line
//   u v                one undirected edge per line
// Without a header the vertex count is max id + 1. Ids must be dense: a
// vertex with no incident edge is reported by id.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Header "n <count>" then one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);

/// Product edge list with each endpoint written as a coordinate vector
/// "(c1,c2,...)" in place of its id.
void write_edge_list_coords(std::ostream& out, const ProductGraph& product);

std::string format_coords(const Coordinates& coords);

// Report CSV: header "vertex,betweenness,decimal", one row per vertex in id
// order; betweenness is "p/q" in lowest terms, decimal is display-only.
void write_report_csv(std::ostream& out, const CentralityReport& report);
void write_report_csv(std::ostream& out, const CentralityReport& report,
                      const std::vector<std::string>& vertex_labels);

// Report JSON: {"method", "graph", "uniform", "values": [{"vertex","num","den"}]}.
// num and den are decimal strings so arbitrary precision survives.
void write_report_json(std::ostream& out, const CentralityReport& report);

/// Exact values from a report CSV, by row order. The decimal column is ignored.
std::vector<ExactRational> read_report_csv(std::istream& in);

}  // namespace cpbc

#endif  // CPBC_IO_HPP
