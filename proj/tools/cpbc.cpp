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

// cpbc: exact betweenness centrality and Wiener index for Cartesian products.
//
// Exit status: 0 success, 1 usage error, 2 validation error, 3 verification
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpbc/bench.hpp"
#include "cpbc/centrality.hpp"
#include "cpbc/closed_forms.hpp"
#include "cpbc/generators.hpp"
#include "cpbc/io.hpp"
#include "cpbc/product.hpp"
#include "cpbc/verify.hpp"

namespace {

using namespace cpbc;

constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kVerifyFailed = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t to_size(const std::string& token) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty() || token.front() == '-') {
    throw UsageError("expected a non-negative integer parameter, got '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

/// "--family NAME P1 P2 ..." split into name and sizes.
struct FamilyArg {
  std::string name;
  std::vector<std::size_t> params;
};

std::optional<FamilyArg> parse_family(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return std::nullopt;
  FamilyArg f{tokens.front(), {}};
  for (std::size_t i = 1; i < tokens.size(); ++i) f.params.push_back(to_size(tokens[i]));
  return f;
}

std::vector<std::int64_t> signed_params(const FamilyArg& f) {
  return {f.params.begin(), f.params.end()};
}

/// Output sink: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw GraphError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw GraphError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

/// Factor list for the product families; empty for non-product families.
std::vector<Graph> family_factors(const FamilyArg& f) {
  const auto& p = f.params;
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw InvalidParameterError(f.name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (f.name == "grid") {
    need(2);
    return {path_graph(p[0]), path_graph(p[1])};
  }
  if (f.name == "torus") {
    need(2);
    return {cycle_graph(p[0]), cycle_graph(p[1])};
  }
  if (f.name == "hypercube") {
    need(1);
    if (p[0] < 1) throw InvalidParameterError("hypercube needs r >= 1");
    return std::vector<Graph>(p[0], complete_graph(2));
  }
  if (f.name == "hamming") {
    if (p.empty()) throw InvalidParameterError("hamming needs at least one factor size");
    std::vector<Graph> factors;
    for (auto n : p) {
      if (n < 2) throw InvalidParameterError("hamming factor sizes must be >= 2");
      factors.push_back(complete_graph(n));
    }
    return factors;
  }
  return {};
}

/// Closed-form report for a named family. Vertex-transitive families fill
/// every vertex with the shared value and set the uniform flag.
CentralityReport closed_form_report(const FamilyArg& f) {
  const auto p = signed_params(f);
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw InvalidParameterError(f.name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  auto product_size = [&](std::span<const std::int64_t> sizes) {
    std::size_t n = 1;
    for (auto s : sizes) n *= static_cast<std::size_t>(s);
    return n;
  };

  CentralityReport report;
  report.method = Method::kClosedForm;
  report.graph = describe(f.name, f.params);

  if (f.name == "grid") {
    need(2);
    const auto m = p[0], n = p[1];
    for (std::int64_t a = 1; a <= m; ++a) {
      for (std::int64_t b = 1; b <= n; ++b) report.values.push_back(grid_bc(m, n, a, b));
    }
    if (report.values.empty()) throw InvalidParameterError("grid needs m, n >= 1");
    return report;
  }

  ExactRational value;
  std::size_t order = 0;
  if (f.name == "hypercube") {
    need(1);
    value = hypercube_bc(p[0]);
    order = std::size_t{1} << p[0];
  } else if (f.name == "hamming" || f.name == "complete") {
    if (f.name == "complete") need(1);
    value = hamming_bc(p);
    order = product_size(p);
  } else if (f.name == "uniform-kn") {
    need(2);
    value = uniform_kn_bc(p[0], p[1]);
    order = 1;
    for (std::int64_t i = 0; i < p[1]; ++i) order *= static_cast<std::size_t>(p[0]);
  } else if (f.name == "torus") {
    need(2);
    value = torus_bc(p[0], p[1]);
    order = product_size(p);
  } else if (f.name == "even-cycles") {
    value = even_cycles_bc(p);
    order = product_size(p);
  } else if (f.name == "odd-cycles") {
    value = odd_cycles_bc(p);
    order = product_size(p);
  } else if (f.name == "cycle") {
    need(1);
    if (p[0] < 3) throw InvalidParameterError("cycle needs n >= 3");
    value = p[0] % 2 == 0 ? even_cycles_bc(p) : odd_cycles_bc(p);
    order = product_size(p);
  } else {
    throw UsageError("no closed form for family '" + f.name + "'");
  }
  report.values.assign(order, value);
  report.uniform = true;
  return report;
}

std::vector<Graph> read_factor_files(const std::vector<std::string>& paths) {
  std::vector<Graph> factors;
  for (const auto& path : paths) {
    Graph g = read_edge_list_file(path);
    if (!g.is_connected()) throw DisconnectedGraphError(path + ": factor is not connected");
    factors.push_back(std::move(g));
  }
  return factors;
}

std::string join_paths(const std::vector<std::string>& paths, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) out += (i ? sep : "") + paths[i];
  return out;
}

void emit_report(const CentralityReport& report, const std::string& format,
                 const std::vector<std::string>& labels, const std::string& out_path) {
  Output out(out_path);
  if (format == "json") {
    write_report_json(out.stream(), report);
  } else {
    write_report_csv(out.stream(), report, labels);
    if (report.uniform) {
      std::cerr << "uniform value over " << report.values.size() << " vertices\n";
    }
  }
  out.finish();
}

std::vector<std::string> coordinate_labels(const ProductSpec& spec) {
  std::vector<std::string> labels;
  for (Vertex v = 0; v < spec.order(); ++v) labels.push_back(format_coords(spec.decode(v)));
  return labels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact betweenness centrality and Wiener index on Cartesian product graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write an edge list for a named family");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::string gen_out;
  gen->add_option("family", gen_family, "path|cycle|complete|star|grid|hypercube|hamming|torus")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // product
  auto* prod = app.add_subcommand("product", "Cartesian product of edge-list files");
  std::vector<std::string> prod_files;
  std::string prod_out;
  std::string prod_labels = "id";
  prod->add_option("files", prod_files, "Factor edge lists, in product order")->required();
  prod->add_option("-o,--output", prod_out, "Output file (default stdout)");
  prod->add_option("--labels", prod_labels, "Vertex labels: id or coords")
      ->check(CLI::IsMember({"id", "coords"}));

  // bc
  auto* bc = app.add_subcommand("bc", "Exact betweenness centrality report");
  std::string bc_file;
  std::vector<std::string> bc_family;
  std::vector<std::string> bc_factors;
  std::string bc_method = "brandes";
  std::string bc_format = "csv";
  std::string bc_labels = "id";
  std::string bc_out;
  bc->add_option("file", bc_file, "Edge-list file");
  bc->add_option("--family", bc_family, "Family name followed by its parameters");
  bc->add_option("--factors", bc_factors, "Comma-separated factor edge lists")->delimiter(',');
  bc->add_option("--method", bc_method, "definitional|brandes|factorized|closed-form")
      ->check(CLI::IsMember({"definitional", "brandes", "factorized", "closed-form"}));
  bc->add_option("--format", bc_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bc->add_option("--labels", bc_labels, "Vertex labels for product inputs: id or coords")
      ->check(CLI::IsMember({"id", "coords"}));
  bc->add_option("-o,--output", bc_out, "Output file (default stdout)");

  // wiener
  auto* wi = app.add_subcommand("wiener", "Exact Wiener index");
  std::string wi_file;
  std::vector<std::string> wi_factors;
  std::vector<std::string> wi_family;
  wi->add_option("file", wi_file, "Edge-list file");
  wi->add_option("--factors", wi_factors, "Comma-separated factor edge lists (not materialized)")
      ->delimiter(',');
  wi->add_option("--family", wi_family, "Family name followed by its parameters");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the invariant and agreement suites");
  std::string ver_scope = "all";
  std::vector<std::string> scope_names;
  for (auto s : verify_scopes()) scope_names.emplace_back(s);
  ver->add_option("--scope", ver_scope, "Suite scope")->check(CLI::IsMember(scope_names));

  // bench
  auto* be = app.add_subcommand("bench", "Time materialized vs factorized betweenness");
  std::string be_family;
  std::size_t be_max = 0;
  std::vector<std::string> be_methods{"brandes", "factorized"};
  be->add_option("--family", be_family, "torus|hamming|grid|hypercube")->required();
  be->add_option("--max", be_max, "Largest factor size (hypercube: dimension)")->required();
  be->add_option("--methods", be_methods, "Comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember({"definitional", "brandes", "factorized"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      std::vector<std::size_t> params;
      for (const auto& t : gen_params) params.push_back(to_size(t));
      const Graph g = generate(gen_family, params);
      Output out(gen_out);
      write_edge_list(out.stream(), g);
      out.finish();
      return 0;
    }

    if (*prod) {
      auto product = cartesian_product(read_factor_files(prod_files));
      Output out(prod_out);
      if (prod_labels == "coords") {
        write_edge_list_coords(out.stream(), product);
      } else {
        write_edge_list(out.stream(), product.graph);
      }
      out.finish();
      return 0;
    }

    if (*bc) {
      const auto family = parse_family(bc_family);
      const int sources = !bc_file.empty() + family.has_value() + !bc_factors.empty();
      if (sources != 1) {
        throw UsageError("bc needs exactly one of FILE, --family or --factors");
      }
      const Method method = *parse_method(bc_method);
      std::vector<std::string> labels;
      CentralityReport report;

      if (method == Method::kClosedForm) {
        if (!family) throw UsageError("closed-form needs --family");
        report = closed_form_report(*family);
      } else if (!bc_file.empty()) {
        if (method == Method::kFactorized) {
          throw UsageError("factorized needs --factors or a product --family");
        }
        if (bc_labels == "coords") throw UsageError("--labels coords needs a product input");
        report = betweenness(read_edge_list_file(bc_file), method, bc_file);
      } else {
        std::vector<Graph> factors;
        std::string descriptor;
        if (family) {
          factors = family_factors(*family);
          descriptor = describe(family->name, family->params);
          if (factors.empty()) {
            if (method == Method::kFactorized) {
              throw UsageError("family '" + family->name + "' is not a product");
            }
            factors.push_back(generate(family->name, family->params));
          }
        } else {
          factors = read_factor_files(bc_factors);
          descriptor = join_paths(bc_factors, " x ");
        }
        ProductSpec spec(std::move(factors));
        if (bc_labels == "coords") labels = coordinate_labels(spec);
        if (method == Method::kFactorized) {
          report = factorized_betweenness(ProductGeodesics(std::move(spec)), descriptor);
        } else {
          report = betweenness(cartesian_product(spec.factors()).graph, method, descriptor);
        }
      }
      emit_report(report, bc_format, labels, bc_out);
      return 0;
    }

    if (*wi) {
      const auto family = parse_family(wi_family);
      const int sources = !wi_file.empty() + family.has_value() + !wi_factors.empty();
      if (sources != 1) throw UsageError("wiener needs exactly one of FILE, --family or --factors");
      BigInt value;
      if (!wi_file.empty()) {
        value = wiener(read_edge_list_file(wi_file));
      } else if (!wi_factors.empty()) {
        const auto factors = read_factor_files(wi_factors);
        value = product_wiener(factors);
      } else {
        const auto factors = family_factors(*family);
        value = factors.empty() ? wiener(generate(family->name, family->params))
                                : product_wiener(factors);
      }
      std::cout << value.get_str() << '\n';
      return 0;
    }

    if (*ver) {
      const auto results = run_verification(ver_scope);
      bool ok = true;
      double total = 0;
      for (const auto& r : results) {
        total += r.seconds;
        std::printf("%s %-34s %8zu checks  %7.2fs\n", r.passed() ? "PASS" : "FAIL",
                    r.name.c_str(), r.checks, r.seconds);
        if (!r.passed()) {
          ok = false;
          std::printf("     %zu failure(s); first: %s\n", r.failures, r.counterexample.c_str());
        }
      }
      std::printf("%s: %zu suite(s) in %.2fs\n", ok ? "all passed" : "FAILED", results.size(),
                  total);
      return ok ? 0 : kVerifyFailed;
    }

    if (*be) {
      std::vector<Method> methods;
      for (const auto& m : be_methods) methods.push_back(*parse_method(m));
      write_bench_csv(std::cout, run_bench(be_family, be_max, methods));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
