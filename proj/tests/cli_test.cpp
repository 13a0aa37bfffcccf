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

// Drives the cpbc binary end to end. CPBC_CLI is injected by CMake.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cpbc/generators.hpp"
#include "cpbc/io.hpp"
#include "json.hpp"

namespace cpbc {
namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CPBC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<ExactRational> values_of(const std::string& csv) {
  std::istringstream in(csv);
  return read_report_csv(in);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cpbc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string gen(const std::string& family_args, const std::string& name) {
    const auto file = path(name);
    EXPECT_EQ(run("gen " + family_args + " -o " + file).status, 0);
    return file;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesHeaderAndEdges) {
  const auto c4 = lines(run("gen cycle 4").out);
  ASSERT_EQ(c4.size(), 5u);
  EXPECT_EQ(c4.front(), "n 4");
  EXPECT_EQ(lines(run("gen hypercube 3").out).size(), 1u + 12u);
  EXPECT_EQ(lines(run("gen grid 3 3").out).size(), 1u + 12u);
  EXPECT_EQ(run("gen torus 5 6").out, run("gen torus 5 6").out);
}

TEST_F(CliTest, GenErrors) {
  EXPECT_EQ(run("gen wheel 5").status, 2);
  EXPECT_EQ(run("gen cycle 2").status, 2);
  EXPECT_EQ(run("gen cycle x").status, 1);
  EXPECT_EQ(run("gen cycle 4 -o /nonexistent/dir/out.el").status, 2);
  EXPECT_EQ(run("frobnicate").status, 1);
}

TEST_F(CliTest, ProductOfFiles) {
  const auto k2 = gen("complete 2", "k2.el");
  const auto p3 = gen("path 3", "p3.el");
  const auto p2 = gen("path 2", "p2.el");
  const auto k2k2 = lines(run("product " + k2 + " " + k2).out);
  EXPECT_EQ(k2k2.front(), "n 4");
  EXPECT_EQ(k2k2.size(), 1u + 4u);
  const auto grid = lines(run("product " + p3 + " " + p3).out);
  EXPECT_EQ(grid.front(), "n 9");
  EXPECT_EQ(grid.size(), 1u + 12u);
  EXPECT_EQ(run("product " + p2 + " " + p2 + " " + p2).out, run("gen hypercube 3").out);
  const auto coords = lines(run("product " + p2 + " " + p2 + " --labels coords").out);
  EXPECT_EQ(coords.at(1), "(0,0) (0,1)");
}

TEST_F(CliTest, ProductRejectsBadFactors) {
  const auto broken = path("broken.el");
  std::ofstream(broken) << "0 1\n2 3\n";
  const auto p2 = gen("path 2", "p2.el");
  EXPECT_EQ(run("product " + p2 + " " + broken).status, 2);
  EXPECT_EQ(run("product " + p2 + " " + path("missing.el")).status, 2);
}

TEST_F(CliTest, BcClosedFormHypercube) {
  const auto r = run("bc --family hypercube 3 --method closed-form");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(values_of(r.out), std::vector<ExactRational>(8, make_rational(5, 2)));
  const auto doc = nlohmann::json::parse(run("bc --family hypercube 3 --method closed-form --format json").out);
  EXPECT_EQ(doc["uniform"], true);
  EXPECT_EQ(doc["values"][3]["num"], "5");
  EXPECT_EQ(doc["values"][3]["den"], "2");
}

TEST_F(CliTest, BcBrandesOnGridFile) {
  const auto grid = gen("grid 3 3", "grid33.el");
  const auto out = lines(run("bc " + grid + " --method brandes").out);
  ASSERT_EQ(out.size(), 10u);
  EXPECT_EQ(out[0], "vertex,betweenness,decimal");
  EXPECT_EQ(out[1], "0,4/3,1.33333333333");
  EXPECT_EQ(out[5], "4,32/3,10.6666666667");
  EXPECT_EQ(out[9], "8,4/3,1.33333333333");
}

TEST_F(CliTest, BcFactorizedK3K3) {
  const auto k3 = gen("complete 3", "k3.el");
  const auto r = run("bc --factors " + k3 + "," + k3 + " --method factorized");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(values_of(r.out), std::vector<ExactRational>(9, make_rational(2)));
}

TEST_F(CliTest, BcMethodsAgreeOnProduct) {
  const auto c4 = gen("cycle 4", "c4.el");
  const auto s3 = gen("star 3", "s3.el");
  const std::string factors = "--factors " + c4 + "," + s3;
  const auto fac = values_of(run("bc " + factors + " --method factorized").out);
  const auto bra = values_of(run("bc " + factors + " --method brandes").out);
  const auto def = values_of(run("bc " + factors + " --method definitional").out);
  ASSERT_EQ(fac.size(), 16u);
  EXPECT_EQ(fac, bra);
  EXPECT_EQ(fac, def);

  const auto torus_closed = values_of(run("bc --family torus 4 6 --method closed-form").out);
  const auto torus_fac = values_of(run("bc --family torus 4 6 --method factorized").out);
  const auto torus_bra = values_of(run("bc --family torus 4 6 --method brandes").out);
  EXPECT_EQ(torus_closed, std::vector<ExactRational>(24, make_rational(37, 2)));
  EXPECT_EQ(torus_closed, torus_fac);
  EXPECT_EQ(torus_closed, torus_bra);

  const auto grid_closed = values_of(run("bc --family grid 4 5 --method closed-form").out);
  EXPECT_EQ(grid_closed, values_of(run("bc --family grid 4 5 --method factorized").out));
}

TEST_F(CliTest, BcUsageAndValidationErrors) {
  const auto p3 = gen("path 3", "p3.el");
  EXPECT_EQ(run("bc " + p3 + " --method factorized").status, 1);
  EXPECT_EQ(run("bc " + p3 + " --method closed-form").status, 1);
  EXPECT_EQ(run("bc --family path 4 --method closed-form").status, 1);
  EXPECT_EQ(run("bc --method brandes").status, 1);
  EXPECT_EQ(run("bc " + p3 + " --method sampled").status, 1);
  const auto broken = path("broken.el");
  std::ofstream(broken) << "n 4\n0 1\n2 3\n";
  EXPECT_EQ(run("bc " + broken).status, 2);
  EXPECT_EQ(run("bc --family hypercube 0 --method closed-form").status, 2);
}

TEST_F(CliTest, Wiener) {
  const auto c4 = gen("cycle 4", "c4.el");
  const auto p3 = gen("path 3", "p3.el");
  const auto k5 = gen("complete 5", "k5.el");
  EXPECT_EQ(run("wiener " + c4).out, "8\n");
  EXPECT_EQ(run("wiener --factors " + p3 + "," + p3).out, "72\n");
  EXPECT_EQ(run("wiener " + k5).out, "10\n");
  EXPECT_EQ(run("wiener --family torus 4 4").out, "256\n");
}

TEST_F(CliTest, VerifyScopes) {
  const auto closed = run("verify --scope closed-forms");
  EXPECT_EQ(closed.status, 0);
  std::size_t suites = 0;
  for (const auto& line : lines(closed.out)) {
    if (line.rfind("PASS closed-forms/", 0) == 0) ++suites;
  }
  EXPECT_GE(suites, 5u);
  EXPECT_EQ(run("verify --scope products").status, 0);
  EXPECT_EQ(run("verify --scope sum-identity").status, 0);
  EXPECT_EQ(run("verify --scope nonsense").status, 1);
}

TEST_F(CliTest, BenchSchemaAndDeterminism) {
  auto strip_timing = [](const std::string& csv) {
    std::vector<std::string> rows;
    for (const auto& line : lines(csv)) rows.push_back(line.substr(0, line.rfind(',')));
    return rows;
  };
  const auto torus = run("bench --family torus --max 8");
  ASSERT_EQ(torus.status, 0);
  const auto rows = lines(torus.out);
  EXPECT_EQ(rows.front(), "instance,n,method,wall_ms");
  bool saw_brandes = false, saw_factorized = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    saw_brandes |= rows[i].find(",brandes,") != std::string::npos;
    saw_factorized |= rows[i].find(",factorized,") != std::string::npos;
  }
  EXPECT_TRUE(saw_brandes && saw_factorized);

  const auto hamming = lines(run("bench --family hamming --max 4").out);
  std::size_t last = 0;
  for (std::size_t i = 1; i < hamming.size(); ++i) {
    const auto first = hamming[i].find(',');
    const std::size_t n = std::stoul(hamming[i].substr(first + 1));
    EXPECT_GE(n, last);
    last = n;
  }
  EXPECT_EQ(last, 16u);
  EXPECT_EQ(strip_timing(run("bench --family grid --max 5").out),
            strip_timing(run("bench --family grid --max 5").out));
  EXPECT_EQ(run("bench --family hamming --max 1").status, 2);
  EXPECT_EQ(run("bench --family star --max 4").status, 2);
}

}  // namespace
}  // namespace cpbc
