//==============================================================================
//
// Copyright 2026 The sbarron Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
//==============================================================================

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sbarron/json_io.hpp"

namespace sbarron {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sbarron_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::ostringstream out_;
  std::ostringstream err_;
  fs::path dir_;
};

constexpr const char* kTorusMode2 = R"({"group":{"kind":"torus"},
  "space":{"dim":1,"norm":"l2","algebra":true},
  "modes":[{"sigma":2,"i":1,"j":1,"value":[[1,0]]}]})";

TEST_F(CliTest, TransformSingleModeHasOneNonzeroLabel) {
  write("f.json", kTorusMode2);
  ASSERT_EQ(run({"transform", "--in", path("f.json"), "--band", "3", "--out", path("c.json")}), 0)
      << err_.str();
  const auto c = coefficients_from_json(parse_json(read("c.json")));
  EXPECT_EQ(c.dual.band, 3);
  int nonzero = 0;
  for (std::size_t s = 0; s < c.dual.size(); ++s)
    if (norm(c.space, c.blocks[s](0, 0)) > 0) {
      ++nonzero;
      EXPECT_EQ(c.dual.labels[s].value, 2);
    }
  EXPECT_EQ(nonzero, 1);
}

TEST_F(CliTest, MalformedJsonExitsTwoWithPosition) {
  write("bad.json", "{\"group\": [1,\n 2,,]}");
  EXPECT_EQ(run({"transform", "--in", path("bad.json")}), 2);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"transform", "--in", path("missing.json")}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
}

TEST_F(CliTest, SchemaViolationExitsTwo) {
  write("f.json", R"({"group":{"kind":"torus"},"space":{"dim":1,"norm":"l2"},
    "modes":[{"sigma":1,"i":2,"j":1,"value":[[1,0]]}]})");
  EXPECT_EQ(run({"transform", "--in", path("f.json")}), 2);
  write("g.json", kTorusMode2);
  EXPECT_EQ(run({"transform", "--in", path("g.json"), "--group", "su2"}), 2);
}

TEST_F(CliTest, InsufficientBandExitsThree) {
  write("f.json", kTorusMode2);
  EXPECT_EQ(run({"transform", "--in", path("f.json"), "--band", "1"}), 3);
  ASSERT_EQ(run({"synth", "--in", path("f.json"), "--out", path("g.json")}), 0) << err_.str();
  EXPECT_EQ(run({"transform", "--in", path("g.json"), "--band", "4"}), 3);
}

TEST_F(CliTest, DihedralMatrixCoefficientMatchesBruteForce) {
  const auto g = GroupDescriptor::dihedral(4);
  const auto rule = quadrature(g, 0);
  GridFunction f{ValueSpace::scalar(), rule, {}};
  for (const auto& x : rule.nodes) {
    AValue v(1, 1);
    v << irrep_matrix(g, {4}, x)(0, 1);
    f.samples.push_back(v);
  }
  write("grid.json", to_json(f).dump());
  ASSERT_EQ(run({"transform", "--in", path("grid.json"), "--out", path("c.json")}), 0);
  const auto c = coefficients_from_json(parse_json(read("c.json")));
  for (std::size_t s = 0; s < c.dual.size(); ++s) {
    const int d = c.dual.dims[s];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::complex<double> brute = 0;
        for (int e = 0; e < 8; ++e)
          brute += std::conj(irrep_matrix(g, c.dual.labels[s], FiniteElement{e})(i, j)) *
                   irrep_matrix(g, {4}, FiniteElement{e})(0, 1) / 8.0;
        EXPECT_LT(std::abs(c.blocks[s](i, j)(0, 0) - brute), 1e-15);
      }
  }
}

TEST_F(CliTest, NormExamples) {
  write("f.json", kTorusMode2);
  ASSERT_EQ(run({"transform", "--in", path("f.json"), "--out", path("c.json")}), 0);
  ASSERT_EQ(run({"norm", "--in", path("c.json"), "--norm", "barron", "--weight", "abs_n",
                 "--s", "1"}),
            0);
  const auto j = parse_json(out_.str());
  EXPECT_EQ(j["norm"], "barron");
  EXPECT_EQ(j["s"], 1.0);
  EXPECT_NEAR(j["value"].get<double>(), 2.2360680, 1e-6);
  EXPECT_TRUE(j.contains("per_irrep"));

  ASSERT_EQ(run({"norm", "--in", path("c.json"), "--norm", "sp", "--p", "1"}), 0);
  const double sp1 = parse_json(out_.str())["value"].get<double>();
  ASSERT_EQ(run({"norm", "--in", path("c.json"), "--norm", "barron", "--s", "0"}), 0);
  EXPECT_EQ(parse_json(out_.str())["value"].get<double>(), sp1);

  write("zero.json", R"({"group":{"kind":"su2"},"space":{"dim":2,"norm":"l1"},"modes":[]})");
  for (const char* kind : {"sp", "sinf", "barron", "sobolev"}) {
    ASSERT_EQ(run({"norm", "--in", path("zero.json"), "--band", "2", "--norm", kind}), 0);
    EXPECT_EQ(parse_json(out_.str())["value"].get<double>(), 0.0) << kind;
  }
  EXPECT_EQ(run({"norm", "--in", path("c.json"), "--norm", "barron", "--weight",
                 "sqrt_l_lplus1"}),
            2);
}

TEST_F(CliTest, FileRoundTripMatchesInProcess) {
  const auto g = GroupDescriptor::su2();
  Generator gen(17);
  const auto dual = truncated_dual(g, 2);
  const auto space = ValueSpace::matrix_algebra(2);
  const auto f = random_function(gen, Family::random, dual, space);
  const auto grid = synthesize(f, quadrature(g, 2));
  write("grid.json", to_json(grid).dump());
  ASSERT_EQ(run({"transform", "--in", path("grid.json"), "--out", path("c.json")}), 0);
  ASSERT_EQ(run({"norm", "--in", path("c.json"), "--norm", "sobolev", "--s", "1.5"}), 0);
  const double file_value = parse_json(out_.str())["value"].get<double>();
  const double direct = sobolev_norm(forward(grid, dual), Weight::natural(1.5));
  EXPECT_NEAR(file_value, direct, 1e-13 * direct);
}

TEST_F(CliTest, Operators) {
  write("f.json", kTorusMode2);
  ASSERT_EQ(run({"op", "bessel", "--in", path("f.json"), "--weight", "abs_n", "--s", "1",
                 "--out", path("b.json")}),
            0)
      << err_.str();
  const auto b = coefficients_from_json(parse_json(read("b.json")));
  EXPECT_NEAR(std::abs(b.block({2})(0, 0)(0, 0)), 5.0, 1e-15);

  ASSERT_EQ(run({"op", "pseudodiff", "--in", path("f.json"), "--symbol", "const:0:2"}), 0);
  const auto p = coefficients_from_json(parse_json(out_.str()));
  EXPECT_EQ(p.block({2})(0, 0)(0, 0), std::complex<double>(0, 2));
  EXPECT_EQ(run({"op", "pseudodiff", "--in", path("f.json")}), 2);

  write("h.json", R"({"group":{"kind":"torus"},"space":{"dim":1,"norm":"l2","algebra":true},
    "modes":[{"sigma":2,"i":1,"j":1,"value":[[0,1]]},{"sigma":1,"i":1,"j":1,"value":[[1,0]]}]})");
  ASSERT_EQ(run({"op", "convolve", "--in", path("f.json"), "--with", path("h.json")}), 0)
      << err_.str();
  const auto conv = coefficients_from_json(parse_json(out_.str()));
  EXPECT_EQ(conv.block({2})(0, 0)(0, 0), std::complex<double>(0, 1));
  EXPECT_EQ(conv.block({1})(0, 0)(0, 0), std::complex<double>(0, 0));

  ASSERT_EQ(run({"synth", "--in", path("f.json"), "--out", path("fg.json")}), 0);
  ASSERT_EQ(run({"synth", "--in", path("h.json"), "--out", path("hg.json")}), 0);
  ASSERT_EQ(run({"op", "convolve", "--in", path("fg.json"), "--with", path("hg.json"),
                 "--out", path("cg.json")}),
            0);
  EXPECT_EQ(parse_json(read("cg.json"))["type"], "grid");
}

TEST_F(CliTest, SuiteExitCodesAndDeterminism) {
  write("bad.json", R"({"groups":[{"kind":"cyclic","N":4}],"bands":[1],
    "spaces":[{"dim":1,"norm":"l2","algebra":true}],"weights":[{"builtin":"natural"}],
    "orders":[0,1],"functions_per_case":2,"seed":1,
    "interpolation":{"r":[0],"t":[1],"alpha":[1.5]}})");
  EXPECT_EQ(run({"suite", "--config", path("bad.json"), "--out", path("r.json")}), 2);
  EXPECT_FALSE(fs::exists(path("r.json")));

  write("ok.json", R"({"groups":[{"kind":"dihedral","n":4},{"kind":"torus"}],"bands":[1],
    "spaces":[{"dim":2,"norm":"operator","algebra":true}],"weights":[{"builtin":"natural"}],
    "orders":[0,0.5,1],"functions_per_case":4,"seed":7,"precision_profile":"finite_exact"})");
  ASSERT_EQ(run({"suite", "--config", path("ok.json"), "--out", path("r1.json"), "--csv",
                 path("r1.csv")}),
            0)
      << err_.str();
  ASSERT_EQ(run({"suite", "--config", path("ok.json"), "--out", path("r2.json")}), 0);
  EXPECT_EQ(read("r1.json"), read("r2.json"));
  EXPECT_FALSE(read("r1.csv").empty());
  ASSERT_EQ(run({"suite", "--config", path("ok.json"), "--seed", "8", "--out", path("r3.json")}),
            0);
  EXPECT_NE(read("r1.json"), read("r3.json"));
  ASSERT_EQ(run({"suite", "--config", path("ok.json"), "--profile", "quadrature", "--out",
                 path("r4.json")}),
            0);
  EXPECT_EQ(parse_json(read("r4.json"))["environment"]["profile"], "quadrature");
  EXPECT_EQ(run({"suite", "--config", path("ok.json"), "--profile", "fast"}), 2);
}

TEST_F(CliTest, ProfileFromEnvironment) {
  ::setenv("SBARRON_PROFILE", "quadrature", 1);
  EXPECT_EQ(default_profile(), PrecisionProfile::quadrature);
  ::setenv("SBARRON_PROFILE", "finite_exact", 1);
  EXPECT_EQ(default_profile(), PrecisionProfile::finite_exact);
  ::unsetenv("SBARRON_PROFILE");
}

TEST_F(CliTest, BundledConfigIsTheDefault) {
  std::ifstream in(std::string(SBARRON_SOURCE_DIR) + "/configs/default_suite.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto bundled = suite_config_from_json(parse_json(ss.str()));
  EXPECT_EQ(to_json(bundled).dump(), to_json(default_suite_config()).dump());
  EXPECT_EQ(run({"suite", "--config", std::string(SBARRON_SOURCE_DIR) + "/configs/default_suite.json",
                 "--out", path("r.json")}),
            0)
      << err_.str();
}

TEST_F(CliTest, Help) {
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("suite"), std::string::npos);
}

}  // namespace
}  // namespace sbarron
