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

#include "sbarron/errors.hpp"
#include "sbarron/json_io.hpp"
#include "test_support.hpp"

namespace sbarron {
namespace {

using testing::C;

TEST(JsonTest, GroupRoundTrip) {
  for (const auto& g : testing::test_groups()) EXPECT_EQ(group_from_json(to_json(g)), g);
  EXPECT_EQ(to_json(GroupDescriptor::cyclic(8)).dump(), R"({"kind":"cyclic","N":8})");
  EXPECT_EQ(to_json(GroupDescriptor::dihedral(4)).dump(), R"({"kind":"dihedral","n":4})");
  EXPECT_EQ(to_json(GroupDescriptor::su2()).dump(), R"({"kind":"su2"})");
  EXPECT_THROW(group_from_json(parse_json(R"({"kind":"so3"})")), SchemaError);
  EXPECT_THROW(group_from_json(parse_json(R"({"kind":"dihedral","n":2})")), SchemaError);
  EXPECT_THROW(group_from_json(parse_json(R"({"kind":"cyclic"})")), SchemaError);
}

TEST(JsonTest, SpaceAndValues) {
  const auto space = space_from_json(parse_json(R"({"dim":2,"norm":"l2","algebra":false})"));
  EXPECT_EQ(space.dim, 2);
  EXPECT_EQ(space.norm, NormKind::l2);
  const auto v = value_from_json(space, parse_json("[[3,0],[0,4]]"));
  EXPECT_EQ(norm(space, v), 5.0);
  EXPECT_EQ(to_json(space, v).dump(), "[[3.0,0.0],[0.0,4.0]]");
  EXPECT_THROW(value_from_json(space, parse_json("[[3,0]]")), SchemaError);
  EXPECT_THROW(value_from_json(space, parse_json("[[3,0],[1]]")), SchemaError);

  const auto mat = ValueSpace::matrix_algebra(2);
  std::mt19937_64 rng(1);
  const AValue m = testing::random_value(mat, rng);
  EXPECT_EQ(value_from_json(mat, to_json(mat, m)), m);
  EXPECT_THROW(space_from_json(parse_json(R"({"dim":2,"norm":"l2","algebra":true})")),
               SchemaError);
}

TEST(JsonTest, BandlimitedRoundTrip) {
  const auto j = parse_json(R"({"group":{"kind":"dihedral","n":4},
      "space":{"dim":1,"norm":"l2","algebra":true},
      "modes":[{"sigma":4,"i":1,"j":2,"value":[[0.5,-1]]}]})");
  const auto f = bandlimited_from_json(j);
  ASSERT_EQ(f.modes.size(), 1u);
  EXPECT_EQ(f.modes[0].i, 0);
  EXPECT_EQ(f.modes[0].j, 1);
  EXPECT_EQ(f.modes[0].value(0, 0), C(0.5, -1));
  const auto back = bandlimited_from_json(to_json(f));
  EXPECT_EQ(to_json(back).dump(), to_json(f).dump());
  EXPECT_THROW(bandlimited_from_json(parse_json(R"({"group":{"kind":"dihedral","n":4},
      "space":{"dim":1,"norm":"l2"},"modes":[{"sigma":4,"i":3,"j":1,"value":[[1,0]]}]})")),
               SchemaError);
}

TEST(JsonTest, CoefficientsRoundTripIsExact) {
  std::mt19937_64 rng(2);
  for (const auto& g : testing::test_groups()) {
    auto c = FourierCoefficients::zeros(truncated_dual(g, 2), ValueSpace::matrix_algebra(2));
    for (auto& b : c.blocks)
      for (auto& e : b.entries) e = testing::random_value(c.space, rng);
    const auto text = to_json(c).dump();
    const auto back = coefficients_from_json(parse_json(text));
    EXPECT_EQ(to_json(back).dump(), text);
    for (std::size_t s = 0; s < c.blocks.size(); ++s)
      for (std::size_t e = 0; e < c.blocks[s].entries.size(); ++e)
        EXPECT_EQ(back.blocks[s].entries[e], c.blocks[s].entries[e]);
  }
}

TEST(JsonTest, CoefficientsMissingLabelsAreZero) {
  const auto c = coefficients_from_json(parse_json(R"({"group":{"kind":"torus"},
      "space":{"dim":1,"norm":"l1"},"band":2,"coefficients":{"-2":[[[[1,1]]]]}})"));
  EXPECT_EQ(c.block({-2})(0, 0)(0, 0), C(1, 1));
  EXPECT_EQ(c.block({1})(0, 0)(0, 0), C(0, 0));
  EXPECT_THROW(coefficients_from_json(parse_json(R"({"group":{"kind":"torus"},
      "space":{"dim":1,"norm":"l1"},"band":1,"coefficients":{"2":[[[[1,1]]]]}})")),
               SchemaError);
  EXPECT_THROW(coefficients_from_json(parse_json(R"({"group":{"kind":"torus"},
      "space":{"dim":1,"norm":"l1"},"band":1,"coefficients":{"x":[[[[1,1]]]]}})")),
               SchemaError);
}

TEST(JsonTest, GridRoundTrip) {
  std::mt19937_64 rng(3);
  const auto rule = quadrature(GroupDescriptor::torus(), 1);
  GridFunction f{ValueSpace::vector(2, NormKind::linf), rule, {}};
  for (std::size_t k = 0; k < rule.size(); ++k) f.samples.push_back(testing::random_value(f.space, rng));
  const auto back = grid_from_json(to_json(f));
  for (std::size_t k = 0; k < rule.size(); ++k) EXPECT_EQ(back.samples[k], f.samples[k]);
  auto j = to_json(f);
  j["samples"].erase(0);
  EXPECT_THROW(grid_from_json(j), SchemaError);
}

TEST(JsonTest, WeightsAndSymbols) {
  const auto w = weight_from_json(parse_json(R"({"builtin":"abs_n","s":1.5})"));
  EXPECT_EQ(w.builtin, Weight::Builtin::abs_n);
  EXPECT_EQ(w.s, 1.5);
  const auto t = weight_from_json(parse_json(R"({"table":{"0":0.5,"-1":2},"s":1})"));
  EXPECT_EQ(t.table.at(-1), 2.0);
  EXPECT_EQ(to_json(weight_from_json(to_json(t))).dump(), to_json(t).dump());
  EXPECT_EQ(weight_from_json(parse_json(R"({"builtin":"constant","value":3})")).constant, 3.0);
  EXPECT_THROW(weight_from_json(parse_json(R"({"builtin":"cosh"})")), SchemaError);

  const auto dual = truncated_dual(GroupDescriptor::torus(), 1);
  const auto a = symbol_from_json(parse_json(R"({"builtin":"bessel","s":1.0})"), dual,
                                  Weight::abs_n());
  EXPECT_EQ(a.at({1}), C(2, 0));
  const auto b = symbol_from_json(parse_json(R"({"table":{"0":[1,0],"1":[0,2],"-1":[0,-2]}})"),
                                  dual, Weight::abs_n());
  EXPECT_EQ(b.at({1}), C(0, 2));
}

TEST(JsonTest, SuiteConfigRoundTrip) {
  const auto c = default_suite_config();
  const auto text = to_json(c).dump();
  EXPECT_EQ(to_json(suite_config_from_json(parse_json(text))).dump(), text);
  const auto empty = suite_config_from_json(parse_json("{}"));
  EXPECT_TRUE(empty.groups.empty());
  EXPECT_THROW(suite_config_from_json(parse_json(R"({"precision_profile":"fast"})")),
               SchemaError);
}

TEST(JsonTest, MalformedTextReportsPosition) {
  try {
    parse_json("{\n  \"kind\": \n}");
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(JsonTest, ReportShape) {
  SuiteConfig c;
  c.groups = {GroupDescriptor::dihedral(4)};
  c.spaces = {ValueSpace::scalar()};
  c.weights = {Weight::natural()};
  c.orders = {0.0, 1.0};
  c.functions_per_case = 1;
  c.seed = 5;
  const auto r = run_suite(c);
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["environment"].contains("profile"));
  EXPECT_TRUE(j["summary"].contains("kappa_paper_census"));
  ASSERT_FALSE(j["checks"].empty());
  const auto& first = j["checks"][0];
  for (const char* key : {"name", "variant", "lhs", "rhs", "constant", "slack", "pass", "params"})
    EXPECT_TRUE(first.contains(key)) << key;
  const auto csv = report_to_csv(r);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            r.checks.size() + 1);
}

}  // namespace
}  // namespace sbarron
