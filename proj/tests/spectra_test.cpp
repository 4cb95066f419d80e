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
#include "sbarron/spectra.hpp"
#include "test_support.hpp"

namespace sbarron {
namespace {

using testing::C;

AValue scalar(C z) {
  AValue v(1, 1);
  v << z;
  return v;
}

FourierCoefficients random_coefficients(const GroupDescriptor& g, int band,
                                        const ValueSpace& space, std::mt19937_64& rng) {
  auto c = FourierCoefficients::zeros(truncated_dual(g, band), space);
  for (auto& b : c.blocks)
    for (auto& e : b.entries) e = testing::random_value(space, rng);
  return c;
}

// Independent double-loop evaluations of the spectral norms.
double naive_weighted_sum(const FourierCoefficients& c, const Weight& w, double p,
                          double exponent) {
  double total = 0;
  for (std::size_t s = 0; s < c.dual.size(); ++s) {
    const auto sigma = c.dual.labels[s];
    const double gamma = w.gamma(c.group(), sigma);
    const double weight = std::pow(1 + gamma * gamma, exponent);
    double inner = 0;
    const int d = c.dual.dims[s];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) inner += std::pow(norm(c.space, c.blocks[s](i, j)), p);
    total += d * weight * inner;
  }
  return total;
}

TEST(SpectraTest, SpNormExamples) {
  const auto g = GroupDescriptor::torus();
  const auto space = ValueSpace::vector(2, NormKind::l2);
  auto c = FourierCoefficients::zeros(truncated_dual(g, 2), space);
  AValue v(2, 1);
  v << 3, C(0, 4);
  c.block({-2})(0, 0) = v;
  for (double p : {1.0, 1.5, 2.0, 7.0}) EXPECT_NEAR(sp_norm(c, p), 5.0, 1e-14);

  auto d = FourierCoefficients::zeros(truncated_dual(GroupDescriptor::dihedral(4), 0),
                                      ValueSpace::scalar());
  d.block({4})(1, 0) = scalar(0.5);
  EXPECT_NEAR(sp_norm(d, 1.0), 1.0, 1e-15);
}

TEST(SpectraTest, SpNormMatchesNaiveOracle) {
  std::mt19937_64 rng(1);
  for (const auto& g : testing::test_groups()) {
    for (const auto& space : testing::test_spaces()) {
      const auto c = random_coefficients(g, 2, space, rng);
      for (double p : {1.0, 2.0, 3.5}) {
        const double oracle = std::pow(naive_weighted_sum(c, Weight::constant_gamma(0), p, 0), 1 / p);
        EXPECT_NEAR(sp_norm(c, p), oracle, 1e-13 * oracle);
      }
    }
  }
}

TEST(SpectraTest, SInfNorm) {
  const auto g = GroupDescriptor::cyclic(4);
  auto c = FourierCoefficients::zeros(truncated_dual(g, 0), ValueSpace::scalar());
  EXPECT_EQ(s_inf_norm(c), 0.0);
  c.block({1})(0, 0) = scalar(0.5);
  c.block({3})(0, 0) = scalar(C(0, 0.25));
  EXPECT_EQ(s_inf_norm(c), 0.5);
}

TEST(SpectraTest, SInfBoundedByL1Norm) {
  std::mt19937_64 rng(2);
  for (const auto& g : testing::test_groups()) {
    const auto space = ValueSpace::vector(3, NormKind::l1);
    const auto rule = quadrature(g, 2);
    GridFunction f{space, rule, {}};
    for (std::size_t k = 0; k < rule.size(); ++k) f.samples.push_back(testing::random_value(space, rng));
    if (!g.is_finite()) f = sample(forward(f, truncated_dual(g, 2)), rule);
    EXPECT_LE(s_inf_norm(forward(f, truncated_dual(g, 2))), lp_norm(f, 1.0) * (1 + 1e-12));
  }
}

TEST(SpectraTest, BarronExamples) {
  const auto g = GroupDescriptor::torus();
  auto c = FourierCoefficients::zeros(truncated_dual(g, 2), ValueSpace::scalar());
  c.block({2})(0, 0) = scalar(1);
  EXPECT_NEAR(barron_norm(c, Weight::abs_n(1.0)), 2.2360680, 1e-6);
  EXPECT_NEAR(barron_norm(c, Weight::abs_n(1.0)), std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(sobolev_norm(c, Weight::abs_n(1.0)), std::sqrt(5.0), 1e-15);

  // Z_2 with gamma == 1 and s = 2: coefficients (a +- b) / 2, factor 2.
  const auto z2 = GroupDescriptor::cyclic(2);
  const C a(1.5, -0.5), b(-0.25, 2);
  const auto rule = quadrature(z2, 0);
  GridFunction f{ValueSpace::scalar(), rule, {scalar(a), scalar(b)}};
  const auto cz = forward(f, truncated_dual(z2, 0));
  EXPECT_NEAR(barron_norm(cz, Weight::constant_gamma(1.0, 2.0)),
              std::abs(a + b) + std::abs(a - b), 1e-15);
}

TEST(SpectraTest, BarronAtOrderZeroIsSp1) {
  std::mt19937_64 rng(3);
  for (const auto& g : testing::test_groups()) {
    const auto c = random_coefficients(g, 2, ValueSpace::matrix_algebra(2), rng);
    EXPECT_EQ(barron_norm(c, Weight::natural(0.0)), sp_norm(c, 1.0));
  }
}

TEST(SpectraTest, WeightedNormsMatchNaiveOracle) {
  std::mt19937_64 rng(4);
  for (const auto& g : testing::test_groups()) {
    const auto c = random_coefficients(g, 2, ValueSpace::vector(2, NormKind::linf), rng);
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      const auto w = Weight::natural(s);
      const double barron = naive_weighted_sum(c, w, 1.0, s / 2);
      const double sobolev = std::sqrt(naive_weighted_sum(c, w, 2.0, s));
      EXPECT_NEAR(barron_norm(c, w), barron, 1e-13 * barron);
      EXPECT_NEAR(sobolev_norm(c, w), sobolev, 1e-13 * sobolev);
      const auto report = barron_norm_report(c, w);
      double total = 0;
      for (const auto& [label, v] : report.per_irrep) total += v;
      EXPECT_NEAR(report.value, total, 1e-12 * total);
    }
  }
}

TEST(SpectraTest, NormAxiomsOnCoefficients) {
  std::mt19937_64 rng(5);
  const auto g = GroupDescriptor::su2();
  const auto space = ValueSpace::vector(2, NormKind::l2);
  const auto w = Weight::natural(1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_coefficients(g, 2, space, rng);
    const auto b = random_coefficients(g, 2, space, rng);
    auto sum = a;
    auto scaled = a;
    const C lambda(-1.3, 0.4);
    for (std::size_t s = 0; s < a.blocks.size(); ++s)
      for (std::size_t e = 0; e < a.blocks[s].entries.size(); ++e) {
        sum.blocks[s].entries[e] += b.blocks[s].entries[e];
        scaled.blocks[s].entries[e] *= lambda;
      }
    for (auto fn : {barron_norm, sobolev_norm}) {
      EXPECT_LE(fn(sum, w), (fn(a, w) + fn(b, w)) * (1 + 1e-12));
      EXPECT_NEAR(fn(scaled, w), std::abs(lambda) * fn(a, w), 1e-12 * fn(scaled, w));
    }
  }
}

TEST(SpectraTest, MonotoneInOrder) {
  std::mt19937_64 rng(6);
  for (const auto& g : testing::test_groups()) {
    const auto c = random_coefficients(g, 2, ValueSpace::vector(3, NormKind::l1), rng);
    double prev = 0;
    for (double s = 0; s <= 4; s += 0.25) {
      const double v = barron_norm(c, Weight::natural(s));
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(SpectraTest, TransposeInvariance) {
  std::mt19937_64 rng(7);
  const auto c = random_coefficients(GroupDescriptor::su2(), 2, ValueSpace::matrix_algebra(2), rng);
  auto t = c;
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const int d = c.blocks[s].dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t.blocks[s](i, j) = c.blocks[s](j, i);
  }
  const auto w = Weight::natural(1.5);
  EXPECT_NEAR(sp_norm(t, 1.7), sp_norm(c, 1.7), 1e-14 * sp_norm(c, 1.7));
  EXPECT_EQ(s_inf_norm(t), s_inf_norm(c));
  EXPECT_NEAR(barron_norm(t, w), barron_norm(c, w), 1e-14 * barron_norm(c, w));
  EXPECT_NEAR(sobolev_norm(t, w), sobolev_norm(c, w), 1e-14 * sobolev_norm(c, w));
}

TEST(SpectraTest, SobolevOrderZeroIsL2Norm) {
  std::mt19937_64 rng(8);
  for (const auto& g : testing::test_groups()) {
    const auto c = random_coefficients(g, 2, ValueSpace::scalar(), rng);
    const auto f = sample(c, quadrature(g, 2));
    EXPECT_NEAR(sobolev_norm(c, Weight::natural(0.0)), lp_norm(f, 2.0),
                1e-10 * lp_norm(f, 2.0));
  }
}

TEST(SpectraTest, GridNorms) {
  const auto torus = GroupDescriptor::torus();
  const auto rule = quadrature(torus, 3);
  AValue v(2, 1);
  v << 1, C(0, -1);
  const auto space = ValueSpace::vector(2, NormKind::l1);
  GridFunction constant{space, rule, std::vector<AValue>(rule.size(), v)};
  for (double p : {1.0, 2.0, 3.0}) EXPECT_NEAR(lp_norm(constant, p), 2.0, 1e-14);
  EXPECT_EQ(sup_norm(constant), 2.0);

  const auto z2 = GroupDescriptor::cyclic(2);
  GridFunction f{ValueSpace::scalar(), quadrature(z2, 0), {scalar(1), scalar(0)}};
  EXPECT_NEAR(lp_norm(f, 1.0), 0.5, 1e-16);

  GridFunction chi{ValueSpace::scalar(), rule, {}};
  for (const auto& x : rule.nodes)
    chi.samples.push_back(scalar(std::polar(1.0, 2 * std::numbers::pi * std::get<TorusPoint>(x).x)));
  EXPECT_NEAR(lp_norm(chi, 2.0), 1.0, 1e-14);
}

TEST(SpectraTest, BuiltinGammaValues) {
  const auto t = GroupDescriptor::torus();
  EXPECT_EQ(Weight::abs_n().gamma(t, {-3}), 3.0);
  const auto su2 = GroupDescriptor::su2();
  EXPECT_NEAR(Weight::sqrt_l_lplus1().gamma(su2, {2}), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Weight::natural().gamma(su2, {3}), std::sqrt(1.5 * 2.5), 1e-15);
  EXPECT_EQ(Weight::abs_n().gamma(GroupDescriptor::cyclic(8), {6}), 2.0);
  const auto d4 = GroupDescriptor::dihedral(4);
  EXPECT_EQ(Weight::natural().gamma(d4, {0}), 0.0);
  EXPECT_EQ(Weight::natural().gamma(d4, {2}), 1.0);
  EXPECT_EQ(Weight::natural().gamma(d4, {4}), 1.0);
  EXPECT_EQ(Weight::natural(2.0).factor(t, {2}), 5.0);
}

TEST(SpectraTest, WeightErrors) {
  const auto dual = truncated_dual(GroupDescriptor::torus(), 2);
  EXPECT_THROW(validate(Weight::sqrt_l_lplus1(), dual), ConfigError);
  EXPECT_THROW(validate(Weight::from_table({{0, 1.0}, {1, 2.0}}), dual), ConfigError);
  EXPECT_THROW(validate(Weight::constant_gamma(-1.0), dual), ConfigError);
  EXPECT_NO_THROW(validate(Weight::from_table({{0, 0}, {-1, 1}, {1, 1}, {-2, 2}, {2, 2}}), dual));
  EXPECT_THROW(validate(Weight::abs_n(), truncated_dual(GroupDescriptor::dihedral(4), 0)),
               ConfigError);
  auto c = FourierCoefficients::zeros(dual, ValueSpace::scalar());
  EXPECT_THROW(sp_norm(c, 0.5), ConfigError);
  EXPECT_THROW(barron_norm(c, Weight::from_table({{0, 1.0}})), ConfigError);
}

}  // namespace
}  // namespace sbarron
