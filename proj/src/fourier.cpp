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

#include "sbarron/fourier.hpp"

#include <set>
#include <tuple>

#include "sbarron/errors.hpp"

namespace sbarron {

std::string convention_name(IndexConvention c) {
  return c == IndexConvention::conj_u_ij ? "conj_u_ij" : "conj_u_ji";
}

IndexConvention parse_convention(const std::string& name) {
  if (name == "conj_u_ij") return IndexConvention::conj_u_ij;
  if (name == "conj_u_ji") return IndexConvention::conj_u_ji;
  throw SchemaError("unknown index convention '" + name + "'");
}

namespace {

// Literal inversion sum with u_ij, independent of any stored convention.
AValue literal_inversion(const FourierCoefficients& c, const GroupElement& x) {
  AValue out = zero(c.space);
  const auto mats = dual_matrices(c.dual, x);
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const int d = c.dual.dims[s];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out += static_cast<double>(d) * mats[s](i, j) * c.blocks[s](i, j);
  }
  return out;
}

IndexConvention run_convention_self_test() {
  // u_12 of the two-dimensional irrep of D_4 has an asymmetric coefficient
  // block, so the wrong convention lands on u_21 instead.
  const auto g = GroupDescriptor::dihedral(4);
  const auto dual = truncated_dual(g, 0);
  const IrrepLabel two_dim = dual.labels.back();
  const auto rule = quadrature(g, 0);
  GridFunction f{ValueSpace::scalar(), rule, {}};
  for (const auto& x : rule.nodes)
    f.samples.push_back(AValue::Constant(1, 1, irrep_matrix(g, two_dim, x)(0, 1)));

  for (auto candidate : {IndexConvention::conj_u_ij, IndexConvention::conj_u_ji}) {
    const auto c = forward(f, dual, candidate);
    double err = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k)
      err = std::max(err, (literal_inversion(c, rule.nodes[k]) - f.samples[k])
                              .cwiseAbs()
                              .maxCoeff());
    if (err < 1e-12) return candidate;
  }
  throw std::logic_error("no index convention reproduces the inversion formula");
}

}  // namespace

IndexConvention validated_convention() {
  static const IndexConvention c = run_convention_self_test();
  return c;
}

const CoefficientBlock& FourierCoefficients::block(IrrepLabel sigma) const {
  const int pos = dual.find(sigma);
  if (pos < 0)
    throw UnknownIrrepError("label " + std::to_string(sigma.value) +
                            " not in coefficient dual");
  return blocks[pos];
}

CoefficientBlock& FourierCoefficients::block(IrrepLabel sigma) {
  return const_cast<CoefficientBlock&>(
      static_cast<const FourierCoefficients&>(*this).block(sigma));
}

FourierCoefficients FourierCoefficients::zeros(const TruncatedDual& dual,
                                               const ValueSpace& space) {
  FourierCoefficients c;
  c.space = space;
  c.dual = dual;
  c.convention = validated_convention();
  c.blocks.reserve(dual.size());
  for (int d : dual.dims)
    c.blocks.push_back({d, std::vector<AValue>(d * d, zero(space))});
  return c;
}

void validate(const FourierCoefficients& c) {
  validate(c.space);
  if (c.blocks.size() != c.dual.size())
    throw DimensionError("coefficient table does not cover the dual");
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const auto& b = c.blocks[s];
    if (b.dim != c.dual.dims[s] ||
        b.entries.size() != static_cast<std::size_t>(b.dim * b.dim))
      throw DimensionError("block for label " +
                           std::to_string(c.dual.labels[s].value) +
                           " is not d x d");
    for (const auto& v : b.entries) check_conforms(c.space, v);
  }
}

void validate(const GridFunction& f) {
  validate(f.space);
  if (f.samples.size() != f.rule.nodes.size())
    throw DimensionError("sample count does not match the node count");
  for (const auto& v : f.samples) check_conforms(f.space, v);
}

int BandlimitedFunction::band() const {
  int b = 0;
  for (const auto& m : modes) b = std::max(b, label_band(group, m.sigma));
  return b;
}

void validate(const BandlimitedFunction& f) {
  validate(f.space);
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& m : f.modes) {
    const int d = irrep_dim(f.group, m.sigma);
    if (m.i < 0 || m.i >= d || m.j < 0 || m.j >= d)
      throw DimensionError("mode index outside 1..d_sigma");
    if (!seen.insert({m.sigma.value, m.i, m.j}).second)
      throw DimensionError("duplicate mode (sigma, i, j)");
    check_conforms(f.space, m.value);
  }
}

FourierCoefficients coefficients_of(const BandlimitedFunction& f,
                                    const TruncatedDual& dual) {
  validate(f);
  if (!(dual.group == f.group))
    throw ConfigError("dual belongs to a different group");
  auto c = FourierCoefficients::zeros(dual, f.space);
  for (const auto& m : f.modes) {
    if (!dual.contains(m.sigma))
      throw PrecisionError("mode label " + std::to_string(m.sigma.value) +
                           " lies outside the dual band " +
                           std::to_string(dual.band));
    c.block(m.sigma)(m.i, m.j) = m.value;
  }
  return c;
}

AValue evaluate(const BandlimitedFunction& f, const GroupElement& x) {
  AValue out = zero(f.space);
  for (const auto& m : f.modes) {
    const auto u = irrep_matrix(f.group, m.sigma, x);
    out += static_cast<double>(u.rows()) * u(m.i, m.j) * m.value;
  }
  return out;
}

std::vector<Eigen::MatrixXcd> dual_matrices(const TruncatedDual& dual,
                                            const GroupElement& x) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(dual.size());
  for (const auto& l : dual.labels) out.push_back(irrep_matrix(dual.group, l, x));
  return out;
}

namespace {

void check_forward_inputs(const GridFunction& f, const TruncatedDual& dual) {
  validate(f);
  if (!(f.group() == dual.group))
    throw ConfigError("grid function and dual belong to different groups");
  if (!dual.group.is_finite() && f.rule.band < dual.band)
    throw PrecisionError("quadrature band " + std::to_string(f.rule.band) +
                         " is below the dual band " + std::to_string(dual.band));
}

// Accumulates in node order, then label, then row-major (i, j).
template <typename MatsAt>
FourierCoefficients forward_impl(const GridFunction& f, const TruncatedDual& dual,
                                 IndexConvention convention, MatsAt&& mats_at) {
  FourierCoefficients c;
  c.space = f.space;
  c.dual = dual;
  c.convention = convention;
  for (int d : dual.dims)
    c.blocks.push_back({d, std::vector<AValue>(d * d, zero(f.space))});

  for (std::size_t k = 0; k < f.rule.size(); ++k) {
    const auto& mats = mats_at(k);
    const double w = f.rule.weights[k];
    for (std::size_t s = 0; s < dual.size(); ++s) {
      const int d = dual.dims[s];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Complex u = convention == IndexConvention::conj_u_ij
                                ? mats[s](i, j)
                                : mats[s](j, i);
          c.blocks[s](i, j) += (w * std::conj(u)) * f.samples[k];
        }
    }
  }
  return c;
}

AValue inverse_impl(const FourierCoefficients& c,
                    const std::vector<Eigen::MatrixXcd>& mats) {
  AValue out = zero(c.space);
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const int d = c.dual.dims[s];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Complex u = c.convention == IndexConvention::conj_u_ij
                              ? mats[s](i, j)
                              : mats[s](j, i);
        out += (static_cast<double>(d) * u) * c.blocks[s](i, j);
      }
  }
  return out;
}

}  // namespace

FourierCoefficients forward(const GridFunction& f, const TruncatedDual& dual,
                            IndexConvention convention) {
  check_forward_inputs(f, dual);
  std::vector<Eigen::MatrixXcd> scratch;
  return forward_impl(f, dual, convention, [&](std::size_t k) -> const auto& {
    scratch = dual_matrices(dual, f.rule.nodes[k]);
    return scratch;
  });
}

FourierCoefficients forward(const GridFunction& f, const TruncatedDual& dual) {
  return forward(f, dual, validated_convention());
}

AValue inverse(const FourierCoefficients& c, const GroupElement& x) {
  validate(c);
  return inverse_impl(c, dual_matrices(c.dual, x));
}

GridFunction sample(const FourierCoefficients& c, const QuadratureRule& rule) {
  if (!(rule.group == c.group()))
    throw ConfigError("rule and coefficients belong to different groups");
  validate(c);
  GridFunction f{c.space, rule, {}};
  f.samples.reserve(rule.size());
  for (const auto& x : rule.nodes)
    f.samples.push_back(inverse_impl(c, dual_matrices(c.dual, x)));
  return f;
}

DualSampler::DualSampler(TruncatedDual dual, QuadratureRule rule)
    : dual_(std::move(dual)), rule_(std::move(rule)) {
  if (!(dual_.group == rule_.group))
    throw ConfigError("rule and dual belong to different groups");
  mats_.reserve(rule_.size());
  for (const auto& x : rule_.nodes) mats_.push_back(dual_matrices(dual_, x));
}

FourierCoefficients DualSampler::forward(const GridFunction& f,
                                         IndexConvention convention) const {
  check_forward_inputs(f, dual_);
  if (f.rule.size() != rule_.size())
    throw DimensionError("grid function is not sampled on this rule");
  return forward_impl(f, dual_, convention,
                      [&](std::size_t k) -> const auto& { return mats_[k]; });
}

FourierCoefficients DualSampler::forward(const GridFunction& f) const {
  return forward(f, validated_convention());
}

GridFunction DualSampler::sample(const FourierCoefficients& c) const {
  validate(c);
  if (c.dual.labels != dual_.labels || !(c.group() == dual_.group))
    throw ConfigError("coefficients live on a different dual");
  GridFunction f{c.space, rule_, {}};
  f.samples.reserve(rule_.size());
  for (const auto& m : mats_) f.samples.push_back(inverse_impl(c, m));
  return f;
}

GridFunction synthesize(const BandlimitedFunction& f,
                        const QuadratureRule& rule) {
  validate(f);
  if (!(rule.group == f.group))
    throw ConfigError("rule and function belong to different groups");
  GridFunction out{f.space, rule, {}};
  out.samples.reserve(rule.size());
  for (const auto& x : rule.nodes) out.samples.push_back(evaluate(f, x));
  return out;
}

}  // namespace sbarron
