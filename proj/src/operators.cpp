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

#include "sbarron/operators.hpp"

#include <cmath>

#include "sbarron/errors.hpp"

namespace sbarron {

Complex SpectralSymbol::at(IrrepLabel sigma) const {
  const auto it = table.find(sigma.value);
  if (it == table.end())
    throw ConfigError("symbol has no entry for label " +
                      std::to_string(sigma.value));
  return it->second;
}

SpectralSymbol SpectralSymbol::bessel(const TruncatedDual& dual,
                                      const Weight& gamma, double exponent) {
  SpectralSymbol a;
  for (const auto& l : dual.labels)
    a.table[l.value] = std::pow(gamma.base(dual.group, l), exponent);
  return a;
}

SpectralSymbol SpectralSymbol::constant(const TruncatedDual& dual,
                                        Complex value) {
  SpectralSymbol a;
  for (const auto& l : dual.labels) a.table[l.value] = value;
  return a;
}

namespace {

FourierCoefficients scale_blocks(FourierCoefficients c,
                                 const std::vector<Complex>& factors) {
  for (std::size_t s = 0; s < c.blocks.size(); ++s)
    for (auto& v : c.blocks[s].entries) v *= factors[s];
  return c;
}

// True if the rule is the uniform grid m / M with equal weights.
bool is_uniform_torus_grid(const QuadratureRule& rule) {
  const std::size_t m = rule.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto* p = std::get_if<TorusPoint>(&rule.nodes[k]);
    if (p == nullptr) return false;
    if (std::abs(p->x - static_cast<double>(k) / m) > 1e-14) return false;
    if (std::abs(rule.weights[k] - 1.0 / m) > 1e-15) return false;
  }
  return m > 0;
}

bool is_full_finite_group(const QuadratureRule& rule) {
  const auto& g = rule.group;
  if (static_cast<int>(rule.size()) != g.order()) return false;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto* p = std::get_if<FiniteElement>(&rule.nodes[k]);
    if (p == nullptr || p->index != static_cast<int>(k)) return false;
  }
  return true;
}

}  // namespace

FourierCoefficients bessel_potential(const FourierCoefficients& c,
                                     const Weight& w) {
  validate(c);
  validate(w, c.dual);
  std::vector<Complex> factors;
  for (const auto& l : c.dual.labels)
    factors.emplace_back(std::pow(w.base(c.group(), l), w.s));
  return scale_blocks(c, factors);
}

FourierCoefficients pseudo_diff(const FourierCoefficients& c,
                                const SpectralSymbol& a) {
  validate(c);
  std::vector<Complex> factors;
  for (const auto& l : c.dual.labels) factors.push_back(a.at(l));
  return scale_blocks(c, factors);
}

GridFunction convolve_direct(const GridFunction& f, const GridFunction& g) {
  validate(f);
  validate(g);
  if (!(f.space == g.space) || !(f.group() == g.group()) ||
      f.rule.size() != g.rule.size())
    throw ConfigError("convolution operands must share group, rule and space");
  if (!f.space.algebra)
    throw UnsupportedOperationError("convolution requires an algebra value space");

  const auto& grp = f.group();
  const std::size_t m = f.rule.size();
  GridFunction h{f.space, f.rule, std::vector<AValue>(m, zero(f.space))};

  if (grp.is_finite()) {
    if (!is_full_finite_group(f.rule))
      throw UnsupportedGridError("finite-group rule must list every element");
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t y = 0; y < m; ++y) {
        const auto z = multiply(grp, inverse(grp, f.rule.nodes[y]), f.rule.nodes[k]);
        const int idx = std::get<FiniteElement>(z).index;
        h.samples[k] += f.rule.weights[y] * (f.samples[y] * g.samples[idx]);
      }
    }
    return h;
  }
  if (grp.kind == GroupKind::torus && is_uniform_torus_grid(f.rule)) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t y = 0; y < m; ++y) {
        const std::size_t idx = (k + m - y) % m;
        h.samples[k] += f.rule.weights[y] * (f.samples[y] * g.samples[idx]);
      }
    return h;
  }
  throw UnsupportedGridError("node set of " + group_name(grp) +
                             " is not closed under the group law");
}

FourierCoefficients convolve_spectral(const FourierCoefficients& fc,
                                      const FourierCoefficients& gc) {
  validate(fc);
  validate(gc);
  if (!(fc.space == gc.space) || !(fc.group() == gc.group()) ||
      fc.dual.labels != gc.dual.labels || fc.convention != gc.convention)
    throw ConfigError("convolution operands must share dual, space and convention");
  if (!fc.space.algebra)
    throw UnsupportedOperationError("convolution requires an algebra value space");

  auto out = FourierCoefficients::zeros(fc.dual, fc.space);
  out.convention = fc.convention;
  const bool stored_plain = fc.convention == IndexConvention::conj_u_ij;
  for (std::size_t s = 0; s < fc.blocks.size(); ++s) {
    const auto& F = fc.blocks[s];
    const auto& G = gc.blocks[s];
    auto& H = out.blocks[s];
    const int d = F.dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          if (stored_plain)
            H(i, j) += F(i, k) * G(k, j);
          else
            H(i, j) += F(k, j) * G(i, k);
        }
  }
  return out;
}

}  // namespace sbarron
