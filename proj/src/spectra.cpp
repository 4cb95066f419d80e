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

#include "sbarron/spectra.hpp"

#include <cmath>

#include "sbarron/errors.hpp"

namespace sbarron {

namespace {

std::string label_text(IrrepLabel sigma) { return std::to_string(sigma.value); }

double dihedral_natural(int n, IrrepLabel sigma) {
  const int ones = n % 2 == 0 ? 4 : 2;
  if (sigma.value == 0) return 0.0;
  if (sigma.value < ones) return 1.0;
  return static_cast<double>(sigma.value - ones + 1);
}

double entry_norm_sum(const FourierCoefficients& c, std::size_t s, double p) {
  double acc = 0.0;
  for (const auto& v : c.blocks[s].entries) {
    const double n = norm(c.space, v);
    acc += p == 1.0 ? n : std::pow(n, p);
  }
  return acc;
}

void check_p(double p) {
  if (!std::isfinite(p) || p < 1.0)
    throw ConfigError("p must be a finite real >= 1");
}

}  // namespace

double Weight::gamma(const GroupDescriptor& g, IrrepLabel sigma) const {
  validate_label(g, sigma);
  double value = 0.0;
  switch (builtin) {
    case Builtin::abs_n:
      if (g.kind == GroupKind::torus)
        value = std::abs(sigma.value);
      else if (g.kind == GroupKind::cyclic)
        value = std::min(sigma.value, g.param - sigma.value);
      else
        throw ConfigError("abs_n weight is defined on torus and cyclic groups");
      break;
    case Builtin::sqrt_l_lplus1: {
      if (g.kind != GroupKind::su2)
        throw ConfigError("sqrt_l_lplus1 weight is defined on SU(2) only");
      const double l = 0.5 * sigma.value;
      value = std::sqrt(l * (l + 1.0));
      break;
    }
    case Builtin::natural:
      switch (g.kind) {
        case GroupKind::torus:
        case GroupKind::cyclic:
          return Weight::abs_n().gamma(g, sigma);
        case GroupKind::su2:
          return Weight::sqrt_l_lplus1().gamma(g, sigma);
        case GroupKind::dihedral:
          value = dihedral_natural(g.param, sigma);
          break;
      }
      break;
    case Builtin::constant:
      value = constant;
      break;
    case Builtin::table: {
      const auto it = table.find(sigma.value);
      if (it == table.end())
        throw ConfigError("weight table has no entry for label " +
                          label_text(sigma));
      value = it->second;
      break;
    }
  }
  if (!std::isfinite(value) || value < 0.0)
    throw ConfigError("gamma must be finite and nonnegative at label " +
                      label_text(sigma));
  return value;
}

double Weight::base(const GroupDescriptor& g, IrrepLabel sigma) const {
  const double gm = gamma(g, sigma);
  return 1.0 + gm * gm;
}

double Weight::factor(const GroupDescriptor& g, IrrepLabel sigma) const {
  return std::pow(base(g, sigma), 0.5 * s);
}

std::string Weight::id() const {
  switch (builtin) {
    case Builtin::abs_n:
      return "abs_n";
    case Builtin::sqrt_l_lplus1:
      return "sqrt_l_lplus1";
    case Builtin::natural:
      return "natural";
    case Builtin::constant: {
      std::string v = std::to_string(constant);
      v.erase(v.find_last_not_of('0') + 1);
      if (!v.empty() && v.back() == '.') v.pop_back();
      return "const" + v;
    }
    case Builtin::table:
      return "table";
  }
  return "?";
}

void validate(const Weight& w, const TruncatedDual& dual) {
  if (!std::isfinite(w.s)) throw ConfigError("weight order must be finite");
  for (const auto& l : dual.labels) (void)w.gamma(dual.group, l);
}

NormReport sp_norm_report(const FourierCoefficients& c, double p) {
  check_p(p);
  validate(c);
  NormReport r;
  double total = 0.0;
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const double part = c.dual.dims[s] * entry_norm_sum(c, s, p);
    r.per_irrep.emplace_back(c.dual.labels[s], part);
    total += part;
  }
  r.value = p == 1.0 ? total : std::pow(total, 1.0 / p);
  return r;
}

double sp_norm(const FourierCoefficients& c, double p) {
  return sp_norm_report(c, p).value;
}

double s_inf_norm(const FourierCoefficients& c) {
  validate(c);
  double m = 0.0;
  for (const auto& b : c.blocks)
    for (const auto& v : b.entries) m = std::max(m, norm(c.space, v));
  return m;
}

NormReport barron_norm_report(const FourierCoefficients& c, const Weight& w) {
  validate(c);
  validate(w, c.dual);
  NormReport r;
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const double part = c.dual.dims[s] * w.factor(c.group(), c.dual.labels[s]) *
                        entry_norm_sum(c, s, 1.0);
    r.per_irrep.emplace_back(c.dual.labels[s], part);
    r.value += part;
  }
  return r;
}

double barron_norm(const FourierCoefficients& c, const Weight& w) {
  return barron_norm_report(c, w).value;
}

NormReport sobolev_norm_report(const FourierCoefficients& c, const Weight& w) {
  validate(c);
  validate(w, c.dual);
  NormReport r;
  double total = 0.0;
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const double part = c.dual.dims[s] *
                        std::pow(w.base(c.group(), c.dual.labels[s]), w.s) *
                        entry_norm_sum(c, s, 2.0);
    r.per_irrep.emplace_back(c.dual.labels[s], part);
    total += part;
  }
  r.value = std::sqrt(total);
  return r;
}

double sobolev_norm(const FourierCoefficients& c, const Weight& w) {
  return sobolev_norm_report(c, w).value;
}

double lp_norm(const GridFunction& f, double p) {
  check_p(p);
  validate(f);
  double acc = 0.0;
  for (std::size_t k = 0; k < f.samples.size(); ++k) {
    const double n = norm(f.space, f.samples[k]);
    acc += f.rule.weights[k] * (p == 1.0 ? n : std::pow(n, p));
  }
  return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

double sup_norm(const GridFunction& f) {
  validate(f);
  double m = 0.0;
  for (const auto& v : f.samples) m = std::max(m, norm(f.space, v));
  return m;
}

}  // namespace sbarron
