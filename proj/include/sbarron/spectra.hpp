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

#pragma once

// Spectral and grid norms: Assiamoua S_p / S_inf norms, the spectral Barron
// norm, the Sobolev norm and quadrature L^p / sup norms.

#include <map>
#include <string>
#include <vector>

#include "sbarron/fourier.hpp"

namespace sbarron {

// Frequency scale gamma on the dual plus the order s. The weight at sigma is
// (1 + gamma(sigma)^2)^(s/2).
//
// Built-in scales:
//   abs_n          torus |n|; cyclic min(k, N - k)
//   sqrt_l_lplus1  SU(2) sqrt(l (l + 1))
//   natural        abs_n / sqrt_l_lplus1 per group; dihedral: 0 on the
//                  trivial irrep, 1 on the other one-dimensional irreps,
//                  h on the two-dimensional irrep of frequency h
//   constant       gamma == value on every label
//   table          explicit per-label values
struct Weight {
  enum class Builtin { abs_n, sqrt_l_lplus1, natural, constant, table };

  Builtin builtin = Builtin::natural;
  double constant = 1.0;
  std::map<int, double> table;
  double s = 0.0;

  static Weight abs_n(double s = 0.0) { return {Builtin::abs_n, 1.0, {}, s}; }
  static Weight sqrt_l_lplus1(double s = 0.0) {
    return {Builtin::sqrt_l_lplus1, 1.0, {}, s};
  }
  static Weight natural(double s = 0.0) { return {Builtin::natural, 1.0, {}, s}; }
  static Weight constant_gamma(double value, double s = 0.0) {
    return {Builtin::constant, value, {}, s};
  }
  static Weight from_table(std::map<int, double> t, double s = 0.0) {
    return {Builtin::table, 1.0, std::move(t), s};
  }

  Weight with_order(double order) const {
    Weight w = *this;
    w.s = order;
    return w;
  }

  // Throws ConfigError if gamma is undefined or invalid at sigma.
  double gamma(const GroupDescriptor& g, IrrepLabel sigma) const;
  // (1 + gamma^2)
  double base(const GroupDescriptor& g, IrrepLabel sigma) const;
  // (1 + gamma^2)^(s/2)
  double factor(const GroupDescriptor& g, IrrepLabel sigma) const;

  // Short identifier for reports: "abs_n", "const1", "table", ...
  std::string id() const;
};

// Checks gamma is defined, finite and nonnegative on every label.
void validate(const Weight& w, const TruncatedDual& dual);

struct NormReport {
  double value = 0.0;
  std::vector<std::pair<IrrepLabel, double>> per_irrep;  // canonical order
};

// (sum_sigma d_sigma sum_ij ||c(sigma)(i,j)||^p)^(1/p)
double sp_norm(const FourierCoefficients& c, double p);
NormReport sp_norm_report(const FourierCoefficients& c, double p);

// max over sigma, i, j of ||c(sigma)(i,j)||
double s_inf_norm(const FourierCoefficients& c);

// sum_sigma d_sigma (1+gamma^2)^(s/2) sum_ij ||c(sigma)(i,j)||
double barron_norm(const FourierCoefficients& c, const Weight& w);
NormReport barron_norm_report(const FourierCoefficients& c, const Weight& w);

// (sum_sigma d_sigma (1+gamma^2)^s sum_ij ||c(sigma)(i,j)||^2)^(1/2)
double sobolev_norm(const FourierCoefficients& c, const Weight& w);
NormReport sobolev_norm_report(const FourierCoefficients& c, const Weight& w);

// (sum_k w_k ||f(x_k)||^p)^(1/p)
double lp_norm(const GridFunction& f, double p);

// max_k ||f(x_k)||; a lower bound for the essential sup.
double sup_norm(const GridFunction& f);

}  // namespace sbarron
