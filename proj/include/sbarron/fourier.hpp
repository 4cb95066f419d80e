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

// Vector-valued Fourier analysis on compact groups: forward transform,
// inversion and the two function representations they act on.

#include <string>
#include <vector>

#include "sbarron/group.hpp"
#include "sbarron/value_space.hpp"

namespace sbarron {

// Which matrix coefficient the stored entry (i, j) of a block integrates
// against.
//   conj_u_ij: entry (i, j) = int conj(u_ij(x)) f(x) dx
//   conj_u_ji: entry (i, j) = int <sigma(x)^* xi_j, xi_i> f(x) dx
//              = int conj(u_ji(x)) f(x) dx
// Only one of the two makes the inversion sum
//   f(x) = sum_sigma d_sigma sum_ij entry(i, j) u_ij(x)
// reproduce f; validated_convention() finds it by a round-trip test on a
// two-dimensional irrep.
enum class IndexConvention { conj_u_ij, conj_u_ji };

std::string convention_name(IndexConvention c);
IndexConvention parse_convention(const std::string& name);

// Runs the round-trip self-test once and caches the answer.
IndexConvention validated_convention();

// d x d block of A-values stored row-major.
struct CoefficientBlock {
  int dim = 0;
  std::vector<AValue> entries;

  AValue& operator()(int i, int j) { return entries[i * dim + j]; }
  const AValue& operator()(int i, int j) const { return entries[i * dim + j]; }
};

struct FourierCoefficients {
  ValueSpace space;
  TruncatedDual dual;
  std::vector<CoefficientBlock> blocks;  // aligned with dual.labels
  IndexConvention convention = IndexConvention::conj_u_ij;

  const GroupDescriptor& group() const { return dual.group; }
  // Throws UnknownIrrepError if sigma is outside the dual.
  const CoefficientBlock& block(IrrepLabel sigma) const;
  CoefficientBlock& block(IrrepLabel sigma);

  static FourierCoefficients zeros(const TruncatedDual& dual,
                                   const ValueSpace& space);
};

// Throws DimensionError on any malformed block.
void validate(const FourierCoefficients& c);

// Samples of f: G -> A at the nodes of a quadrature rule.
struct GridFunction {
  ValueSpace space;
  QuadratureRule rule;
  std::vector<AValue> samples;

  const GroupDescriptor& group() const { return rule.group; }
};

void validate(const GridFunction& f);

// One spectral mode: coefficient entry (i, j) of irrep sigma (0-based).
struct Mode {
  IrrepLabel sigma;
  int i = 0;
  int j = 0;
  AValue value;
};

// f(x) = sum over modes of d_sigma * value * u_ij(x).
struct BandlimitedFunction {
  GroupDescriptor group;
  ValueSpace space;
  std::vector<Mode> modes;

  // Smallest dual band containing every mode.
  int band() const;
};

void validate(const BandlimitedFunction& f);

// Coefficient table of a band-limited function on the given dual.
// Throws PrecisionError if a mode lies outside the dual.
FourierCoefficients coefficients_of(const BandlimitedFunction& f,
                                    const TruncatedDual& dual);

AValue evaluate(const BandlimitedFunction& f, const GroupElement& x);

// Entry (i, j) of every block per the convention. Throws PrecisionError if
// the rule is not exact on the dual's band.
FourierCoefficients forward(const GridFunction& f, const TruncatedDual& dual,
                            IndexConvention convention);
FourierCoefficients forward(const GridFunction& f, const TruncatedDual& dual);

// Inversion sum at x, consistent with the coefficients' convention.
AValue inverse(const FourierCoefficients& c, const GroupElement& x);

// inverse() at every node of the rule.
GridFunction sample(const FourierCoefficients& c, const QuadratureRule& rule);

GridFunction synthesize(const BandlimitedFunction& f,
                        const QuadratureRule& rule);

// irrep_matrix for every label of the dual at x, aligned with dual.labels.
std::vector<Eigen::MatrixXcd> dual_matrices(const TruncatedDual& dual,
                                            const GroupElement& x);

// Irrep matrices of a dual tabulated once on the nodes of a rule, for
// repeated transforms on the same grid. Results are bitwise identical to
// forward() and sample().
class DualSampler {
 public:
  DualSampler(TruncatedDual dual, QuadratureRule rule);

  const TruncatedDual& dual() const { return dual_; }
  const QuadratureRule& rule() const { return rule_; }

  FourierCoefficients forward(const GridFunction& f,
                              IndexConvention convention) const;
  FourierCoefficients forward(const GridFunction& f) const;
  GridFunction sample(const FourierCoefficients& c) const;

 private:
  TruncatedDual dual_;
  QuadratureRule rule_;
  std::vector<std::vector<Eigen::MatrixXcd>> mats_;  // [node][label]
};

}  // namespace sbarron
