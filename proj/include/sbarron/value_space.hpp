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

// Finite-dimensional stand-ins for the Banach space (or algebra) A in which
// functions take their values.

#include <string>

#include <Eigen/Dense>

namespace sbarron {

enum class NormKind { l1, l2, linf, operator_norm };

// Vector spaces hold dim x 1 columns. The operator norm kind holds
// dim x dim matrices; with algebra = true the matrix product is available.
// dim = 1 with algebra = true is the scalar algebra C.
struct ValueSpace {
  int dim = 1;
  NormKind norm = NormKind::l2;
  bool algebra = false;

  static ValueSpace scalar() { return {1, NormKind::l2, true}; }
  static ValueSpace vector(int dim, NormKind norm);
  static ValueSpace matrix_algebra(int dim);

  int rows() const { return dim; }
  int cols() const { return norm == NormKind::operator_norm ? dim : 1; }

  friend bool operator==(const ValueSpace&, const ValueSpace&) = default;
};

// Validates the descriptor invariants; throws ConfigError.
void validate(const ValueSpace& space);

std::string norm_kind_name(NormKind k);
NormKind parse_norm_kind(const std::string& name);
// e.g. "l2x3", "operator2"
std::string space_name(const ValueSpace& space);

// An element of A. Its shape is fixed by the owning ValueSpace.
using AValue = Eigen::MatrixXcd;

AValue zero(const ValueSpace& space);
// Multiplicative identity of an algebra space.
AValue unit(const ValueSpace& space);

// Throws DimensionError on shape mismatch or non-finite entries.
void check_conforms(const ValueSpace& space, const AValue& v);

double norm(const ValueSpace& space, const AValue& v);

AValue add(const ValueSpace& space, const AValue& u, const AValue& v);
AValue scale(const ValueSpace& space, std::complex<double> c, const AValue& v);
// Throws UnsupportedOperationError if the space is not an algebra.
AValue product(const ValueSpace& space, const AValue& u, const AValue& v);

}  // namespace sbarron
