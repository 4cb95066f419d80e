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

#include "sbarron/value_space.hpp"

#include "sbarron/errors.hpp"

namespace sbarron {

ValueSpace ValueSpace::vector(int dim, NormKind norm) {
  ValueSpace s{dim, norm, false};
  validate(s);
  return s;
}

ValueSpace ValueSpace::matrix_algebra(int dim) {
  ValueSpace s{dim, NormKind::operator_norm, true};
  validate(s);
  return s;
}

void validate(const ValueSpace& space) {
  if (space.dim < 1) throw ConfigError("value space dimension must be >= 1");
  if (space.algebra && space.dim != 1 &&
      space.norm != NormKind::operator_norm)
    throw ConfigError(
        "only scalar or operator-normed matrix spaces are algebras");
}

std::string norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::l1:
      return "l1";
    case NormKind::l2:
      return "l2";
    case NormKind::linf:
      return "linf";
    case NormKind::operator_norm:
      return "operator";
  }
  return "?";
}

NormKind parse_norm_kind(const std::string& name) {
  if (name == "l1") return NormKind::l1;
  if (name == "l2") return NormKind::l2;
  if (name == "linf") return NormKind::linf;
  if (name == "operator") return NormKind::operator_norm;
  throw ConfigError("unknown norm kind '" + name + "'");
}

std::string space_name(const ValueSpace& space) {
  std::string s = norm_kind_name(space.norm);
  if (space.norm != NormKind::operator_norm) s += "x";
  s += std::to_string(space.dim);
  if (space.algebra) s += "_alg";
  return s;
}

AValue zero(const ValueSpace& space) {
  return AValue::Zero(space.rows(), space.cols());
}

AValue unit(const ValueSpace& space) {
  if (!space.algebra)
    throw UnsupportedOperationError("value space is not an algebra");
  return AValue::Identity(space.rows(), space.cols());
}

void check_conforms(const ValueSpace& space, const AValue& v) {
  if (v.rows() != space.rows() || v.cols() != space.cols())
    throw DimensionError("value of shape " + std::to_string(v.rows()) + "x" +
                         std::to_string(v.cols()) + " does not match space " +
                         space_name(space));
  if (!v.allFinite()) throw DimensionError("value has non-finite entries");
}

double norm(const ValueSpace& space, const AValue& v) {
  check_conforms(space, v);
  switch (space.norm) {
    case NormKind::l1:
      return v.cwiseAbs().sum();
    case NormKind::l2:
      return v.norm();
    case NormKind::linf:
      return v.cwiseAbs().maxCoeff();
    case NormKind::operator_norm:
      if (space.dim == 1) return std::abs(v(0, 0));
      return Eigen::JacobiSVD<Eigen::MatrixXcd>(v).singularValues()(0);
  }
  return 0.0;
}

AValue add(const ValueSpace& space, const AValue& u, const AValue& v) {
  check_conforms(space, u);
  check_conforms(space, v);
  return u + v;
}

AValue scale(const ValueSpace& space, std::complex<double> c, const AValue& v) {
  check_conforms(space, v);
  return c * v;
}

AValue product(const ValueSpace& space, const AValue& u, const AValue& v) {
  if (!space.algebra)
    throw UnsupportedOperationError("product requires an algebra value space");
  check_conforms(space, u);
  check_conforms(space, v);
  return u * v;
}

}  // namespace sbarron
