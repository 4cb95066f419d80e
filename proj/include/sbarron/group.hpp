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

// Compact groups with their truncated unitary duals, irreducible
// representation matrices and Haar-exact quadrature rules.
//
// Supported groups:
//   cyclic Z_N      elements 0..N-1, characters k = 0..N-1
//   dihedral D_n    elements r^k s^e stored as k + n*e, irreps in table order
//   torus R/Z       elements x in [0,1), characters n in Z
//   SU(2)           elements (alpha, beta) with |alpha|^2 + |beta|^2 = 1,
//                   the matrix [[alpha, beta], [-conj(beta), conj(alpha)]];
//                   irreps labelled by twoL = 2l

#include <complex>
#include <compare>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace sbarron {

using Complex = std::complex<double>;

enum class GroupKind { cyclic, dihedral, torus, su2 };

struct GroupDescriptor {
  GroupKind kind = GroupKind::torus;
  // N for cyclic, n for dihedral, unused otherwise.
  int param = 0;

  static GroupDescriptor cyclic(int order);
  static GroupDescriptor dihedral(int n);
  static GroupDescriptor torus() { return {GroupKind::torus, 0}; }
  static GroupDescriptor su2() { return {GroupKind::su2, 0}; }

  bool is_finite() const {
    return kind == GroupKind::cyclic || kind == GroupKind::dihedral;
  }
  bool is_abelian() const {
    return kind == GroupKind::cyclic || kind == GroupKind::torus;
  }
  // |G| for finite groups; throws for torus and SU(2).
  int order() const;

  friend bool operator==(const GroupDescriptor&,
                         const GroupDescriptor&) = default;
};

// Short name such as "cyclic8", "dihedral4", "torus" or "su2".
std::string group_name(const GroupDescriptor& g);

struct FiniteElement {
  int index = 0;
};

struct TorusPoint {
  double x = 0.0;
};

struct SU2Element {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

using GroupElement = std::variant<FiniteElement, TorusPoint, SU2Element>;

// Strong type for irrep labels: k (cyclic), table index (dihedral),
// n (torus) or twoL (SU(2)).
struct IrrepLabel {
  int value = 0;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

// Checks that x is a valid element of g; throws InvalidElementError.
void validate_element(const GroupDescriptor& g, const GroupElement& x);

GroupElement identity(const GroupDescriptor& g);
GroupElement multiply(const GroupDescriptor& g, const GroupElement& x,
                      const GroupElement& y);
GroupElement inverse(const GroupDescriptor& g, const GroupElement& x);

// Largest entrywise deviation between two elements (index mismatch counts as
// 1 for finite groups, circular distance on the torus).
double element_distance(const GroupDescriptor& g, const GroupElement& x,
                        const GroupElement& y);

// All elements of a finite group in index order.
std::vector<GroupElement> elements(const GroupDescriptor& g);

// Throws UnknownIrrepError if the label is not in the group's dual.
void validate_label(const GroupDescriptor& g, IrrepLabel sigma);

// d_sigma.
int irrep_dim(const GroupDescriptor& g, IrrepLabel sigma);

// Smallest truncation band whose dual contains sigma (0 for finite groups).
int label_band(const GroupDescriptor& g, IrrepLabel sigma);

// sigma(x) in the orthonormal basis; entry (i, j) is u_ij(x).
Eigen::MatrixXcd irrep_matrix(const GroupDescriptor& g, IrrepLabel sigma,
                              const GroupElement& x);

struct TruncatedDual {
  GroupDescriptor group;
  int band = 0;
  std::vector<IrrepLabel> labels;  // canonical order
  std::vector<int> dims;           // aligned with labels

  std::size_t size() const { return labels.size(); }
  // Position of sigma in labels, or -1.
  int find(IrrepLabel sigma) const;
  bool contains(IrrepLabel sigma) const { return find(sigma) >= 0; }
};

// Canonical orders: torus 0, -1, 1, -2, 2, ...; SU(2) increasing twoL;
// finite groups in table order (band ignored).
TruncatedDual truncated_dual(const GroupDescriptor& g, int band);

struct QuadratureRule {
  GroupDescriptor group;
  // Products u^sigma_ij conj(u^tau_kl) with sigma, tau inside this band are
  // integrated exactly.
  int band = 0;
  std::vector<GroupElement> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Finite groups: uniform average over all elements. Torus: 4*band + 1
// uniform nodes. SU(2): product rule in Euler angles, uniform in the two
// phase angles and Gauss-Legendre in cos(theta).
QuadratureRule quadrature(const GroupDescriptor& g, int band);

// A finer node set with at least `factor` times as many nodes as
// quadrature(g, band) for the continuous groups; the full group for finite
// groups. Used for sup-norm sampling only (weights are still a valid rule).
QuadratureRule dense_grid(const GroupDescriptor& g, int band, int factor);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace sbarron
