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

#include "sbarron/group.hpp"

#include <cmath>
#include <numbers>

#include "sbarron/errors.hpp"

namespace sbarron {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitTolerance = 1e-12;

// Dihedral irrep table entry. One-dimensional irreps send r to r_sign and s
// to s_sign; two-dimensional ones are indexed by the frequency h.
struct DihedralIrrep {
  int dim;
  int r_sign;
  int s_sign;
  int h;
};

int dihedral_one_dim_count(int n) { return n % 2 == 0 ? 4 : 2; }

int dihedral_dual_size(int n) {
  return dihedral_one_dim_count(n) + (n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2);
}

DihedralIrrep dihedral_irrep(int n, int label) {
  const int ones = dihedral_one_dim_count(n);
  if (label < ones) {
    // even n: (1,1) (1,-1) (-1,1) (-1,-1); odd n: (1,1) (1,-1)
    const int r_sign = label >= 2 ? -1 : 1;
    const int s_sign = label % 2 == 1 ? -1 : 1;
    return {1, r_sign, s_sign, 0};
  }
  return {2, 1, 1, label - ones + 1};
}

const SU2Element& as_su2(const GroupElement& x) {
  const auto* p = std::get_if<SU2Element>(&x);
  if (p == nullptr) throw InvalidElementError("expected an SU(2) element");
  return *p;
}

double as_torus(const GroupElement& x) {
  const auto* p = std::get_if<TorusPoint>(&x);
  if (p == nullptr) throw InvalidElementError("expected a torus element");
  return p->x;
}

int as_index(const GroupElement& x) {
  const auto* p = std::get_if<FiniteElement>(&x);
  if (p == nullptr) throw InvalidElementError("expected a finite-group element");
  return p->index;
}

double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;
  return r;
}

Eigen::MatrixXcd su2_matrix(int two_l, const SU2Element& x) {
  const int d = two_l + 1;
  const Complex a = x.alpha;
  const Complex b = x.beta;
  const Complex minus_bbar = -std::conj(b);
  const Complex abar = std::conj(a);

  std::vector<Complex> pa(d, 1.0), pmb(d, 1.0), pb(d, 1.0), pab(d, 1.0);
  for (int k = 1; k < d; ++k) {
    pa[k] = pa[k - 1] * a;
    pmb[k] = pmb[k - 1] * minus_bbar;
    pb[k] = pb[k - 1] * b;
    pab[k] = pab[k - 1] * abar;
  }
  std::vector<double> fact(d, 1.0);
  for (int k = 1; k < d; ++k) fact[k] = fact[k - 1] * k;
  auto binom = [&](int n, int k) { return fact[n] / (fact[k] * fact[n - k]); };
  // Norm of the monomial z1^k z2^(2l-k) under the invariant inner product.
  std::vector<double> norm(d);
  for (int k = 0; k < d; ++k) norm[k] = std::sqrt(fact[k] * fact[two_l - k]);

  // T_l(x) p_k = (alpha z1 - conj(beta) z2)^k (beta z1 + conj(alpha) z2)^(2l-k)
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const int rest = two_l - k;
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      const int a_lo = std::max(0, j - rest);
      const int a_hi = std::min(k, j);
      for (int m = a_lo; m <= a_hi; ++m) {
        const int c = j - m;
        acc += binom(k, m) * binom(rest, c) * pa[m] * pmb[k - m] * pb[c] *
               pab[rest - c];
      }
      u(j, k) = acc * (norm[j] / norm[k]);
    }
  }
  return u;
}

}  // namespace

GroupDescriptor GroupDescriptor::cyclic(int order) {
  if (order < 1) throw ConfigError("cyclic group requires N >= 1");
  return {GroupKind::cyclic, order};
}

GroupDescriptor GroupDescriptor::dihedral(int n) {
  if (n < 3) throw ConfigError("dihedral group requires n >= 3");
  return {GroupKind::dihedral, n};
}

int GroupDescriptor::order() const {
  switch (kind) {
    case GroupKind::cyclic:
      return param;
    case GroupKind::dihedral:
      return 2 * param;
    default:
      throw UnsupportedOperationError("group is not finite");
  }
}

std::string group_name(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::cyclic:
      return "cyclic" + std::to_string(g.param);
    case GroupKind::dihedral:
      return "dihedral" + std::to_string(g.param);
    case GroupKind::torus:
      return "torus";
    case GroupKind::su2:
      return "su2";
  }
  return "unknown";
}

void validate_element(const GroupDescriptor& g, const GroupElement& x) {
  switch (g.kind) {
    case GroupKind::cyclic:
    case GroupKind::dihedral: {
      const int i = as_index(x);
      if (i < 0 || i >= g.order())
        throw InvalidElementError("element index " + std::to_string(i) +
                                  " out of range for " + group_name(g));
      return;
    }
    case GroupKind::torus: {
      const double t = as_torus(x);
      if (!std::isfinite(t) || t < 0.0 || t >= 1.0)
        throw InvalidElementError("torus element must lie in [0, 1)");
      return;
    }
    case GroupKind::su2: {
      const auto& e = as_su2(x);
      const double n2 = std::norm(e.alpha) + std::norm(e.beta);
      if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitTolerance)
        throw InvalidElementError("SU(2) element requires |alpha|^2+|beta|^2=1");
      return;
    }
  }
}

GroupElement identity(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::torus:
      return TorusPoint{0.0};
    case GroupKind::su2:
      return SU2Element{};
    default:
      return FiniteElement{0};
  }
}

GroupElement multiply(const GroupDescriptor& g, const GroupElement& x,
                      const GroupElement& y) {
  validate_element(g, x);
  validate_element(g, y);
  switch (g.kind) {
    case GroupKind::cyclic:
      return FiniteElement{(as_index(x) + as_index(y)) % g.param};
    case GroupKind::dihedral: {
      const int n = g.param;
      const int a = as_index(x) % n, e = as_index(x) / n;
      const int b = as_index(y) % n, f = as_index(y) / n;
      // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
      const int k = ((a + (e == 0 ? b : -b)) % n + n) % n;
      return FiniteElement{k + n * ((e + f) % 2)};
    }
    case GroupKind::torus:
      return TorusPoint{wrap_unit(as_torus(x) + as_torus(y))};
    case GroupKind::su2: {
      const auto& p = as_su2(x);
      const auto& q = as_su2(y);
      return SU2Element{p.alpha * q.alpha - p.beta * std::conj(q.beta),
                        p.alpha * q.beta + p.beta * std::conj(q.alpha)};
    }
  }
  return x;
}

GroupElement inverse(const GroupDescriptor& g, const GroupElement& x) {
  validate_element(g, x);
  switch (g.kind) {
    case GroupKind::cyclic:
      return FiniteElement{(g.param - as_index(x)) % g.param};
    case GroupKind::dihedral: {
      const int n = g.param;
      const int k = as_index(x) % n, e = as_index(x) / n;
      // reflections are involutions
      if (e == 1) return x;
      return FiniteElement{(n - k) % n};
    }
    case GroupKind::torus: {
      const double t = as_torus(x);
      return TorusPoint{t == 0.0 ? 0.0 : wrap_unit(1.0 - t)};
    }
    case GroupKind::su2: {
      const auto& p = as_su2(x);
      return SU2Element{std::conj(p.alpha), -p.beta};
    }
  }
  return x;
}

double element_distance(const GroupDescriptor& g, const GroupElement& x,
                        const GroupElement& y) {
  switch (g.kind) {
    case GroupKind::cyclic:
    case GroupKind::dihedral:
      return as_index(x) == as_index(y) ? 0.0 : 1.0;
    case GroupKind::torus: {
      const double d = std::abs(as_torus(x) - as_torus(y));
      return std::min(d, 1.0 - d);
    }
    case GroupKind::su2: {
      const auto& p = as_su2(x);
      const auto& q = as_su2(y);
      return std::max(std::abs(p.alpha - q.alpha), std::abs(p.beta - q.beta));
    }
  }
  return 0.0;
}

std::vector<GroupElement> elements(const GroupDescriptor& g) {
  const int n = g.order();
  std::vector<GroupElement> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(FiniteElement{i});
  return out;
}

void validate_label(const GroupDescriptor& g, IrrepLabel sigma) {
  bool ok = true;
  switch (g.kind) {
    case GroupKind::cyclic:
      ok = sigma.value >= 0 && sigma.value < g.param;
      break;
    case GroupKind::dihedral:
      ok = sigma.value >= 0 && sigma.value < dihedral_dual_size(g.param);
      break;
    case GroupKind::torus:
      break;
    case GroupKind::su2:
      ok = sigma.value >= 0;
      break;
  }
  if (!ok)
    throw UnknownIrrepError("label " + std::to_string(sigma.value) +
                            " is not in the dual of " + group_name(g));
}

int irrep_dim(const GroupDescriptor& g, IrrepLabel sigma) {
  validate_label(g, sigma);
  switch (g.kind) {
    case GroupKind::dihedral:
      return dihedral_irrep(g.param, sigma.value).dim;
    case GroupKind::su2:
      return sigma.value + 1;
    default:
      return 1;
  }
}

int label_band(const GroupDescriptor& g, IrrepLabel sigma) {
  validate_label(g, sigma);
  switch (g.kind) {
    case GroupKind::torus:
      return std::abs(sigma.value);
    case GroupKind::su2:
      return (sigma.value + 1) / 2;
    default:
      return 0;
  }
}

Eigen::MatrixXcd irrep_matrix(const GroupDescriptor& g, IrrepLabel sigma,
                              const GroupElement& x) {
  validate_label(g, sigma);
  validate_element(g, x);
  switch (g.kind) {
    case GroupKind::cyclic: {
      const int N = g.param;
      const int phase = (sigma.value * as_index(x)) % N;
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = std::polar(1.0, kTwoPi * phase / N);
      return m;
    }
    case GroupKind::dihedral: {
      const int n = g.param;
      const int k = as_index(x) % n, e = as_index(x) / n;
      const auto irrep = dihedral_irrep(n, sigma.value);
      if (irrep.dim == 1) {
        Eigen::MatrixXcd m(1, 1);
        const int sign = (k % 2 == 1 && irrep.r_sign < 0 ? -1 : 1) *
                         (e == 1 ? irrep.s_sign : 1);
        m(0, 0) = static_cast<double>(sign);
        return m;
      }
      const int phase = (irrep.h * k) % n;
      const Complex w = std::polar(1.0, kTwoPi * phase / n);
      Eigen::MatrixXcd rot = Eigen::MatrixXcd::Zero(2, 2);
      rot(0, 0) = w;
      rot(1, 1) = std::conj(w);
      if (e == 0) return rot;
      Eigen::MatrixXcd flip(2, 2);
      flip << 0.0, 1.0, 1.0, 0.0;
      return rot * flip;
    }
    case GroupKind::torus: {
      // reduce n*x mod 1 before the exponential to keep the phase accurate
      const double phase = wrap_unit(sigma.value * as_torus(x));
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = std::polar(1.0, kTwoPi * phase);
      return m;
    }
    case GroupKind::su2:
      return su2_matrix(sigma.value, as_su2(x));
  }
  return {};
}

int TruncatedDual::find(IrrepLabel sigma) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == sigma) return static_cast<int>(i);
  return -1;
}

TruncatedDual truncated_dual(const GroupDescriptor& g, int band) {
  if (band < 0) throw ConfigError("band must be nonnegative");
  TruncatedDual dual;
  dual.group = g;
  dual.band = g.is_finite() ? 0 : band;
  switch (g.kind) {
    case GroupKind::cyclic:
      for (int k = 0; k < g.param; ++k) dual.labels.push_back({k});
      break;
    case GroupKind::dihedral:
      for (int k = 0; k < dihedral_dual_size(g.param); ++k)
        dual.labels.push_back({k});
      break;
    case GroupKind::torus:
      dual.labels.push_back({0});
      for (int n = 1; n <= band; ++n) {
        dual.labels.push_back({-n});
        dual.labels.push_back({n});
      }
      break;
    case GroupKind::su2:
      for (int t = 0; t <= 2 * band; ++t) dual.labels.push_back({t});
      break;
  }
  for (const auto& l : dual.labels) dual.dims.push_back(irrep_dim(g, l));
  return dual;
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

namespace {

QuadratureRule torus_rule(int band, int count) {
  QuadratureRule rule;
  rule.group = GroupDescriptor::torus();
  rule.band = band;
  rule.nodes.reserve(count);
  for (int m = 0; m < count; ++m)
    rule.nodes.emplace_back(TorusPoint{static_cast<double>(m) / count});
  rule.weights.assign(count, 1.0 / count);
  return rule;
}

int su2_phase_count(int band) { return 4 * band + 1; }

QuadratureRule su2_rule(int band) {
  QuadratureRule rule;
  rule.group = GroupDescriptor::su2();
  rule.band = band;
  const int phases = su2_phase_count(band);
  std::vector<double> u, w;
  gauss_legendre(band + 1, u, w);
  // alpha = cos(theta/2) e^{i xi1}, beta = sin(theta/2) e^{i xi2}; the
  // normalized Haar measure is d(cos theta)/2 dxi1/2pi dxi2/2pi.
  for (std::size_t g = 0; g < u.size(); ++g) {
    const double ca = std::sqrt(0.5 * (1.0 + u[g]));
    const double sb = std::sqrt(0.5 * (1.0 - u[g]));
    for (int a = 0; a < phases; ++a) {
      const Complex alpha = std::polar(ca, kTwoPi * a / phases);
      for (int b = 0; b < phases; ++b) {
        rule.nodes.emplace_back(
            SU2Element{alpha, std::polar(sb, kTwoPi * b / phases)});
        rule.weights.push_back(0.5 * w[g] / (phases * phases));
      }
    }
  }
  return rule;
}

std::size_t su2_node_count(int band) {
  const std::size_t p = su2_phase_count(band);
  return p * p * static_cast<std::size_t>(band + 1);
}

QuadratureRule finite_rule(const GroupDescriptor& g) {
  QuadratureRule rule;
  rule.group = g;
  rule.band = 0;
  rule.nodes = elements(g);
  rule.weights.assign(rule.nodes.size(), 1.0 / g.order());
  return rule;
}

}  // namespace

QuadratureRule quadrature(const GroupDescriptor& g, int band) {
  if (band < 0) throw ConfigError("band must be nonnegative");
  switch (g.kind) {
    case GroupKind::torus:
      return torus_rule(band, 4 * band + 1);
    case GroupKind::su2:
      return su2_rule(band);
    default:
      return finite_rule(g);
  }
}

QuadratureRule dense_grid(const GroupDescriptor& g, int band, int factor) {
  if (band < 0 || factor < 1) throw ConfigError("invalid dense grid request");
  switch (g.kind) {
    case GroupKind::torus:
      return torus_rule(band, factor * (4 * band + 1));
    case GroupKind::su2: {
      const std::size_t target = factor * su2_node_count(band);
      int fine = band;
      while (su2_node_count(fine) < target) ++fine;
      return su2_rule(fine);
    }
    default:
      return finite_rule(g);
  }
}

}  // namespace sbarron
