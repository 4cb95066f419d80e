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

// Numerical verification of the Barron-space inequalities on band-limited
// test functions. Every check evaluates both sides from Fourier coefficients
// and records the slack rhs - lhs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sbarron/fourier.hpp"
#include "sbarron/operators.hpp"
#include "sbarron/spectra.hpp"

namespace sbarron {

enum class TheoremName {
  isometry,
  interpolation,
  pseudodiff_bound,
  convolution_bound,
  order_embedding,
  sobolev_embedding,
  linf_embedding,
};

std::string theorem_name(TheoremName name);

enum class PrecisionProfile { finite_exact, quadrature };

std::string profile_name(PrecisionProfile p);
PrecisionProfile parse_profile(const std::string& name);
// Reads SBARRON_PROFILE, falling back to finite_exact.
PrecisionProfile default_profile();

// Relative tolerance of the inequality checks: 1e-12 for finite groups under
// finite_exact, 1e-9 otherwise.
double check_tolerance(PrecisionProfile profile, const GroupDescriptor& g);

// Isometry is an equality check with this relative tolerance.
inline constexpr double kIsometryTolerance = 1e-12;

struct CheckParams {
  std::optional<double> s;
  std::optional<double> t;
  std::optional<double> r;
  std::optional<double> alpha;
  std::string gamma_id;
  std::string group;
  std::string space;
  std::string family;
  std::uint64_t seed = 0;
  int case_index = 0;
};

struct TheoremCheck {
  TheoremName name = TheoremName::isometry;
  std::string variant;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;
  double slack = 0.0;
  bool pass = false;
  // Findings (the kappa_paper Sobolev variant) do not gate the suite.
  bool required = true;
  CheckParams params;
};

double compute_rho(const TruncatedDual& dual);
// sum_sigma d_sigma (1+gamma^2)^(t-s)
double compute_kappa(const TruncatedDual& dual, const Weight& gamma, double s,
                     double t);
// sum_sigma d_sigma^3 (1+gamma^2)^(t-s)
double compute_kappa_star(const TruncatedDual& dual, const Weight& gamma,
                          double s, double t);

// ||(I - Delta)^s f||_{B^0} against ||f||_{B^{2s}}.
TheoremCheck check_isometry(const FourierCoefficients& c, const Weight& gamma,
                            double s);

// ||f||_{B^s} <= ||f||_{B^r}^alpha ||f||_{B^t}^(1-alpha), s = alpha r +
// (1 - alpha) t. Requires 0 <= r <= t and alpha in [0, 1].
TheoremCheck check_interpolation(const FourierCoefficients& c,
                                 const Weight& gamma, double r, double t,
                                 double alpha, double tol);

// ||f||_{B^s} <= ||f||_{B^t}; requires 0 <= s < t.
TheoremCheck check_order_embedding(const FourierCoefficients& c,
                                   const Weight& gamma, double s, double t,
                                   double tol);

// ||P f||_{B^s} <= max_sigma[(1+gamma^2)^((s-t)/2) |a|] ||f||_{B^t}.
TheoremCheck check_pseudodiff_bound(const FourierCoefficients& c,
                                    const SpectralSymbol& a,
                                    const Weight& gamma, double s, double t,
                                    double tol);

// ||f * g||_{B^s} <= rho ||f||_{L^1} ||g||_{B^s}; f and g sampled on a rule
// that is exact on the dual. The left side goes through convolve_spectral.
TheoremCheck check_convolution_bound(const GridFunction& f,
                                     const GridFunction& g,
                                     const TruncatedDual& dual,
                                     const Weight& gamma, double s, double tol);
TheoremCheck check_convolution_bound(const FourierCoefficients& fc,
                                     double f_l1,
                                     const FourierCoefficients& gc,
                                     const Weight& gamma, double s, double tol);

// ||f||_{B^t} <= C ||f||_{H^s} with C = kappa^(1/2) (variant "kappa_paper",
// a finding) and C = kappa_star^(1/2) (variant "kappa_star", required).
// Requires 0 <= s < t.
std::vector<TheoremCheck> check_sobolev_embedding(const FourierCoefficients& c,
                                                  const Weight& gamma, double s,
                                                  double t, double tol);

// Grid sup of f on `dense` against ||f||_{B^s}.
TheoremCheck check_linf_embedding(const FourierCoefficients& c,
                                  const Weight& gamma, double s,
                                  const QuadratureRule& dense, double tol);
TheoremCheck check_linf_embedding(double grid_sup, const FourierCoefficients& c,
                                  const Weight& gamma, double s, double tol);

// --- test-function generation ------------------------------------------------

// Deterministic generator; uniform draws use the top 53 bits of mt19937_64
// so streams are identical across standard libraries.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  int uniform_int(int lo, int hi);  // [lo, hi]
  Complex unit_disc();
  AValue disc_value(const ValueSpace& space);

 private:
  std::mt19937_64 engine_;
};

enum class Family { random, single_mode, single_irrep, equal_magnitude };

std::string family_name(Family f);

// Modes on the whole dual; entries drawn uniformly from the unit disc.
//   random           each (sigma, i, j) kept with probability 1/2
//   single_mode      one random entry
//   single_irrep     every entry of the largest-dimensional irrep
//   equal_magnitude  every entry of the dual, rescaled to A-norm 1
BandlimitedFunction random_function(Generator& gen, Family family,
                                    const TruncatedDual& dual,
                                    const ValueSpace& space);

SpectralSymbol random_symbol(Generator& gen, const TruncatedDual& dual);

// --- suite -------------------------------------------------------------------

struct InterpolationGrid {
  std::vector<double> r{0.0, 1.0, 2.0};
  std::vector<double> t{1.0, 2.0, 4.0};
  std::vector<double> alpha{0.25, 0.5, 0.75};
};

struct SuiteConfig {
  std::vector<GroupDescriptor> groups;
  std::vector<int> bands;
  std::vector<ValueSpace> spaces;
  std::vector<Weight> weights;  // gamma scales; their order s is ignored
  std::vector<double> orders;
  int functions_per_case = 1;
  std::uint64_t seed = 0;
  PrecisionProfile profile = PrecisionProfile::finite_exact;
  InterpolationGrid interpolation;
  int dense_factor = 10;
};

// Z_8, D_4, torus and SU(2) at band 2; three value spaces; natural gamma;
// orders {0, 1/2, 1, 2}; 50 random functions per case.
SuiteConfig default_suite_config();

// Throws ConfigError / PreconditionError with a diagnostic.
void validate(const SuiteConfig& config);

struct KappaCensus {
  int abelian_cases = 0;
  int nonabelian_cases = 0;
  int nonabelian_pass = 0;
  int nonabelian_fail = 0;
  double worst_ratio = 0.0;  // max lhs / rhs over nonabelian cases
};

struct VerificationReport {
  PrecisionProfile profile = PrecisionProfile::finite_exact;
  std::uint64_t seed = 0;
  std::vector<int> bands;
  std::string convention;
  int cases = 0;
  int functions = 0;
  int skipped_weight_group_pairs = 0;
  std::vector<TheoremCheck> checks;
  KappaCensus kappa_census;

  int required_failures() const;
  bool all_required_pass() const { return required_failures() == 0; }
};

// Runs every check over groups x bands x spaces x weights x functions in
// that order. Finite groups are run once regardless of the band list.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace sbarron
