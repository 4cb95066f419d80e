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

#include "sbarron/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "sbarron/errors.hpp"

namespace sbarron {

std::string theorem_name(TheoremName name) {
  switch (name) {
    case TheoremName::isometry:
      return "isometry";
    case TheoremName::interpolation:
      return "interpolation";
    case TheoremName::pseudodiff_bound:
      return "pseudodiff_bound";
    case TheoremName::convolution_bound:
      return "convolution_bound";
    case TheoremName::order_embedding:
      return "order_embedding";
    case TheoremName::sobolev_embedding:
      return "sobolev_embedding";
    case TheoremName::linf_embedding:
      return "linf_embedding";
  }
  return "?";
}

std::string profile_name(PrecisionProfile p) {
  return p == PrecisionProfile::finite_exact ? "finite_exact" : "quadrature";
}

PrecisionProfile parse_profile(const std::string& name) {
  if (name == "finite_exact") return PrecisionProfile::finite_exact;
  if (name == "quadrature") return PrecisionProfile::quadrature;
  throw ConfigError("unknown precision profile '" + name + "'");
}

PrecisionProfile default_profile() {
  const char* env = std::getenv("SBARRON_PROFILE");
  if (env == nullptr || *env == '\0') return PrecisionProfile::finite_exact;
  return parse_profile(env);
}

double check_tolerance(PrecisionProfile profile, const GroupDescriptor& g) {
  return profile == PrecisionProfile::finite_exact && g.is_finite() ? 1e-12
                                                                     : 1e-9;
}

namespace {

void finish_inequality(TheoremCheck& c, double tol) {
  c.slack = c.rhs - c.lhs;
  c.pass = c.slack >= -tol * std::max(1.0, c.rhs);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_order(double s, const char* name) {
  require(std::isfinite(s) && s >= 0.0,
          std::string(name) + " must be a finite nonnegative order");
}

}  // namespace

double compute_rho(const TruncatedDual& dual) {
  if (dual.dims.empty()) throw PreconditionError("dual is empty");
  return *std::max_element(dual.dims.begin(), dual.dims.end());
}

double compute_kappa(const TruncatedDual& dual, const Weight& gamma, double s,
                     double t) {
  double k = 0.0;
  for (std::size_t i = 0; i < dual.size(); ++i)
    k += dual.dims[i] * std::pow(gamma.base(dual.group, dual.labels[i]), t - s);
  return k;
}

double compute_kappa_star(const TruncatedDual& dual, const Weight& gamma,
                          double s, double t) {
  double k = 0.0;
  for (std::size_t i = 0; i < dual.size(); ++i) {
    const double d = dual.dims[i];
    k += d * d * d * std::pow(gamma.base(dual.group, dual.labels[i]), t - s);
  }
  return k;
}

TheoremCheck check_isometry(const FourierCoefficients& c, const Weight& gamma,
                            double s) {
  require_order(s, "s");
  TheoremCheck out;
  out.name = TheoremName::isometry;
  out.variant = "equality";
  out.lhs = barron_norm(bessel_potential(c, gamma.with_order(s)),
                        gamma.with_order(0.0));
  out.rhs = barron_norm(c, gamma.with_order(2.0 * s));
  out.slack = out.rhs - out.lhs;
  out.pass = std::abs(out.slack) <= kIsometryTolerance * out.rhs ||
             (out.lhs == 0.0 && out.rhs == 0.0);
  out.params.s = s;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_interpolation(const FourierCoefficients& c,
                                 const Weight& gamma, double r, double t,
                                 double alpha, double tol) {
  require_order(r, "r");
  require_order(t, "t");
  require(r <= t, "interpolation requires r <= t");
  require(alpha >= 0.0 && alpha <= 1.0, "interpolation requires alpha in [0, 1]");
  const double s = alpha * r + (1.0 - alpha) * t;
  TheoremCheck out;
  out.name = TheoremName::interpolation;
  out.variant = "holder";
  out.lhs = barron_norm(c, gamma.with_order(s));
  out.rhs = std::pow(barron_norm(c, gamma.with_order(r)), alpha) *
            std::pow(barron_norm(c, gamma.with_order(t)), 1.0 - alpha);
  finish_inequality(out, tol);
  out.params.s = s;
  out.params.r = r;
  out.params.t = t;
  out.params.alpha = alpha;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_order_embedding(const FourierCoefficients& c,
                                   const Weight& gamma, double s, double t,
                                   double tol) {
  require_order(s, "s");
  require_order(t, "t");
  require(s < t, "order embedding requires s < t");
  TheoremCheck out;
  out.name = TheoremName::order_embedding;
  out.variant = "monotone";
  out.lhs = barron_norm(c, gamma.with_order(s));
  out.rhs = barron_norm(c, gamma.with_order(t));
  finish_inequality(out, tol);
  out.params.s = s;
  out.params.t = t;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_pseudodiff_bound(const FourierCoefficients& c,
                                    const SpectralSymbol& a,
                                    const Weight& gamma, double s, double t,
                                    double tol) {
  require_order(s, "s");
  require_order(t, "t");
  double bound = 0.0;
  for (const auto& l : c.dual.labels)
    bound = std::max(bound, std::pow(gamma.base(c.group(), l), 0.5 * (s - t)) *
                                std::abs(a.at(l)));
  TheoremCheck out;
  out.name = TheoremName::pseudodiff_bound;
  out.variant = "sup_symbol";
  out.constant = bound;
  out.lhs = barron_norm(pseudo_diff(c, a), gamma.with_order(s));
  out.rhs = bound * barron_norm(c, gamma.with_order(t));
  finish_inequality(out, tol);
  out.params.s = s;
  out.params.t = t;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_convolution_bound(const FourierCoefficients& fc,
                                     double f_l1,
                                     const FourierCoefficients& gc,
                                     const Weight& gamma, double s, double tol) {
  require_order(s, "s");
  const double rho = compute_rho(fc.dual);
  const auto w = gamma.with_order(s);
  TheoremCheck out;
  out.name = TheoremName::convolution_bound;
  out.variant = "rho_l1";
  out.constant = rho;
  out.lhs = barron_norm(convolve_spectral(fc, gc), w);
  out.rhs = rho * f_l1 * barron_norm(gc, w);
  finish_inequality(out, tol);
  out.params.s = s;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_convolution_bound(const GridFunction& f,
                                     const GridFunction& g,
                                     const TruncatedDual& dual,
                                     const Weight& gamma, double s, double tol) {
  if (!f.space.algebra)
    throw UnsupportedOperationError("convolution requires an algebra value space");
  return check_convolution_bound(forward(f, dual), lp_norm(f, 1.0),
                                 forward(g, dual), gamma, s, tol);
}

std::vector<TheoremCheck> check_sobolev_embedding(const FourierCoefficients& c,
                                                  const Weight& gamma, double s,
                                                  double t, double tol) {
  require_order(s, "s");
  require_order(t, "t");
  require(s < t, "Sobolev embedding requires s < t");
  const double lhs = barron_norm(c, gamma.with_order(t));
  const double h = sobolev_norm(c, gamma.with_order(s));

  std::vector<TheoremCheck> out;
  for (const bool star : {false, true}) {
    TheoremCheck k;
    k.name = TheoremName::sobolev_embedding;
    k.variant = star ? "kappa_star" : "kappa_paper";
    k.required = star;
    k.constant = std::sqrt(star ? compute_kappa_star(c.dual, gamma, s, t)
                                : compute_kappa(c.dual, gamma, s, t));
    k.lhs = lhs;
    k.rhs = k.constant * h;
    finish_inequality(k, tol);
    k.params.s = s;
    k.params.t = t;
    k.params.gamma_id = gamma.id();
    out.push_back(k);
  }
  return out;
}

TheoremCheck check_linf_embedding(double grid_sup, const FourierCoefficients& c,
                                  const Weight& gamma, double s, double tol) {
  require_order(s, "s");
  TheoremCheck out;
  out.name = TheoremName::linf_embedding;
  out.variant = "grid_sup";
  out.lhs = grid_sup;
  out.rhs = barron_norm(c, gamma.with_order(s));
  finish_inequality(out, tol);
  out.params.s = s;
  out.params.gamma_id = gamma.id();
  return out;
}

TheoremCheck check_linf_embedding(const FourierCoefficients& c,
                                  const Weight& gamma, double s,
                                  const QuadratureRule& dense, double tol) {
  return check_linf_embedding(sup_norm(sample(c, dense)), c, gamma, s, tol);
}

// --- generation --------------------------------------------------------------

double Generator::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Generator::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Complex Generator::unit_disc() {
  const double radius = std::sqrt(uniform());
  const double angle = 2.0 * std::numbers::pi * uniform();
  return std::polar(radius, angle);
}

AValue Generator::disc_value(const ValueSpace& space) {
  AValue v(space.rows(), space.cols());
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) v(i, j) = unit_disc();
  return v;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::random:
      return "random";
    case Family::single_mode:
      return "single_mode";
    case Family::single_irrep:
      return "single_irrep";
    case Family::equal_magnitude:
      return "equal_magnitude";
  }
  return "?";
}

BandlimitedFunction random_function(Generator& gen, Family family,
                                    const TruncatedDual& dual,
                                    const ValueSpace& space) {
  BandlimitedFunction f{dual.group, space, {}};
  auto add_all = [&](std::size_t s) {
    const int d = dual.dims[s];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        f.modes.push_back({dual.labels[s], i, j, gen.disc_value(space)});
  };
  switch (family) {
    case Family::random:
      for (std::size_t s = 0; s < dual.size(); ++s) {
        const int d = dual.dims[s];
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (gen.uniform() < 0.5)
              f.modes.push_back({dual.labels[s], i, j, gen.disc_value(space)});
      }
      if (f.modes.empty()) add_all(0);
      break;
    case Family::single_mode: {
      const auto s = static_cast<std::size_t>(
          gen.uniform_int(0, static_cast<int>(dual.size()) - 1));
      const int d = dual.dims[s];
      f.modes.push_back({dual.labels[s], gen.uniform_int(0, d - 1),
                         gen.uniform_int(0, d - 1), gen.disc_value(space)});
      break;
    }
    case Family::single_irrep: {
      const auto it = std::max_element(dual.dims.begin(), dual.dims.end());
      add_all(static_cast<std::size_t>(it - dual.dims.begin()));
      break;
    }
    case Family::equal_magnitude:
      for (std::size_t s = 0; s < dual.size(); ++s) add_all(s);
      for (auto& m : f.modes) {
        const double n = norm(space, m.value);
        if (n > 0.0) m.value /= n;
      }
      break;
  }
  return f;
}

SpectralSymbol random_symbol(Generator& gen, const TruncatedDual& dual) {
  SpectralSymbol a;
  for (const auto& l : dual.labels) a.table[l.value] = 2.0 * gen.unit_disc();
  return a;
}

// --- suite -------------------------------------------------------------------

SuiteConfig default_suite_config() {
  SuiteConfig c;
  c.groups = {GroupDescriptor::cyclic(8), GroupDescriptor::dihedral(4),
              GroupDescriptor::torus(), GroupDescriptor::su2()};
  c.bands = {2};
  c.spaces = {ValueSpace{2, NormKind::l2, false},
              ValueSpace{3, NormKind::l1, false},
              ValueSpace{2, NormKind::operator_norm, true}};
  c.weights = {Weight::natural()};
  c.orders = {0.0, 0.5, 1.0, 2.0};
  c.functions_per_case = 50;
  c.seed = 20240101;
  c.profile = PrecisionProfile::finite_exact;
  return c;
}

void validate(const SuiteConfig& config) {
  if (config.functions_per_case < 1)
    throw ConfigError("functions_per_case must be >= 1");
  if (config.dense_factor < 1) throw ConfigError("dense_factor must be >= 1");
  for (int b : config.bands)
    if (b < 0) throw ConfigError("bands must be nonnegative");
  for (const auto& g : config.groups) {
    if (g.kind == GroupKind::cyclic && g.param < 1)
      throw ConfigError("cyclic group requires N >= 1");
    if (g.kind == GroupKind::dihedral && g.param < 3)
      throw ConfigError("dihedral group requires n >= 3");
    if (!g.is_finite() && config.bands.empty())
      throw ConfigError(group_name(g) + " needs at least one band");
  }
  for (const auto& s : config.spaces) validate(s);
  for (double s : config.orders)
    if (!std::isfinite(s) || s < 0.0)
      throw ConfigError("orders must be finite and nonnegative");
  for (double r : config.interpolation.r)
    if (!std::isfinite(r) || r < 0.0)
      throw ConfigError("interpolation r must be finite and nonnegative");
  for (double t : config.interpolation.t)
    if (!std::isfinite(t) || t < 0.0)
      throw ConfigError("interpolation t must be finite and nonnegative");
  for (double a : config.interpolation.alpha)
    if (!(a >= 0.0 && a <= 1.0))
      throw ConfigError("interpolation alpha must lie in [0, 1]");
}

int VerificationReport::required_failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.required && !c.pass) ++n;
  return n;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool weight_applies(const Weight& w, const TruncatedDual& dual) {
  try {
    validate(w, dual);
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

bool has_exact_convolution(const GroupDescriptor& g) {
  return g.is_finite() || g.kind == GroupKind::torus;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  validate(config);
  VerificationReport report;
  report.profile = config.profile;
  report.seed = config.seed;
  report.bands = config.bands;
  report.convention = convention_name(validated_convention());

  std::vector<double> sorted_orders = config.orders;
  std::sort(sorted_orders.begin(), sorted_orders.end());
  sorted_orders.erase(std::unique(sorted_orders.begin(), sorted_orders.end()),
                      sorted_orders.end());

  std::uint64_t case_counter = 0;
  for (const auto& group : config.groups) {
    const std::vector<int> bands =
        group.is_finite() ? std::vector<int>{0} : config.bands;
    for (int band : bands) {
      const auto dual = truncated_dual(group, band);
      const DualSampler grid(dual, quadrature(group, band));
      const DualSampler dense(dual, dense_grid(group, band, config.dense_factor));
      const double tol = check_tolerance(config.profile, group);

      for (const auto& space : config.spaces) {
        for (const auto& weight : config.weights) {
          const std::uint64_t case_seed =
              splitmix64(config.seed ^ splitmix64(case_counter++));
          if (!weight_applies(weight, dual)) {
            ++report.skipped_weight_group_pairs;
            continue;
          }
          ++report.cases;
          Generator gen(case_seed);

          std::vector<Family> families(config.functions_per_case, Family::random);
          families.insert(families.end(), {Family::single_mode, Family::single_irrep,
                                           Family::equal_magnitude});
          for (std::size_t fi = 0; fi < families.size(); ++fi) {
            ++report.functions;
            const auto family = families[fi];
            const auto f = random_function(gen, family, dual, space);
            const auto f_grid = grid.sample(coefficients_of(f, dual));
            const auto c = grid.forward(f_grid);

            CheckParams params;
            params.group = group_name(group);
            params.space = space_name(space);
            params.family = family_name(family);
            params.seed = case_seed;
            params.case_index = static_cast<int>(fi);
            auto push = [&](TheoremCheck k) {
              const auto keep = k.params;
              k.params = params;
              k.params.s = keep.s;
              k.params.t = keep.t;
              k.params.r = keep.r;
              k.params.alpha = keep.alpha;
              k.params.gamma_id = keep.gamma_id;
              report.checks.push_back(std::move(k));
            };

            for (double s : sorted_orders) push(check_isometry(c, weight, s));

            for (double r : config.interpolation.r)
              for (double t : config.interpolation.t) {
                if (r > t) continue;
                for (double a : config.interpolation.alpha)
                  push(check_interpolation(c, weight, r, t, a, tol));
              }

            for (std::size_t i = 0; i < sorted_orders.size(); ++i)
              for (std::size_t j = i + 1; j < sorted_orders.size(); ++j)
                push(check_order_embedding(c, weight, sorted_orders[i],
                                           sorted_orders[j], tol));

            const auto symbol = random_symbol(gen, dual);
            for (double s : sorted_orders)
              for (double t : sorted_orders)
                push(check_pseudodiff_bound(c, symbol, weight, s, t, tol));

            if (space.algebra && has_exact_convolution(group)) {
              const auto g = random_function(gen, Family::random, dual, space);
              const auto gc = grid.forward(grid.sample(coefficients_of(g, dual)));
              const double f_l1 = lp_norm(f_grid, 1.0);
              for (double s : sorted_orders)
                push(check_convolution_bound(c, f_l1, gc, weight, s, tol));
            }

            for (std::size_t i = 0; i < sorted_orders.size(); ++i)
              for (std::size_t j = i + 1; j < sorted_orders.size(); ++j) {
                for (auto& k : check_sobolev_embedding(
                         c, weight, sorted_orders[i], sorted_orders[j], tol)) {
                  if (!k.required) {
                    auto& census = report.kappa_census;
                    if (group.is_abelian()) {
                      ++census.abelian_cases;
                    } else {
                      ++census.nonabelian_cases;
                      ++(k.pass ? census.nonabelian_pass : census.nonabelian_fail);
                      if (k.rhs > 0.0)
                        census.worst_ratio = std::max(census.worst_ratio, k.lhs / k.rhs);
                    }
                  }
                  push(std::move(k));
                }
              }

            const double grid_sup = sup_norm(dense.sample(c));
            for (double s : sorted_orders)
              push(check_linf_embedding(grid_sup, c, weight, s, tol));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace sbarron
