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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sbarron/errors.hpp"
#include "sbarron/json_io.hpp"

namespace sbarron {

namespace {

struct Common {
  std::string group;
  int band = -1;
  std::string space;
  std::string weight = "natural";
  double s = 0.0;
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string profile;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--group", c.group, "cyclic:N, dihedral:n, torus, su2 or a JSON object");
  cmd->add_option("--band", c.band, "truncation band");
  cmd->add_option("--space", c.space, "l1:d, l2:d, linf:d, operator:d or a JSON object");
  cmd->add_option("--weight", c.weight,
                  "abs_n, sqrt_l_lplus1, natural, const:<v>, a JSON object or a file");
  cmd->add_option("--s", c.s, "order");
  cmd->add_option("--in", c.in, "input file ('-' for stdin)");
  cmd->add_option("--out", c.out, "output file (stdout if omitted)");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--profile", c.profile, "finite_exact or quadrature");
}

std::string read_text(const std::string& path) {
  if (path.empty()) throw SchemaError("--in is required");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return parse_json(read_text(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// Output appears at `path` only once complete.
void write_atomic(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw SchemaError("cannot write '" + path + "'");
    f << text;
    if (!f.flush()) throw SchemaError("cannot write '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw SchemaError("cannot write '" + path + "': " + ec.message());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw ConfigError(what + ": '" + s + "' is not an integer");
  return v;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw ConfigError(what + ": '" + s + "' is not a number");
  return v;
}

bool looks_like_json(const std::string& s) {
  return !s.empty() && (s.front() == '{' || s.front() == '[');
}

GroupDescriptor parse_group(const std::string& s) {
  if (looks_like_json(s)) return group_from_json(parse_json(s));
  const auto p = split(s, ':');
  if (p[0] == "torus" && p.size() == 1) return GroupDescriptor::torus();
  if (p[0] == "su2" && p.size() == 1) return GroupDescriptor::su2();
  if (p.size() == 2 && p[0] == "cyclic")
    return GroupDescriptor::cyclic(to_int(p[1], "--group"));
  if (p.size() == 2 && p[0] == "dihedral")
    return GroupDescriptor::dihedral(to_int(p[1], "--group"));
  throw ConfigError("unrecognized group '" + s + "'");
}

ValueSpace parse_space(const std::string& s) {
  if (looks_like_json(s)) return space_from_json(parse_json(s));
  const auto p = split(s, ':');
  if (p.size() != 2) throw ConfigError("unrecognized space '" + s + "'");
  const NormKind kind = parse_norm_kind(p[0]);
  const int dim = to_int(p[1], "--space");
  return kind == NormKind::operator_norm ? ValueSpace::matrix_algebra(dim)
                                         : ValueSpace::vector(dim, kind);
}

Weight parse_weight(const std::string& s, double order) {
  Weight w;
  if (looks_like_json(s)) {
    w = weight_from_json(parse_json(s));
  } else if (s == "abs_n") {
    w = Weight::abs_n();
  } else if (s == "sqrt_l_lplus1") {
    w = Weight::sqrt_l_lplus1();
  } else if (s == "natural") {
    w = Weight::natural();
  } else if (s.rfind("const:", 0) == 0) {
    w = Weight::constant_gamma(to_double(s.substr(6), "--weight"));
  } else if (std::filesystem::exists(s)) {
    w = weight_from_json(read_json(s));
  } else {
    throw ConfigError("unrecognized weight '" + s + "'");
  }
  return w.with_order(order);
}

void expect_group(const Common& c, const GroupDescriptor& g) {
  if (c.group.empty()) return;
  const auto want = parse_group(c.group);
  if (want.kind != g.kind || want.param != g.param)
    throw SchemaError("input is on " + group_name(g) + ", --group asks for " +
                      group_name(want));
}

void expect_space(const Common& c, const ValueSpace& s) {
  if (c.space.empty()) return;
  const auto want = parse_space(c.space);
  if (want.dim != s.dim || want.norm != s.norm)
    throw SchemaError("input values live in " + space_name(s) + ", --space asks for " +
                      space_name(want));
}

std::string type_of(const Json& j) {
  if (j.is_object() && j.contains("type") && j["type"].is_string())
    return j["type"].get<std::string>();
  if (j.is_object() && j.contains("modes")) return "bandlimited";
  if (j.is_object() && j.contains("samples")) return "grid";
  if (j.is_object() && j.contains("coefficients")) return "coefficients";
  throw SchemaError("cannot tell the input type; expected a bandlimited, grid or "
                    "coefficients document");
}

void check_version(const Json& j) {
  if (j.is_object() && j.contains("schema_version") &&
      j["schema_version"] != kSchemaVersion)
    throw SchemaError("unsupported schema_version " + j["schema_version"].dump());
}

// Any function document as coefficients. A bandlimited input uses `band`
// (default: its own band); a grid input its own rule unless `band` is given.
FourierCoefficients load_coefficients(const Json& j, int band) {
  check_version(j);
  const auto type = type_of(j);
  if (type == "coefficients") {
    auto c = coefficients_from_json(j);
    if (band >= 0 && band != c.dual.band)
      throw SchemaError("coefficients have band " + std::to_string(c.dual.band) +
                        ", --band asks for " + std::to_string(band));
    return c;
  }
  if (type == "bandlimited") {
    const auto f = bandlimited_from_json(j);
    return coefficients_of(f, truncated_dual(f.group, band >= 0 ? band : f.band()));
  }
  if (type == "grid") {
    const auto f = grid_from_json(j);
    return forward(f, truncated_dual(f.group(), band >= 0 ? band : f.rule.band));
  }
  throw SchemaError("unsupported input type '" + type + "'");
}

int cmd_transform(const Common& c, std::ostream& out) {
  const auto j = read_json(c.in);
  const auto coeffs = load_coefficients(j, c.band);
  expect_group(c, coeffs.group());
  expect_space(c, coeffs.space);
  write_atomic(c.out, dump(to_json(coeffs)), out);
  return kExitOk;
}

int cmd_synth(const Common& c, std::ostream& out) {
  const auto j = read_json(c.in);
  const auto coeffs = load_coefficients(j, -1);
  expect_group(c, coeffs.group());
  expect_space(c, coeffs.space);
  const int band = c.band >= 0 ? c.band : coeffs.dual.band;
  const auto grid = sample(coeffs, quadrature(coeffs.group(), band));
  write_atomic(c.out, dump(to_json(grid)), out);
  return kExitOk;
}

int cmd_norm(const Common& c, const std::string& which, double p,
             std::ostream& out) {
  const auto j = read_json(c.in);
  Json result;
  result["norm"] = which;
  if (which == "lp" || which == "sup") {
    if (type_of(j) != "grid") throw SchemaError("lp and sup norms need a grid input");
    const auto f = grid_from_json(j);
    expect_group(c, f.group());
    expect_space(c, f.space);
    if (which == "lp") {
      if (!(p >= 1.0)) throw ConfigError("--p must be >= 1");
      result["p"] = p;
    }
    result["value"] = which == "lp" ? lp_norm(f, p) : sup_norm(f);
    write_atomic(c.out, dump(result), out);
    return kExitOk;
  }
  const auto coeffs = load_coefficients(j, c.band);
  expect_group(c, coeffs.group());
  expect_space(c, coeffs.space);
  NormReport report;
  if (which == "sp") {
    if (!(p >= 1.0)) throw ConfigError("--p must be >= 1");
    result["p"] = p;
    report = sp_norm_report(coeffs, p);
  } else if (which == "sinf") {
    report.value = s_inf_norm(coeffs);
  } else {
    const auto w = parse_weight(c.weight, c.s);
    validate(w, coeffs.dual);
    result["s"] = c.s;
    result["weight"] = to_json(w);
    report = which == "barron" ? barron_norm_report(coeffs, w)
                               : sobolev_norm_report(coeffs, w);
  }
  const auto r = to_json(report);
  result["value"] = r["value"];
  if (!report.per_irrep.empty()) result["per_irrep"] = r["per_irrep"];
  write_atomic(c.out, dump(result), out);
  return kExitOk;
}

SpectralSymbol parse_symbol(const std::string& s, const TruncatedDual& dual,
                            const Weight& gamma) {
  if (s.empty()) throw ConfigError("--symbol is required");
  if (looks_like_json(s)) return symbol_from_json(parse_json(s), dual, gamma);
  const auto p = split(s, ':');
  if (p[0] == "bessel" && p.size() == 2)
    return SpectralSymbol::bessel(dual, gamma, to_double(p[1], "--symbol"));
  if (p[0] == "const" && (p.size() == 2 || p.size() == 3))
    return SpectralSymbol::constant(
        dual, {to_double(p[1], "--symbol"),
               p.size() == 3 ? to_double(p[2], "--symbol") : 0.0});
  return symbol_from_json(read_json(s), dual, gamma);
}

int cmd_op(const Common& c, const std::string& op, const std::string& symbol,
           const std::string& with, std::ostream& out) {
  const auto j = read_json(c.in);
  if (op == "convolve") {
    if (with.empty()) throw ConfigError("op convolve needs --with");
    const auto k = read_json(with);
    check_version(j);
    check_version(k);
    if (type_of(j) == "grid" && type_of(k) == "grid") {
      const auto f = grid_from_json(j);
      const auto g = grid_from_json(k);
      expect_group(c, f.group());
      write_atomic(c.out, dump(to_json(convolve_direct(f, g))), out);
      return kExitOk;
    }
    const auto fc = load_coefficients(j, c.band);
    const auto gc = load_coefficients(k, c.band);
    expect_group(c, fc.group());
    write_atomic(c.out, dump(to_json(convolve_spectral(fc, gc))), out);
    return kExitOk;
  }
  const auto coeffs = load_coefficients(j, c.band);
  expect_group(c, coeffs.group());
  expect_space(c, coeffs.space);
  const auto gamma = parse_weight(c.weight, c.s);
  validate(gamma, coeffs.dual);
  FourierCoefficients result;
  if (op == "bessel") {
    result = bessel_potential(coeffs, gamma);
  } else if (op == "pseudodiff") {
    result = pseudo_diff(coeffs, parse_symbol(symbol, coeffs.dual, gamma));
  } else {
    throw ConfigError("unknown operator '" + op + "'");
  }
  write_atomic(c.out, dump(to_json(result)), out);
  return kExitOk;
}

int cmd_suite(const Common& c, const std::string& config_path,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
  SuiteConfig config = config_path.empty()
                           ? default_suite_config()
                           : suite_config_from_json(read_json(config_path));
  if (config_path.empty()) config.profile = default_profile();
  if (c.seed) config.seed = *c.seed;
  if (!c.profile.empty()) config.profile = parse_profile(c.profile);
  validate(config);
  const auto report = run_suite(config);
  write_atomic(c.out, dump(to_json(report)), out);
  if (!csv_path.empty()) write_atomic(csv_path, report_to_csv(report), out);
  const int failures = report.required_failures();
  if (failures > 0) {
    err << "suite: " << failures << " required check(s) failed\n";
    return kExitChecksFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spectral Barron norms and Fourier analysis on compact groups",
               "sbarron"};
  app.require_subcommand(1);

  Common common;
  std::string norm_kind = "barron";
  double p = 1.0;
  std::string op_name;
  std::string symbol;
  std::string with;
  std::string config_path;
  std::string csv_path;

  auto* transform = app.add_subcommand("transform", "function or grid -> coefficients");
  auto* synth = app.add_subcommand("synth", "coefficients -> grid samples");
  auto* norm_cmd = app.add_subcommand("norm", "print a norm of a function");
  auto* op = app.add_subcommand("op", "apply bessel, pseudodiff or convolve");
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  for (auto* cmd : {transform, synth, norm_cmd, op, suite}) add_common(cmd, common);
  norm_cmd->add_option("--norm", norm_kind, "sp, sinf, barron, sobolev, lp or sup")
      ->check(CLI::IsMember({"sp", "sinf", "barron", "sobolev", "lp", "sup"}));
  norm_cmd->add_option("--p", p, "exponent of the sp and lp norms");
  op->add_option("operator", op_name, "bessel, pseudodiff or convolve")
      ->required()
      ->check(CLI::IsMember({"bessel", "pseudodiff", "convolve"}));
  op->add_option("--symbol", symbol,
                 "bessel:<s>, const:<re>[:<im>], a JSON object or a file");
  op->add_option("--with", with, "second operand of convolve");
  suite->add_option("--config", config_path, "suite config (built-in default if omitted)");
  suite->add_option("--csv", csv_path, "also write the CSV flattening here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (transform->parsed()) return cmd_transform(common, out);
    if (synth->parsed()) return cmd_synth(common, out);
    if (norm_cmd->parsed()) return cmd_norm(common, norm_kind, p, out);
    if (op->parsed()) return cmd_op(common, op_name, symbol, with, out);
    if (suite->parsed()) return cmd_suite(common, config_path, csv_path, out, err);
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace sbarron
