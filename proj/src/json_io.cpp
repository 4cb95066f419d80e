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

#include "sbarron/json_io.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "sbarron/errors.hpp"

namespace sbarron {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + ": expected an integer");
  return j.get<int>();
}

double get_number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError(what + ": expected a number");
  return j.get<double>();
}

const Json& get_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  return j;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(what + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

int label_from_key(const std::string& key) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty())
    throw SchemaError("irrep label key '" + key + "' is not an integer");
  return v;
}

std::string builtin_name(Weight::Builtin b) {
  switch (b) {
    case Weight::Builtin::abs_n:
      return "abs_n";
    case Weight::Builtin::sqrt_l_lplus1:
      return "sqrt_l_lplus1";
    case Weight::Builtin::natural:
      return "natural";
    case Weight::Builtin::constant:
      return "constant";
    case Weight::Builtin::table:
      return "table";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const GroupDescriptor& g) {
  Json j;
  switch (g.kind) {
    case GroupKind::cyclic:
      j["kind"] = "cyclic";
      j["N"] = g.param;
      break;
    case GroupKind::dihedral:
      j["kind"] = "dihedral";
      j["n"] = g.param;
      break;
    case GroupKind::torus:
      j["kind"] = "torus";
      break;
    case GroupKind::su2:
      j["kind"] = "su2";
      break;
  }
  return j;
}

GroupDescriptor group_from_json(const Json& j) {
  const auto kind = get_as<std::string>(member(j, "kind"), "group.kind");
  try {
    if (kind == "cyclic") return GroupDescriptor::cyclic(get_int(member(j, "N"), "group.N"));
    if (kind == "dihedral")
      return GroupDescriptor::dihedral(get_int(member(j, "n"), "group.n"));
  } catch (const ConfigError& e) {
    throw SchemaError(e.what());
  }
  if (kind == "torus") return GroupDescriptor::torus();
  if (kind == "su2") return GroupDescriptor::su2();
  throw SchemaError("unknown group kind '" + kind + "'");
}

Json to_json(const ValueSpace& s) {
  Json j;
  j["dim"] = s.dim;
  j["norm"] = norm_kind_name(s.norm);
  j["algebra"] = s.algebra;
  return j;
}

ValueSpace space_from_json(const Json& j) {
  ValueSpace s;
  s.dim = get_int(member(j, "dim"), "space.dim");
  try {
    s.norm = parse_norm_kind(get_as<std::string>(member(j, "norm"), "space.norm"));
    s.algebra = j.contains("algebra") ? get_as<bool>(j["algebra"], "space.algebra")
                                      : false;
    validate(s);
  } catch (const ConfigError& e) {
    throw SchemaError(e.what());
  }
  return s;
}

Json to_json(const ValueSpace& s, const AValue& v) {
  check_conforms(s, v);
  Json out = Json::array();
  if (s.cols() == 1 && s.norm != NormKind::operator_norm) {
    for (int i = 0; i < v.rows(); ++i) out.push_back(complex_json(v(i, 0)));
    return out;
  }
  for (int i = 0; i < v.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < v.cols(); ++k) row.push_back(complex_json(v(i, k)));
    out.push_back(row);
  }
  return out;
}

AValue value_from_json(const ValueSpace& s, const Json& j) {
  AValue v(s.rows(), s.cols());
  get_array(j, "value");
  if (j.size() != static_cast<std::size_t>(s.rows()))
    throw SchemaError("value has " + std::to_string(j.size()) + " rows, expected " +
                      std::to_string(s.rows()));
  const bool matrix = s.norm == NormKind::operator_norm;
  for (int i = 0; i < s.rows(); ++i) {
    if (!matrix) {
      v(i, 0) = complex_from(j[i], "value entry");
      continue;
    }
    const auto& row = get_array(j[i], "value row");
    if (row.size() != static_cast<std::size_t>(s.cols()))
      throw SchemaError("value row has wrong length");
    for (int k = 0; k < s.cols(); ++k) v(i, k) = complex_from(row[k], "value entry");
  }
  if (!v.allFinite()) throw SchemaError("value has non-finite entries");
  return v;
}

Json to_json(const GroupElement& x) {
  if (const auto* f = std::get_if<FiniteElement>(&x)) return f->index;
  if (const auto* t = std::get_if<TorusPoint>(&x)) return t->x;
  const auto& e = std::get<SU2Element>(x);
  Json j;
  j["alpha"] = complex_json(e.alpha);
  j["beta"] = complex_json(e.beta);
  return j;
}

Json to_json(const BandlimitedFunction& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "bandlimited";
  j["group"] = to_json(f.group);
  j["space"] = to_json(f.space);
  Json modes = Json::array();
  for (const auto& m : f.modes) {
    Json e;
    e["sigma"] = m.sigma.value;
    e["i"] = m.i + 1;
    e["j"] = m.j + 1;
    e["value"] = to_json(f.space, m.value);
    modes.push_back(e);
  }
  j["modes"] = modes;
  return j;
}

BandlimitedFunction bandlimited_from_json(const Json& j) {
  BandlimitedFunction f;
  f.group = group_from_json(member(j, "group"));
  f.space = space_from_json(member(j, "space"));
  const auto& modes = get_array(member(j, "modes"), "modes");
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const auto& m = modes[k];
    const std::string where = "modes[" + std::to_string(k) + "]";
    Mode mode;
    mode.sigma = {get_int(member(m, "sigma"), where + ".sigma")};
    mode.i = get_int(member(m, "i"), where + ".i") - 1;
    mode.j = get_int(member(m, "j"), where + ".j") - 1;
    mode.value = value_from_json(f.space, member(m, "value"));
    f.modes.push_back(std::move(mode));
  }
  try {
    validate(f);
  } catch (const UnknownIrrepError& e) {
    throw SchemaError(e.what());
  } catch (const DimensionError& e) {
    throw SchemaError(e.what());
  }
  return f;
}

Json to_json(const GridFunction& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "grid";
  j["group"] = to_json(f.group());
  j["space"] = to_json(f.space);
  j["band"] = f.rule.band;
  Json nodes = Json::array();
  Json samples = Json::array();
  for (std::size_t k = 0; k < f.samples.size(); ++k) {
    nodes.push_back(to_json(f.rule.nodes[k]));
    samples.push_back(to_json(f.space, f.samples[k]));
  }
  j["nodes"] = nodes;
  j["samples"] = samples;
  return j;
}

GridFunction grid_from_json(const Json& j) {
  GridFunction f;
  const auto g = group_from_json(member(j, "group"));
  f.space = space_from_json(member(j, "space"));
  const int band = get_int(member(j, "band"), "band");
  if (band < 0) throw SchemaError("band must be nonnegative");
  f.rule = quadrature(g, band);
  const auto& samples = get_array(member(j, "samples"), "samples");
  if (samples.size() != f.rule.size())
    throw SchemaError("grid has " + std::to_string(samples.size()) +
                      " samples, the rule has " + std::to_string(f.rule.size()) +
                      " nodes");
  for (const auto& s : samples) f.samples.push_back(value_from_json(f.space, s));
  return f;
}

Json to_json(const FourierCoefficients& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "coefficients";
  j["group"] = to_json(c.group());
  j["space"] = to_json(c.space);
  j["band"] = c.dual.band;
  j["convention"] = convention_name(c.convention);
  Json data = Json::object();
  for (std::size_t s = 0; s < c.blocks.size(); ++s) {
    const auto& b = c.blocks[s];
    Json rows = Json::array();
    for (int i = 0; i < b.dim; ++i) {
      Json row = Json::array();
      for (int k = 0; k < b.dim; ++k) row.push_back(to_json(c.space, b(i, k)));
      rows.push_back(row);
    }
    data[std::to_string(c.dual.labels[s].value)] = rows;
  }
  j["coefficients"] = data;
  return j;
}

FourierCoefficients coefficients_from_json(const Json& j) {
  const auto g = group_from_json(member(j, "group"));
  const auto space = space_from_json(member(j, "space"));
  const int band = j.contains("band") ? get_int(j["band"], "band") : 0;
  if (band < 0) throw SchemaError("band must be nonnegative");
  auto c = FourierCoefficients::zeros(truncated_dual(g, band), space);
  if (j.contains("convention"))
    c.convention = parse_convention(get_as<std::string>(j["convention"], "convention"));
  const auto& data = member(j, "coefficients");
  if (!data.is_object()) throw SchemaError("coefficients: expected an object");
  for (const auto& [key, rows] : data.items()) {
    const IrrepLabel sigma{label_from_key(key)};
    const int pos = c.dual.find(sigma);
    if (pos < 0)
      throw SchemaError("label " + key + " is outside the dual of band " +
                        std::to_string(band));
    auto& b = c.blocks[pos];
    get_array(rows, "block " + key);
    if (rows.size() != static_cast<std::size_t>(b.dim))
      throw SchemaError("block " + key + " must have " + std::to_string(b.dim) + " rows");
    for (int i = 0; i < b.dim; ++i) {
      const auto& row = get_array(rows[i], "block " + key + " row");
      if (row.size() != static_cast<std::size_t>(b.dim))
        throw SchemaError("block " + key + " row has wrong length");
      for (int k = 0; k < b.dim; ++k) b(i, k) = value_from_json(space, row[k]);
    }
  }
  return c;
}

Json to_json(const Weight& w) {
  Json j;
  if (w.builtin == Weight::Builtin::table) {
    Json t = Json::object();
    for (const auto& [label, v] : w.table) t[std::to_string(label)] = v;
    j["table"] = t;
  } else {
    j["builtin"] = builtin_name(w.builtin);
    if (w.builtin == Weight::Builtin::constant) j["value"] = w.constant;
  }
  j["s"] = w.s;
  return j;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  if (!j.is_object()) throw SchemaError("weight: expected an object");
  if (j.contains("table")) {
    w.builtin = Weight::Builtin::table;
    const auto& t = j["table"];
    if (!t.is_object()) throw SchemaError("weight.table: expected an object");
    for (const auto& [key, v] : t.items())
      w.table[label_from_key(key)] = get_number(v, "weight.table." + key);
  } else {
    const auto name = get_as<std::string>(member(j, "builtin"), "weight.builtin");
    if (name == "abs_n")
      w.builtin = Weight::Builtin::abs_n;
    else if (name == "sqrt_l_lplus1")
      w.builtin = Weight::Builtin::sqrt_l_lplus1;
    else if (name == "natural")
      w.builtin = Weight::Builtin::natural;
    else if (name == "constant") {
      w.builtin = Weight::Builtin::constant;
      w.constant = get_number(member(j, "value"), "weight.value");
    } else
      throw SchemaError("unknown weight builtin '" + name + "'");
  }
  if (j.contains("s")) w.s = get_number(j["s"], "weight.s");
  return w;
}

Json to_json(const SpectralSymbol& a) {
  Json t = Json::object();
  for (const auto& [label, v] : a.table) t[std::to_string(label)] = complex_json(v);
  Json j;
  j["table"] = t;
  return j;
}

SpectralSymbol symbol_from_json(const Json& j, const TruncatedDual& dual,
                                const Weight& gamma) {
  if (!j.is_object()) throw SchemaError("symbol: expected an object");
  if (j.contains("table")) {
    SpectralSymbol a;
    const auto& t = j["table"];
    if (!t.is_object()) throw SchemaError("symbol.table: expected an object");
    for (const auto& [key, v] : t.items())
      a.table[label_from_key(key)] = complex_from(v, "symbol.table." + key);
    return a;
  }
  const auto name = get_as<std::string>(member(j, "builtin"), "symbol.builtin");
  if (name == "bessel")
    return SpectralSymbol::bessel(dual, gamma, get_number(member(j, "s"), "symbol.s"));
  if (name == "constant")
    return SpectralSymbol::constant(dual, complex_from(member(j, "value"), "symbol.value"));
  throw SchemaError("unknown symbol builtin '" + name + "'");
}

Json to_json(const NormReport& r) {
  Json per = Json::object();
  for (const auto& [label, v] : r.per_irrep) per[std::to_string(label.value)] = v;
  Json j;
  j["value"] = r.value;
  j["per_irrep"] = per;
  return j;
}

Json to_json(const SuiteConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json groups = Json::array();
  for (const auto& g : c.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  j["bands"] = c.bands;
  Json spaces = Json::array();
  for (const auto& s : c.spaces) spaces.push_back(to_json(s));
  j["spaces"] = spaces;
  Json weights = Json::array();
  for (const auto& w : c.weights) weights.push_back(to_json(w));
  j["weights"] = weights;
  j["orders"] = c.orders;
  j["functions_per_case"] = c.functions_per_case;
  j["seed"] = c.seed;
  j["precision_profile"] = profile_name(c.profile);
  j["interpolation"] = {{"r", c.interpolation.r},
                        {"t", c.interpolation.t},
                        {"alpha", c.interpolation.alpha}};
  j["dense_factor"] = c.dense_factor;
  return j;
}

SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("suite config: expected an object");
  SuiteConfig c;
  auto numbers = [&](const char* key, std::vector<double>& out) {
    out.clear();
    for (const auto& v : get_array(j[key], key)) out.push_back(get_number(v, key));
  };
  if (j.contains("groups"))
    for (const auto& g : get_array(j["groups"], "groups"))
      c.groups.push_back(group_from_json(g));
  if (j.contains("bands"))
    for (const auto& b : get_array(j["bands"], "bands"))
      c.bands.push_back(get_int(b, "bands"));
  if (j.contains("spaces"))
    for (const auto& s : get_array(j["spaces"], "spaces"))
      c.spaces.push_back(space_from_json(s));
  if (j.contains("weights"))
    for (const auto& w : get_array(j["weights"], "weights"))
      c.weights.push_back(weight_from_json(w));
  if (j.contains("orders")) numbers("orders", c.orders);
  if (j.contains("functions_per_case"))
    c.functions_per_case = get_int(j["functions_per_case"], "functions_per_case");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw SchemaError("seed: expected an integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("precision_profile")) {
    try {
      c.profile = parse_profile(
          get_as<std::string>(j["precision_profile"], "precision_profile"));
    } catch (const ConfigError& e) {
      throw SchemaError(e.what());
    }
  }
  if (j.contains("interpolation")) {
    const auto& ip = j["interpolation"];
    if (!ip.is_object()) throw SchemaError("interpolation: expected an object");
    auto grid = [&](const char* key, std::vector<double>& out) {
      if (!ip.contains(key)) return;
      out.clear();
      for (const auto& v : get_array(ip[key], key)) out.push_back(get_number(v, key));
    };
    grid("r", c.interpolation.r);
    grid("t", c.interpolation.t);
    grid("alpha", c.interpolation.alpha);
  }
  if (j.contains("dense_factor"))
    c.dense_factor = get_int(j["dense_factor"], "dense_factor");
  return c;
}

Json to_json(const TheoremCheck& c) {
  Json j;
  j["name"] = theorem_name(c.name);
  j["variant"] = c.variant;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["constant"] = c.constant;
  j["slack"] = c.slack;
  j["pass"] = c.pass;
  j["required"] = c.required;
  Json p;
  if (c.params.s) p["s"] = *c.params.s;
  if (c.params.t) p["t"] = *c.params.t;
  if (c.params.r) p["r"] = *c.params.r;
  if (c.params.alpha) p["alpha"] = *c.params.alpha;
  p["gamma"] = c.params.gamma_id;
  p["group"] = c.params.group;
  p["space"] = c.params.space;
  p["family"] = c.params.family;
  p["seed"] = c.params.seed;
  p["case"] = c.params.case_index;
  j["params"] = p;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json env;
  env["profile"] = profile_name(r.profile);
  env["seed"] = r.seed;
  env["bands"] = r.bands;
  env["convention"] = r.convention;
  env["tolerances"] = {{"finite_exact", 1e-12},
                       {"quadrature", 1e-9},
                       {"isometry_relative", kIsometryTolerance}};
  env["cases"] = r.cases;
  env["functions"] = r.functions;
  env["skipped_weight_group_pairs"] = r.skipped_weight_group_pairs;
  env["notes"] = Json::array(
      {"kappa and kappa_star are sums over the truncated dual; with s < t each "
       "summand is >= 1, so neither is finite on an infinite dual",
       "kappa_paper checks are findings and do not affect the exit status",
       "linf_embedding uses the maximum over a dense grid, a lower bound of "
       "the essential sup"});

  std::map<std::string, std::pair<int, int>> by_theorem;
  for (const auto& c : r.checks) {
    auto& [total, failed] = by_theorem[theorem_name(c.name) + "/" + c.variant];
    ++total;
    if (!c.pass) ++failed;
  }
  Json summary;
  summary["checks"] = r.checks.size();
  summary["required_failures"] = r.required_failures();
  summary["all_required_pass"] = r.all_required_pass();
  Json per = Json::object();
  for (const auto& [name, counts] : by_theorem)
    per[name] = {{"total", counts.first}, {"failed", counts.second}};
  summary["by_check"] = per;
  const auto& k = r.kappa_census;
  summary["kappa_paper_census"] = {{"abelian_cases", k.abelian_cases},
                                   {"nonabelian_cases", k.nonabelian_cases},
                                   {"nonabelian_pass", k.nonabelian_pass},
                                   {"nonabelian_fail", k.nonabelian_fail},
                                   {"nonabelian_worst_ratio", k.worst_ratio}};

  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["environment"] = env;
  j["summary"] = summary;
  j["checks"] = checks;
  return j;
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "name,variant,required,pass,lhs,rhs,constant,slack,group,space,family,"
         "gamma,s,t,r,alpha,seed,case\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const auto& c : r.checks) {
    out << theorem_name(c.name) << ',' << c.variant << ','
        << (c.required ? "true" : "false") << ',' << (c.pass ? "true" : "false")
        << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
        << format_double(c.constant) << ',' << format_double(c.slack) << ','
        << c.params.group << ',' << c.params.space << ',' << c.params.family
        << ',' << c.params.gamma_id << ',' << opt(c.params.s) << ','
        << opt(c.params.t) << ',' << opt(c.params.r) << ','
        << opt(c.params.alpha) << ',' << c.params.seed << ','
        << c.params.case_index << '\n';
  }
  return out.str();
}

}  // namespace sbarron
