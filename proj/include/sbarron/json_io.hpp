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

// JSON encodings of every public type. Complex numbers are [re, im] pairs;
// coefficient blocks are row-major nested arrays keyed by the irrep label.
// Documents written by this module carry "schema_version": 1.

#include <string>

#include <json.hpp>

#include "sbarron/fourier.hpp"
#include "sbarron/operators.hpp"
#include "sbarron/spectra.hpp"
#include "sbarron/verify.hpp"

namespace sbarron {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parses text; syntax errors become SchemaError with line and column.
Json parse_json(const std::string& text);

Json to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

Json to_json(const ValueSpace& s);
ValueSpace space_from_json(const Json& j);

Json to_json(const ValueSpace& s, const AValue& v);
AValue value_from_json(const ValueSpace& s, const Json& j);

Json to_json(const GroupElement& x);

Json to_json(const BandlimitedFunction& f);
BandlimitedFunction bandlimited_from_json(const Json& j);

// Samples aligned with quadrature(group, band).
Json to_json(const GridFunction& f);
GridFunction grid_from_json(const Json& j);

Json to_json(const FourierCoefficients& c);
FourierCoefficients coefficients_from_json(const Json& j);

// {"builtin": ..., "s": ...} or {"table": {...}, "s": ...}
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// {"table": {"<label>": [re, im]}}, {"builtin": "bessel", "s": x} or
// {"builtin": "constant", "value": [re, im]}. Builtins are expanded on the
// dual, the bessel one with gamma taken from `gamma`.
Json to_json(const SpectralSymbol& a);
SpectralSymbol symbol_from_json(const Json& j, const TruncatedDual& dual,
                                const Weight& gamma);

Json to_json(const NormReport& r);

Json to_json(const SuiteConfig& c);
// Missing lists are empty; a config without groups yields an empty report.
SuiteConfig suite_config_from_json(const Json& j);

Json to_json(const TheoremCheck& c);
Json to_json(const VerificationReport& r);
// One header line, then one row per check.
std::string report_to_csv(const VerificationReport& r);

}  // namespace sbarron
