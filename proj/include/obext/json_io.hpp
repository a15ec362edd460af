// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "obext/blueprint.hpp"
#include "obext/exterior.hpp"
#include "obext/free_module.hpp"
#include "obext/matroid.hpp"
#include "obext/oracles.hpp"

namespace obext::json {

using Json = nlohmann::ordered_json;

// Every reader throws Error(kParse), or the more specific code of the
// underlying constructor, on malformed input.

Json preset_to_json(const PresetDescriptor& d);
/// Accepts an object {"preset": "gf", "p": 3} or a preset name string.
PresetDescriptor preset_from_json(const Json& j);

Json scalar_to_json(const Blueprint& bp, const Scalar& a);
Scalar scalar_from_json(const Blueprint& bp, const Json& j);

/// Array of scalar strings.
Json sum_to_json(const Blueprint& bp, const FormalSum& x);
FormalSum sum_from_json(const Blueprint& bp, const Json& j);

Json index_set_to_json(IndexSet s);
IndexSet index_set_from_json(const Json& j);

/// {"n": 4, "coeffs": {"1": ["1"], ...}}
Json module_element_to_json(const Blueprint& bp, const FreeModuleElement& x);
FreeModuleElement module_element_from_json(const Blueprint& bp, const Json& j);

/// {"n": 4, "terms": [{"I": [1, 2], "coeff": ["eps", "eps"]}, ...]}
Json exterior_to_json(const Blueprint& bp, const ExteriorElement& x);
ExteriorElement exterior_from_json(const Blueprint& bp, const Json& j);

/// {"preset": {...}, "n": 4, "d": 2, "values": {"1,2": "1", ...}} with every
/// d-subset present.
Json gp_to_json(const Blueprint& bp, const GPFunction& f);
GPFunction gp_from_json(const Blueprint& bp, const Json& j);

Json report_to_json(const Blueprint& bp, const PluckerReport& r);
PluckerReport report_from_json(const Blueprint& bp, const Json& j);

/// {"ring": "gf(3)" | "rational", "n": 4, "terms": [{"I": [...], "coeff": "a/b"}]}
Json classical_to_json(const oracles::ClassicalExteriorElement& x);
oracles::ClassicalExteriorElement classical_from_json(const Json& j);

/// {"semifield": "boolean" | "maxplus", "n": 4, "terms": [{"I": [...], "coeff": "a/b"}]}
/// Absent keys are bottom.
Json tropical_to_json(const oracles::TropicalExteriorElement& x);
oracles::TropicalExteriorElement tropical_from_json(const Json& j);

/// Rows of field entries, each a number or an "a/b" string.
std::vector<std::vector<Rational>> matrix_from_json(const Json& j);

/// Serialized form: compact, newline-terminated.
std::string dump(const Json& j);

}  // namespace obext::json
