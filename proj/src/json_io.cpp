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

#include "obext/json_io.hpp"

#include "obext/error.hpp"

namespace obext::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int dimension_field(const Json& j) {
  int n = int_field(j, "n");
  if (n < 0 || n > kMaxDimension) fail("dimension out of range");
  return n;
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_value(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(string_value(j, "rational entry"));
}

}  // namespace

Json preset_to_json(const PresetDescriptor& d) {
  Json j;
  j["preset"] = std::string(preset_kind_name(d.kind));
  if (d.kind == PresetKind::kPrimeField) j["p"] = d.p;
  return j;
}

PresetDescriptor preset_from_json(const Json& j) {
  if (j.is_string()) return parse_preset_name(j.get<std::string>());
  const std::string kind = string_value(field(j, "preset"), "preset name");
  if (kind == "gf") return PresetDescriptor::gf(int_field(j, "p"));
  return parse_preset_name(kind);
}

Json scalar_to_json(const Blueprint& bp, const Scalar& a) { return bp.format(a); }

Scalar scalar_from_json(const Blueprint& bp, const Json& j) {
  if (j.is_number_integer() && bp.descriptor().kind != PresetKind::kMaxPlus) {
    return bp.parse(std::to_string(j.get<std::int64_t>()));
  }
  return bp.parse(string_value(j, "scalar"));
}

Json sum_to_json(const Blueprint& bp, const FormalSum& x) {
  Json out = Json::array();
  for (const Scalar& s : x.terms()) out.push_back(scalar_to_json(bp, s));
  return out;
}

FormalSum sum_from_json(const Blueprint& bp, const Json& j) {
  if (!j.is_array()) fail("formal sum must be an array of scalars");
  std::vector<Scalar> terms;
  for (const Json& t : j) terms.push_back(scalar_from_json(bp, t));
  return FormalSum(terms);
}

Json index_set_to_json(IndexSet s) { return s.indices(); }

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_array()) fail("index set must be an array");
  std::vector<int> indices;
  for (const Json& i : j) {
    if (!i.is_number_integer()) fail("index must be an integer");
    int v = i.get<int>();
    if (!indices.empty() && v <= indices.back()) {
      throw Error(ErrorCode::kMalformedKey, "index set is not strictly increasing");
    }
    indices.push_back(v);
  }
  return IndexSet::from_indices(indices);
}

Json module_element_to_json(const Blueprint& bp, const FreeModuleElement& x) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : x.coeffs()) coeffs[std::to_string(i)] = sum_to_json(bp, c);
  return Json{{"n", x.dimension()}, {"coeffs", coeffs}};
}

FreeModuleElement module_element_from_json(const Blueprint& bp, const Json& j) {
  const int n = dimension_field(j);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) fail("coeffs must be an object");
  std::map<int, FormalSum> out;
  for (const auto& [key, value] : coeffs.items()) {
    IndexSet s = parse_index_key(key);
    if (s.size() != 1) throw Error(ErrorCode::kMalformedKey, "module key '" + key + "' is not a single index");
    out.emplace(s.indices().front(), sum_from_json(bp, value));
  }
  return FreeModuleElement(n, std::move(out));
}

Json exterior_to_json(const Blueprint& bp, const ExteriorElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    terms.push_back(Json{{"I", index_set_to_json(key)}, {"coeff", sum_to_json(bp, c)}});
  }
  return Json{{"n", x.dimension()}, {"terms", terms}};
}

ExteriorElement exterior_from_json(const Blueprint& bp, const Json& j) {
  const int n = dimension_field(j);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  ExteriorElement out(n);
  for (const Json& t : terms) {
    IndexSet key = index_set_from_json(field(t, "I"));
    out += ExteriorElement(n, {{key, sum_from_json(bp, field(t, "coeff"))}});
  }
  return out;
}

Json gp_to_json(const Blueprint& bp, const GPFunction& f) {
  Json values = Json::object();
  const std::vector<IndexSet> subsets = subsets_of_size(f.n(), f.d());
  for (std::size_t r = 0; r < subsets.size(); ++r) values[subsets[r].to_key()] = scalar_to_json(bp, f.values()[r]);
  return Json{{"preset", preset_to_json(bp.descriptor())}, {"n", f.n()}, {"d", f.d()}, {"values", values}};
}

GPFunction gp_from_json(const Blueprint& bp, const Json& j) {
  if (j.contains("preset") && !(preset_from_json(j.at("preset")) == bp.descriptor())) {
    throw Error(ErrorCode::kInstanceMismatch, "GP function belongs to another preset");
  }
  const int n = dimension_field(j);
  const int d = int_field(j, "d");
  if (d < 0 || d > n) fail("rank out of range");
  const Json& values = field(j, "values");
  if (!values.is_object()) fail("values must be an object");
  const std::vector<IndexSet> subsets = subsets_of_size(n, d);
  std::map<IndexSet, Scalar> seen;
  for (const auto& [key, value] : values.items()) {
    IndexSet s = key.empty() ? IndexSet{} : parse_index_key(key);
    if (s.size() != d || !s.subset_of(IndexSet::range(n))) {
      throw Error(ErrorCode::kMalformedKey, "key '" + key + "' is not a " + std::to_string(d) + "-subset");
    }
    seen[s] = scalar_from_json(bp, value);
  }
  std::vector<Scalar> out;
  for (IndexSet s : subsets) {
    auto it = seen.find(s);
    if (it == seen.end()) throw Error(ErrorCode::kMalformedKey, "missing value for key '" + s.to_key() + "'");
    out.push_back(it->second);
  }
  return GPFunction(bp.domain(), n, d, std::move(out));
}

namespace {

Json witnesses_to_json(const Blueprint& bp, const std::vector<PluckerWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    out.push_back(Json{{"X", index_set_to_json(w.X)}, {"Y", index_set_to_json(w.Y)}, {"sum", sum_to_json(bp, w.sum)}});
  }
  return out;
}

std::vector<PluckerWitness> witnesses_from_json(const Blueprint& bp, const Json& j) {
  if (!j.is_array()) fail("witnesses must be an array");
  std::vector<PluckerWitness> out;
  for (const Json& w : j) {
    out.push_back({index_set_from_json(field(w, "X")), index_set_from_json(field(w, "Y")),
                   sum_from_json(bp, field(w, "sum"))});
  }
  return out;
}

}  // namespace

Json report_to_json(const Blueprint& bp, const PluckerReport& r) {
  return Json{{"verdict", std::string(verdict_name(r.verdict))},
              {"unit_found", r.unit_found},
              {"single_terms", r.single_terms},
              {"witnesses", witnesses_to_json(bp, r.witnesses)},
              {"undecided", witnesses_to_json(bp, r.undecided)}};
}

PluckerReport report_from_json(const Blueprint& bp, const Json& j) {
  PluckerReport r;
  const std::string verdict = string_value(field(j, "verdict"), "verdict");
  if (verdict == "valid") {
    r.verdict = Verdict::kValid;
  } else if (verdict == "invalid") {
    r.verdict = Verdict::kInvalid;
  } else if (verdict == "indeterminate") {
    r.verdict = Verdict::kIndeterminate;
  } else {
    fail("unknown verdict '" + verdict + "'");
  }
  if (!field(j, "unit_found").is_boolean() || !field(j, "single_terms").is_boolean()) fail("flags must be booleans");
  r.unit_found = j.at("unit_found").get<bool>();
  r.single_terms = j.at("single_terms").get<bool>();
  r.witnesses = witnesses_from_json(bp, field(j, "witnesses"));
  r.undecided = witnesses_from_json(bp, field(j, "undecided"));
  return r;
}

Json classical_to_json(const oracles::ClassicalExteriorElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms) {
    terms.push_back(Json{{"I", index_set_to_json(key)}, {"coeff", format_rational(c)}});
  }
  const std::string ring = x.ring.is_rational() ? "rational" : "gf(" + std::to_string(x.ring.modulus()) + ")";
  return Json{{"ring", ring}, {"n", x.n}, {"terms", terms}};
}

oracles::ClassicalExteriorElement classical_from_json(const Json& j) {
  const std::string ring = string_value(field(j, "ring"), "ring");
  const PresetDescriptor d = parse_preset_name(ring);
  if (d.kind != PresetKind::kPrimeField && d.kind != PresetKind::kRationalField) fail("ring must be gf(p) or rational");
  const int n = dimension_field(j);
  std::map<IndexSet, Rational> terms;
  for (const Json& t : field(j, "terms")) {
    terms[index_set_from_json(field(t, "I"))] = rational_value(field(t, "coeff"));
  }
  return oracles::make_classical(ExactField(d.p), n, std::move(terms));
}

Json tropical_to_json(const oracles::TropicalExteriorElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms) {
    terms.push_back(Json{{"I", index_set_to_json(key)}, {"coeff", format_rational(c)}});
  }
  const char* kind = x.kind == oracles::TropicalKind::kBoolean ? "boolean" : "maxplus";
  return Json{{"semifield", kind}, {"n", x.n}, {"terms", terms}};
}

oracles::TropicalExteriorElement tropical_from_json(const Json& j) {
  oracles::TropicalExteriorElement out;
  const std::string kind = string_value(field(j, "semifield"), "semifield");
  if (kind == "boolean") {
    out.kind = oracles::TropicalKind::kBoolean;
  } else if (kind == "maxplus") {
    out.kind = oracles::TropicalKind::kMaxPlus;
  } else {
    fail("unknown semifield '" + kind + "'");
  }
  out.n = dimension_field(j);
  for (const Json& t : field(j, "terms")) {
    Rational v = rational_value(field(t, "coeff"));
    if (out.kind == oracles::TropicalKind::kBoolean && v != Rational(1)) fail("boolean coefficients must be 1");
    out.terms[index_set_from_json(field(t, "I"))] = v;
  }
  return out;
}

std::vector<std::vector<Rational>> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> out;
  for (const Json& row : j) {
    if (!row.is_array()) fail("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const Json& e : row) r.push_back(rational_value(e));
    out.push_back(std::move(r));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace obext::json
