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

#include "obext/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "obext/closure.hpp"
#include "obext/differential.hpp"
#include "obext/error.hpp"
#include "obext/exterior.hpp"
#include "obext/json_io.hpp"
#include "obext/matroid.hpp"

namespace obext::cli {

namespace {

using json::Json;

struct Request {
  std::string subcommand;
  std::string preset;
  std::string input = "-";
  std::string output = "-";
  std::size_t budget = ClosureBudget{}.max_states;
  std::uint64_t cap = EnumerateOptions{}.cap;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> positionals;
};

struct Outcome {
  Json result;
  int status = kExitOk;
};

Json read_payload(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream file(source);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + source + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// The --preset flag wins over a "preset" field of the payload.
BlueprintPtr resolve_preset(const Request& req, const Json* payload) {
  if (!req.preset.empty()) {
    const std::string& p = req.preset;
    if (!p.empty() && p.front() == '{') {
      try {
        return make_preset(json::preset_from_json(Json::parse(p)));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParse, e.what());
      }
    }
    return make_preset(parse_preset_name(p));
  }
  if (payload && payload->is_object() && payload->contains("preset")) {
    return make_preset(json::preset_from_json(payload->at("preset")));
  }
  throw Error(ErrorCode::kInvalidPreset, "no preset given (use --preset or a \"preset\" field)");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return j.at(key);
}

Json with_preset(const Blueprint& bp, const Json& body) {
  Json out{{"preset", json::preset_to_json(bp.descriptor())}};
  for (const auto& [k, v] : body.items()) {
    if (k != "preset") out[k] = v;
  }
  return out;
}

int report_status(const PluckerReport& r) {
  switch (r.verdict) {
    case Verdict::kValid:
      return kExitOk;
    case Verdict::kInvalid:
      return kExitVerdictFalse;
    case Verdict::kIndeterminate:
      return kExitUnknown;
  }
  return kExitVerdictFalse;
}

Outcome cmd_wedge(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  const ExteriorElement x = json::exterior_from_json(*bp, member(payload, "x"));
  const ExteriorElement y = json::exterior_from_json(*bp, member(payload, "y"));
  return {with_preset(*bp, json::exterior_to_json(*bp, wedge(x, y)))};
}

Outcome cmd_check_gp(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  const PluckerReport r = is_gp_function(*bp, json::gp_from_json(*bp, payload));
  return {with_preset(*bp, json::report_to_json(*bp, r)), report_status(r)};
}

Outcome cmd_check_plucker(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  const ExteriorElement v = json::exterior_from_json(*bp, payload);
  PluckerReport r;
  if (payload.contains("d")) {
    if (!payload.at("d").is_number_integer()) throw Error(ErrorCode::kParse, "field 'd' must be an integer");
    r = is_plucker_vector(*bp, v, payload.at("d").get<int>());
  } else {
    r = is_plucker_vector(*bp, v);
  }
  return {with_preset(*bp, json::report_to_json(*bp, r)), report_status(r)};
}

int parse_count(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be an integer, got '" + text + "'");
}

Outcome cmd_enumerate_gp(Request req) {
  const auto& pos = req.positionals;
  if (pos.size() == 3) {
    req.preset = pos[0];
  } else if (pos.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "usage: enumerate-gp [preset] n d");
  }
  const int n = parse_count(pos[pos.size() - 2], "n");
  const int d = parse_count(pos[pos.size() - 1], "d");
  const BlueprintPtr bp = resolve_preset(req, nullptr);
  const std::vector<GPFunction> classes = enumerate_gp(*bp, n, d, {.cap = req.cap, .jobs = req.jobs});
  Json list = Json::array();
  for (const GPFunction& f : classes) list.push_back(json::gp_to_json(*bp, f));
  Json out{{"preset", json::preset_to_json(bp->descriptor())},
           {"n", n},
           {"d", d},
           {"count", classes.size()},
           {"classes", list}};
  return {out};
}

Outcome cmd_realize(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  return {json::gp_to_json(*bp, realize_from_matrix(*bp, json::matrix_from_json(member(payload, "matrix"))))};
}

Outcome cmd_hull(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  return {json::classical_to_json(hull_realize(*bp, json::exterior_from_json(*bp, payload)))};
}

Outcome cmd_idem(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  return {json::tropical_to_json(idem_realize(*bp, json::exterior_from_json(*bp, payload)))};
}

Json suite_to_json(const SuiteResult& s) {
  Json j{{"name", s.name}, {"cases", s.cases}, {"mismatches", s.mismatches}};
  if (!s.first_mismatch.empty()) j["first_mismatch"] = s.first_mismatch;
  return j;
}

Outcome cmd_oracle_compare(const Request& req) {
  constexpr int kSamples = 200;
  Rng rng(req.seed);
  std::vector<SuiteResult> suites;
  for (const PresetDescriptor& d : {PresetDescriptor::gf(2), PresetDescriptor::gf(3), PresetDescriptor::rational()}) {
    suites.push_back(hull_suite(*make_preset(d), 4, kSamples, rng));
  }
  for (const PresetDescriptor& d : {PresetDescriptor::boolean(), PresetDescriptor::maxplus()}) {
    suites.push_back(idem_suite(*make_preset(d), 4, kSamples, rng));
  }
  for (const PresetDescriptor& d : {PresetDescriptor::f1pm(), PresetDescriptor::gf(2), PresetDescriptor::gf(3),
                                    PresetDescriptor::rational(), PresetDescriptor::boolean(),
                                    PresetDescriptor::maxplus()}) {
    suites.push_back(cryptomorphism_suite(*make_preset(d), 5, 3, kSamples, rng));
  }
  suites.push_back(boolean_matroid_suite(4, 2, req.jobs));
  suites.push_back(boolean_matroid_suite(5, 2, req.jobs));
  suites.push_back(maxplus_suite(5, 2, kSamples, rng));
  suites.push_back(field_count_suite(2, 3, 1, req.jobs));
  suites.push_back(field_count_suite(2, 4, 2, req.jobs));

  Json list = Json::array();
  std::uint64_t mismatches = 0;
  for (const SuiteResult& s : suites) {
    list.push_back(suite_to_json(s));
    mismatches += s.mismatches;
  }
  Json out{{"seed", req.seed}, {"suites", list}, {"mismatches", mismatches}};
  return {out, mismatches == 0 ? kExitOk : kExitVerdictFalse};
}

Outcome cmd_closure(const Request& req, std::istream& in) {
  const Json payload = read_payload(req.input, in);
  const BlueprintPtr bp = resolve_preset(req, &payload);
  const FormalSum lhs = json::sum_from_json(*bp, member(payload, "lhs"));
  const FormalSum rhs = json::sum_from_json(*bp, member(payload, "rhs"));
  ClosureBudget budget;
  budget.max_states = req.budget;
  if (payload.contains("max_terms")) {
    if (!payload.at("max_terms").is_number_unsigned()) throw Error(ErrorCode::kParse, "max_terms must be a count");
    budget.max_terms = payload.at("max_terms").get<std::size_t>();
  }
  RelationSet gens;
  if (payload.contains("generators")) {
    for (const Json& g : payload.at("generators")) {
      gens.add(Relation{json::sum_from_json(*bp, member(g, "lhs")), json::sum_from_json(*bp, member(g, "rhs"))});
    }
  } else {
    gens = default_relations(*bp, lhs, rhs);
  }
  const Decision d = closure_decide_leq(*bp, gens, lhs, rhs, budget);
  Json out{{"preset", json::preset_to_json(bp->descriptor())},
           {"lhs", json::sum_to_json(*bp, lhs)},
           {"rhs", json::sum_to_json(*bp, rhs)},
           {"decision", std::string(decision_name(d))}};
  return {out, d == Decision::kHolds ? kExitOk : kExitUnknown};
}

Json error_object(std::string_view code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(code)}, {"message", message}}}};
}

void emit(const Request& req, const Json& j, std::ostream& out) {
  const std::string text = json::dump(j);
  if (req.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(req.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + req.output + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Request req;
  CLI::App app{"Exterior algebra and matroid toolkit over ordered blueprints", "obext"};
  app.require_subcommand(1, 1);
  app.add_option("--preset", req.preset, "Preset name (f1pm, gf3, rational, boolean, maxplus) or JSON descriptor");
  app.add_option("--in", req.input, "Payload path, inline JSON, or - for stdin");
  app.add_option("--out", req.output, "Result path or - for stdout");
  app.add_option("--budget", req.budget, "Closure search state budget")->check(CLI::PositiveNumber);
  app.add_option("--cap", req.cap, "Enumeration candidate cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs", req.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", req.seed, "Seed for randomized suites");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"wedge", "Product of two exterior elements {\"x\", \"y\"}"},
      {"check-gp", "Grassmann-Plucker test of a GP function"},
      {"check-plucker", "Plucker vector test of an exterior element"},
      {"enumerate-gp", "Canonical GP classes: enumerate-gp [preset] n d"},
      {"realize", "GP function of a matrix {\"matrix\": [[...]]}"},
      {"hull", "Classical realization of an exterior element"},
      {"idem", "Tropical realization of an exterior element"},
      {"oracle-compare", "Differential suites against the reference implementations"},
      {"closure", "Closure-engine derivation of {\"lhs\", \"rhs\"}"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (std::string_view(name) == "enumerate-gp") sub->add_option("args", req.positionals, "[preset] n d");
    sub->callback([&req, n = std::string(name)] { req.subcommand = n; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << json::dump(error_object("invalid_argument", e.what()));
    return kExitInputError;
  }

  try {
    Outcome o;
    const std::string& s = req.subcommand;
    if (s == "wedge") {
      o = cmd_wedge(req, in);
    } else if (s == "check-gp") {
      o = cmd_check_gp(req, in);
    } else if (s == "check-plucker") {
      o = cmd_check_plucker(req, in);
    } else if (s == "enumerate-gp") {
      o = cmd_enumerate_gp(req);
    } else if (s == "realize") {
      o = cmd_realize(req, in);
    } else if (s == "hull") {
      o = cmd_hull(req, in);
    } else if (s == "idem") {
      o = cmd_idem(req, in);
    } else if (s == "oracle-compare") {
      o = cmd_oracle_compare(req);
    } else {
      o = cmd_closure(req, in);
    }
    emit(req, o.result, out);
    return o.status;
  } catch (const Error& e) {
    out << json::dump(error_object(error_code_name(e.code()), e.what()));
  } catch (const nlohmann::json::exception& e) {
    out << json::dump(error_object("parse", e.what()));
  }
  return kExitInputError;
}

}  // namespace obext::cli
