// Copyright 2026 The Verba Authors.
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

#include "verba/rules_io.hpp"

#include "verba/error.hpp"
#include "verba/shape_io.hpp"

namespace verba {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string string_field(const json& doc, const char* key, const std::string& where) {
  const json& v = field(doc, key, where);
  if (!v.is_string()) throw FormatError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

RulePair rule_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("rule must be a JSON object");
  RulePair p;
  p.shape_rule.name = string_field(doc, "name", "rule");
  const std::string where = "rule " + p.shape_rule.name;
  p.shape_rule.lhs = shape_from_json(field(doc, "lhs", where));
  p.shape_rule.rhs = shape_from_json(field(doc, "rhs", where));
  const json& verbal = field(doc, "verbal", where);
  if (!verbal.is_object()) throw FormatError(where + ": \"verbal\" must be an object");
  p.verbal_rule.constructive = string_field(verbal, "constructive", where);
  if (auto it = verbal.find("from_above"); it != verbal.end()) {
    if (!it->is_array()) throw FormatError(where + ": \"from_above\" must be an array");
    for (const auto& t : *it) {
      if (!t.is_string()) throw FormatError(where + ": from_above entries must be strings");
      p.verbal_rule.from_above.push_back(t.get<std::string>());
    }
  }
  return p;
}

json rule_to_json(const RulePair& p) {
  return {{"name", p.shape_rule.name},
          {"lhs", shape_to_json(p.shape_rule.lhs)},
          {"rhs", shape_to_json(p.shape_rule.rhs)},
          {"verbal", {{"constructive", p.verbal_rule.constructive}, {"from_above", p.verbal_rule.from_above}}}};
}

std::vector<RulePair> rules_from_json(const json& doc) {
  std::vector<RulePair> out;
  if (doc.is_array()) {
    for (const auto& r : doc) out.push_back(rule_from_json(r));
  } else {
    out.push_back(rule_from_json(doc));
  }
  validate_rule_set(out);
  return out;
}

std::vector<RulePair> load_rules(const std::filesystem::path& path) { return rules_from_json(read_json_file(path)); }

std::vector<ScriptChoice> script_from_json(const json& doc) {
  if (!doc.is_array()) throw FormatError("script must be a JSON array");
  std::vector<ScriptChoice> out;
  for (const auto& c : doc) {
    if (!c.is_object()) throw FormatError("script entry must be an object");
    ScriptChoice s;
    s.rule = string_field(c, "rule", "script entry");
    const json& m = field(c, "match", "script entry");
    if (!m.is_number_unsigned() && !(m.is_number_integer() && m.get<long long>() >= 0)) {
      throw FormatError("script entry: \"match\" must be a non-negative integer");
    }
    s.match = m.get<std::size_t>();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ScriptChoice> load_script(const std::filesystem::path& path) {
  return script_from_json(read_json_file(path));
}

json verification_to_json(const Verification& v) {
  json out = {{"sentence", v.sentence},
              {"status", std::string(to_string(v.status))},
              {"relation", v.relation ? json(std::string(to_string(*v.relation))) : json(nullptr)},
              {"coarse", v.coarse}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json step_to_json(const DerivationStep& st) {
  json semantics = json::array();
  for (const auto& s : st.semantics) semantics.push_back(serialize(s));
  json verification = json::array();
  for (const auto& v : st.verification) verification.push_back(verification_to_json(v));
  return {{"step", st.index},
          {"rule", st.rule},
          {"transform", transform_to_json(st.transform)},
          {"shape_before", shape_to_json(st.before)},
          {"shape_after", shape_to_json(st.after)},
          {"binding", {{"shape1", shape_to_json(st.binding.shape1)}, {"shape2", shape_to_json(st.binding.shape2)}}},
          {"descriptions", st.descriptions},
          {"semantics", std::move(semantics)},
          {"verification", std::move(verification)}};
}

json derivation_to_json(const Derivation& d) {
  json steps = json::array();
  for (const auto& st : d.steps) steps.push_back(step_to_json(st));
  return {{"initial", shape_to_json(d.initial)},
          {"termination", std::string(to_string(d.termination))},
          {"steps", std::move(steps)}};
}

std::string trace_text(const Derivation& d) { return derivation_to_json(d).dump(2) + "\n"; }

}  // namespace verba
