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

#ifndef VERBA_RULES_IO_HPP_
#define VERBA_RULES_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verba/rules.hpp"

namespace verba {

// Rule documents:
//   {"name": "r1", "lhs": <shape>, "rhs": <shape>,
//    "verbal": {"constructive": "...", "from_above": ["...", ...]}}
// A rule file holds one such object or an array of them.
RulePair rule_from_json(const nlohmann::json& doc);
nlohmann::json rule_to_json(const RulePair& pair);

// Parses and validates. Throws FormatError or RuleError.
std::vector<RulePair> rules_from_json(const nlohmann::json& doc);
std::vector<RulePair> load_rules(const std::filesystem::path& path);

// Script documents: [{"rule": "r1", "match": 0}, ...].
std::vector<ScriptChoice> script_from_json(const nlohmann::json& doc);
std::vector<ScriptChoice> load_script(const std::filesystem::path& path);

nlohmann::json verification_to_json(const Verification& v);
nlohmann::json step_to_json(const DerivationStep& st);
// {"initial": ..., "termination": ..., "steps": [...]}
nlohmann::json derivation_to_json(const Derivation& d);
// Canonical trace bytes: two-space indentation and a final newline.
std::string trace_text(const Derivation& d);

}  // namespace verba

#endif  // VERBA_RULES_IO_HPP_
