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

#ifndef VERBA_RULES_HPP_
#define VERBA_RULES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verba/region.hpp"
#include "verba/semantics.hpp"
#include "verba/shape.hpp"
#include "verba/transform.hpp"

namespace verba {

// a -> b.
struct ShapeRule {
  std::string name;
  Shape lhs;
  Shape rhs;
};

// Description templates with <shape1>/<shape2> references.
struct VerbalRule {
  std::string constructive;
  std::vector<std::string> from_above;
};

struct RulePair {
  ShapeRule shape_rule;
  VerbalRule verbal_rule;
};

// Load-time checks: a matchable lhs, templates that parse and interpret.
// Throws RuleError.
void validate_rule(const RulePair& pair);
void validate_rule_set(std::span<const RulePair> pairs);

std::vector<Transform> applicable(const ShapeRule& rule, const Shape& s, const MatchOptions& opts = {});

// (s - t(lhs)) + t(rhs). Throws RuleError unless t(lhs) is a subshape of s.
Shape apply(const ShapeRule& rule, const Shape& s, const Transform& t);

struct Binding {
  Shape shape1;
  Shape shape2;
};

// shape1 = after - t(rhs), shape2 = t(rhs).
Binding bind(const ShapeRule& rule, const Shape& after, const Transform& t);

enum class VerificationStatus { kVerified, kRefuted, kUnverifiable };
std::string_view to_string(VerificationStatus s);

struct Verification {
  std::string sentence;
  VerificationStatus status = VerificationStatus::kUnverifiable;
  std::optional<RegionRelation> relation;
  // Trajector or landmark names an edge/corner/midpoint; the check ran on
  // the whole bound shapes.
  bool coarse = false;
  std::string note;
};

// Interprets the sentence, resolves shape references through the binding
// and checks the preposition against the region relation.
Verification verify_sentence(std::string_view sentence, const Binding& binding);

// Template text as emitted: normalized tokens plus a final period.
std::string instantiate(std::string_view template_text);

struct DerivationStep {
  std::size_t index = 0;  // 1-based
  std::string rule;
  Transform transform;
  Shape before;
  Shape after;
  Binding binding;
  std::vector<std::string> descriptions;  // constructive first
  std::vector<SemStructure> semantics;
  std::vector<Verification> verification;
};

DerivationStep step(const RulePair& pair, const Shape& s, const Transform& t);

// Recomputes the rewrite and binding invariants of a recorded step.
bool check_step(const RulePair& pair, const DerivationStep& st);

enum class Termination { kNoMatch, kNoLabel, kMaxSteps };
std::string_view to_string(Termination t);

struct Derivation {
  Shape initial;
  std::vector<DerivationStep> steps;
  Termination termination = Termination::kMaxSteps;
};

struct ScriptChoice {
  std::string rule;
  std::size_t match = 0;
};

struct Strategy {
  enum class Kind { kFirst, kRandom, kScript };
  Kind kind = Kind::kFirst;
  std::uint64_t seed = 0;
  std::vector<ScriptChoice> script;

  static Strategy first() { return {}; }
  static Strategy random(std::uint64_t seed) { return {Kind::kRandom, seed, {}}; }
  static Strategy scripted(std::vector<ScriptChoice> choices) { return {Kind::kScript, 0, std::move(choices)}; }
};

// Runs until max_steps, a shape without labels, or no applicable rule,
// checked in that order before every step. A script that runs out stops
// the run as max-steps; a script choice naming an unknown rule or match
// throws RuleError.
Derivation derive(std::span<const RulePair> pairs, const Shape& initial, const Strategy& strategy,
                  std::size_t max_steps, const MatchOptions& opts = {});

}  // namespace verba

#endif  // VERBA_RULES_HPP_
