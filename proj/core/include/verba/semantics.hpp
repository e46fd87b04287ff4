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

#ifndef VERBA_SEMANTICS_HPP_
#define VERBA_SEMANTICS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "verba/grammar.hpp"

namespace verba {

enum class Category { kShape, kAttribute, kDirection, kAction, kSpatialRelation };

// Declaration order is the canonical serialization order.
enum class Slot {
  kRelation,
  kRegion,
  kAction,
  kTrajector,
  kLandmark,
  kSelect,
  kShape,
  kAttribute,
  kDirection,
  kComparative,
  kTense,
};

std::string_view to_string(Category c);
std::string_view to_string(Slot s);
std::optional<Category> category_from_string(std::string_view s);
std::optional<Slot> slot_from_string(std::string_view s);

class SemStructure;
using SemPtr = std::shared_ptr<const SemStructure>;
using SemValue = std::variant<std::string, SemPtr>;

// Typed attribute-value structure. Equality compares slot sets
// recursively, independent of construction order.
class SemStructure {
 public:
  explicit SemStructure(Category c) : category_(c) {}

  Category category() const { return category_; }

  SemStructure& set(Slot s, std::string word);
  SemStructure& set(Slot s, const char* word);
  SemStructure& set(Slot s, SemStructure value);
  SemStructure& set(Slot s, SemValue value);
  SemStructure& erase(Slot s);

  bool has(Slot s) const;
  const SemValue* get(Slot s) const;
  // Word held in a slot, or empty when missing or structured.
  std::string word(Slot s) const;
  // Structure held in a slot, or null.
  const SemStructure* structure(Slot s) const;

  const std::vector<std::pair<Slot, SemValue>>& slots() const { return slots_; }

  friend bool operator==(const SemStructure& a, const SemStructure& b);

 private:
  Category category_;
  std::vector<std::pair<Slot, SemValue>> slots_;  // sorted by slot
};

SemStructure shape_ref(std::string name);

// Throws CompositionError if a slot invariant of the category is violated.
void validate(const SemStructure& s);

// Canonical text, e.g.
//   SPATIAL_RELATION[relation=at, region=ttp-nttp, action=ACTION[...], ...]
std::string serialize(const SemStructure& s);
// Inverse of serialize. Throws FormatError.
SemStructure deserialize(std::string_view text);
// Positional bracket-list rendering in the style of the original printouts.
std::string serialize_positional(const SemStructure& s);
nlohmann::json to_json(const SemStructure& s);

// Result of composing a subtree: nothing (function words), a bare word, a
// finished structure, or a curried function still waiting for arguments.
struct SemanticValue {
  struct Lambda {
    std::size_t arity;
    std::function<SemanticValue(std::vector<SemanticValue>)> body;
  };
  std::variant<std::monostate, std::string, SemStructure, Lambda> value;
};

// Applies a pending function. Throws CompositionError on arity or type
// mismatch.
SemanticValue apply(const SemanticValue& f, std::vector<SemanticValue> args);

// Bottom-up composition over a complete Start-rooted parse.
SemStructure interpret(const ParseTree& t, const Grammar& g = Grammar::builtin());
// tokenize + parse (first parse) + interpret.
SemStructure interpret_sentence(std::string_view sentence);

enum class Style { kConstructive, kFromAbove };
std::string_view to_string(Style s);
std::optional<Style> style_from_string(std::string_view s);

// Sentence for a SPATIAL_RELATION or participant-bearing ACTION.
// From-above statements use "is"; constructive ones the structure's verb,
// "draw" when it is "is". Throws RealizationError.
std::string realize(const SemStructure& s, Style style);

// Rewrites a sentence into the target style, keeping the wording of both
// participant noun phrases. Idempotent on sentences already in style.
std::string convert_style(std::string_view sentence, Style target);

}  // namespace verba

#endif  // VERBA_SEMANTICS_HPP_
