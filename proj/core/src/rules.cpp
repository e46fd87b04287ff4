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

#include "verba/rules.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "verba/error.hpp"
#include "verba/grammar.hpp"

namespace verba {

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::kVerified: return "verified";
    case VerificationStatus::kRefuted: return "refuted";
    case VerificationStatus::kUnverifiable: return "unverifiable";
  }
  return "?";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kNoMatch: return "no-match";
    case Termination::kNoLabel: return "no-label";
    case Termination::kMaxSteps: return "max-steps";
  }
  return "?";
}

std::string instantiate(std::string_view template_text) {
  const auto tokens = tokenize(template_text);
  return detokenize(tokens) + ".";
}

void validate_rule(const RulePair& pair) {
  const auto& name = pair.shape_rule.name;
  if (name.empty()) throw RuleError("rule without a name");
  try {
    (void)find_matches(pair.shape_rule.lhs, pair.shape_rule.lhs);
  } catch (const UnderdeterminedMatchError& e) {
    throw RuleError("rule " + name + ": left-hand side cannot be matched: " + e.what());
  }
  auto check = [&](const std::string& text) {
    try {
      (void)interpret_sentence(text);
    } catch (const Error& e) {
      throw RuleError("rule " + name + ": template \"" + text + "\": " + e.what());
    }
  };
  if (pair.verbal_rule.constructive.empty()) throw RuleError("rule " + name + ": missing constructive template");
  check(pair.verbal_rule.constructive);
  for (const auto& t : pair.verbal_rule.from_above) check(t);
}

void validate_rule_set(std::span<const RulePair> pairs) {
  std::set<std::string> names;
  for (const auto& p : pairs) {
    validate_rule(p);
    if (!names.insert(p.shape_rule.name).second) throw RuleError("duplicate rule name " + p.shape_rule.name);
  }
}

std::vector<Transform> applicable(const ShapeRule& rule, const Shape& s, const MatchOptions& opts) {
  return find_matches(rule.lhs, s, opts);
}

Shape apply(const ShapeRule& rule, const Shape& s, const Transform& t) {
  const Shape placed = t(rule.lhs);
  if (!subshape(placed, s)) throw RuleError("rule " + rule.name + " does not apply under " + to_string(t));
  return sum(difference(s, placed), t(rule.rhs));
}

Binding bind(const ShapeRule& rule, const Shape& after, const Transform& t) {
  Shape placed = t(rule.rhs);
  return {difference(after, placed), std::move(placed)};
}

namespace {

// The shape named by an entity; `coarse` is set when the entity is a part
// (edge, corner, midpoint) of that shape.
std::string entity_shape(const SemStructure& e, bool& coarse) {
  if (e.category() == Category::kShape) return e.word(Slot::kShape);
  coarse = true;
  const SemStructure* shape = e.structure(Slot::kShape);
  return shape ? shape->word(Slot::kShape) : std::string();
}

const Shape& lookup(const Binding& b, const std::string& name) {
  if (name == "shape1") return b.shape1;
  if (name == "shape2") return b.shape2;
  throw CompositionError("unknown shape reference " + name);
}

}  // namespace

Verification verify_sentence(std::string_view sentence, const Binding& binding) {
  Verification v;
  v.sentence = std::string(sentence);
  const SemStructure meaning = interpret_sentence(sentence);
  if (meaning.category() != Category::kSpatialRelation) {
    v.note = "no spatial relation";
    return v;
  }
  const SemStructure* traj = meaning.structure(Slot::kTrajector);
  const SemStructure* land = meaning.structure(Slot::kLandmark);
  const Shape& x = lookup(binding, entity_shape(*traj, v.coarse));
  const Shape& y = lookup(binding, entity_shape(*land, v.coarse));
  const auto rx = extract_regions(x);
  const auto ry = extract_regions(y);
  if (rx.empty() || ry.empty()) {
    v.note = "no closed region";
    return v;
  }
  const RegionRelation r = classify(rx, ry);
  v.relation = r;
  const auto allowed = preposition_relations(meaning.word(Slot::kRelation));
  const bool ok = std::find(allowed.begin(), allowed.end(), r) != allowed.end();
  v.status = ok ? VerificationStatus::kVerified : VerificationStatus::kRefuted;
  return v;
}

DerivationStep step(const RulePair& pair, const Shape& s, const Transform& t) {
  DerivationStep st;
  st.rule = pair.shape_rule.name;
  st.transform = t;
  st.before = s;
  st.after = apply(pair.shape_rule, s, t);
  st.binding = bind(pair.shape_rule, st.after, t);

  st.descriptions.push_back(instantiate(pair.verbal_rule.constructive));
  for (const auto& f : pair.verbal_rule.from_above) st.descriptions.push_back(instantiate(f));
  for (const auto& d : st.descriptions) {
    st.semantics.push_back(interpret_sentence(d));
    st.verification.push_back(verify_sentence(d, st.binding));
  }
  return st;
}

bool check_step(const RulePair& pair, const DerivationStep& st) {
  const Shape placed_lhs = st.transform(pair.shape_rule.lhs);
  const Shape placed_rhs = st.transform(pair.shape_rule.rhs);
  if (!subshape(placed_lhs, st.before)) return false;
  if (!equal(st.after, sum(difference(st.before, placed_lhs), placed_rhs))) return false;
  if (!equal(st.binding.shape2, placed_rhs)) return false;
  if (!equal(st.binding.shape1, difference(st.after, placed_rhs))) return false;
  return equal(sum(st.binding.shape1, st.binding.shape2), st.after);
}

namespace {

struct Candidate {
  std::size_t rule;
  Transform t;
};

const RulePair& find_rule(std::span<const RulePair> pairs, const std::string& name, std::size_t& index) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].shape_rule.name == name) {
      index = i;
      return pairs[i];
    }
  }
  throw RuleError("script names unknown rule " + name);
}

}  // namespace

Derivation derive(std::span<const RulePair> pairs, const Shape& initial, const Strategy& strategy,
                  std::size_t max_steps, const MatchOptions& opts) {
  Derivation d;
  d.initial = initial;
  std::mt19937_64 rng(strategy.seed);
  Shape current = initial;

  for (;;) {
    if (d.steps.size() >= max_steps) {
      d.termination = Termination::kMaxSteps;
      break;
    }
    if (current.labels().empty()) {
      d.termination = Termination::kNoLabel;
      break;
    }

    std::optional<Candidate> chosen;
    switch (strategy.kind) {
      case Strategy::Kind::kFirst:
        for (std::size_t i = 0; i < pairs.size() && !chosen; ++i) {
          auto ms = applicable(pairs[i].shape_rule, current, opts);
          if (!ms.empty()) chosen = Candidate{i, ms.front()};
        }
        break;
      case Strategy::Kind::kRandom: {
        std::vector<Candidate> all;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          for (auto& t : applicable(pairs[i].shape_rule, current, opts)) all.push_back({i, t});
        }
        // Modulo rather than a std distribution: same picks on every
        // standard library.
        if (!all.empty()) chosen = all[static_cast<std::size_t>(rng() % all.size())];
        break;
      }
      case Strategy::Kind::kScript: {
        const std::size_t k = d.steps.size();
        if (k >= strategy.script.size()) {
          d.termination = Termination::kMaxSteps;
          return d;
        }
        const auto& choice = strategy.script[k];
        std::size_t index = 0;
        const RulePair& pair = find_rule(pairs, choice.rule, index);
        auto ms = applicable(pair.shape_rule, current, opts);
        if (ms.empty()) break;
        if (choice.match >= ms.size()) {
          throw RuleError("script step " + std::to_string(k + 1) + " asks for match " + std::to_string(choice.match) +
                          " of rule " + choice.rule + ", which has " + std::to_string(ms.size()));
        }
        chosen = Candidate{index, ms[choice.match]};
        break;
      }
    }
    if (!chosen) {
      d.termination = Termination::kNoMatch;
      break;
    }
    DerivationStep st = step(pairs[chosen->rule], current, chosen->t);
    st.index = d.steps.size() + 1;
    current = st.after;
    d.steps.push_back(std::move(st));
  }
  return d;
}

}  // namespace verba
