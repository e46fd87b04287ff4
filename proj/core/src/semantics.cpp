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

#include "verba/semantics.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "verba/error.hpp"
#include "verba/region.hpp"

namespace verba {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 5> kCategoryNames = {{
    {Category::kShape, "SHAPE"},
    {Category::kAttribute, "ATTRIBUTE"},
    {Category::kDirection, "DIRECTION"},
    {Category::kAction, "ACTION"},
    {Category::kSpatialRelation, "SPATIAL_RELATION"},
}};

constexpr std::array<std::pair<Slot, std::string_view>, 11> kSlotNames = {{
    {Slot::kRelation, "relation"},
    {Slot::kRegion, "region"},
    {Slot::kAction, "action"},
    {Slot::kTrajector, "trajector"},
    {Slot::kLandmark, "landmark"},
    {Slot::kSelect, "select"},
    {Slot::kShape, "shape"},
    {Slot::kAttribute, "attribute"},
    {Slot::kDirection, "direction"},
    {Slot::kComparative, "comparative"},
    {Slot::kTense, "tense"},
}};

bool one_of(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

}  // namespace

std::string_view to_string(Category c) {
  for (const auto& [k, name] : kCategoryNames) {
    if (k == c) return name;
  }
  return "?";
}

std::string_view to_string(Slot s) {
  for (const auto& [k, name] : kSlotNames) {
    if (k == s) return name;
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view s) {
  for (const auto& [k, name] : kCategoryNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

std::optional<Slot> slot_from_string(std::string_view s) {
  for (const auto& [k, name] : kSlotNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SemStructure

SemStructure& SemStructure::set(Slot s, SemValue value) {
  auto it = std::lower_bound(slots_.begin(), slots_.end(), s,
                             [](const auto& entry, Slot key) { return entry.first < key; });
  if (it != slots_.end() && it->first == s) {
    it->second = std::move(value);
  } else {
    slots_.insert(it, {s, std::move(value)});
  }
  return *this;
}

SemStructure& SemStructure::set(Slot s, std::string word) { return set(s, SemValue(std::move(word))); }

SemStructure& SemStructure::set(Slot s, const char* word) { return set(s, SemValue(std::string(word))); }

SemStructure& SemStructure::set(Slot s, SemStructure value) {
  return set(s, SemValue(std::make_shared<const SemStructure>(std::move(value))));
}

SemStructure& SemStructure::erase(Slot s) {
  slots_.erase(std::remove_if(slots_.begin(), slots_.end(), [&](const auto& e) { return e.first == s; }),
               slots_.end());
  return *this;
}

const SemValue* SemStructure::get(Slot s) const {
  for (const auto& [k, v] : slots_) {
    if (k == s) return &v;
  }
  return nullptr;
}

bool SemStructure::has(Slot s) const { return get(s) != nullptr; }

std::string SemStructure::word(Slot s) const {
  const SemValue* v = get(s);
  if (v == nullptr) return {};
  if (const auto* w = std::get_if<std::string>(v)) return *w;
  return {};
}

const SemStructure* SemStructure::structure(Slot s) const {
  const SemValue* v = get(s);
  if (v == nullptr) return nullptr;
  if (const auto* p = std::get_if<SemPtr>(v)) return p->get();
  return nullptr;
}

bool operator==(const SemStructure& a, const SemStructure& b) {
  if (a.category_ != b.category_ || a.slots_.size() != b.slots_.size()) return false;
  for (std::size_t i = 0; i < a.slots_.size(); ++i) {
    const auto& [sa, va] = a.slots_[i];
    const auto& [sb, vb] = b.slots_[i];
    if (sa != sb || va.index() != vb.index()) return false;
    if (const auto* wa = std::get_if<std::string>(&va)) {
      if (*wa != std::get<std::string>(vb)) return false;
    } else if (!(*std::get<SemPtr>(va) == *std::get<SemPtr>(vb))) {
      return false;
    }
  }
  return true;
}

SemStructure shape_ref(std::string name) {
  SemStructure s(Category::kShape);
  s.set(Slot::kShape, std::move(name));
  return s;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

[[noreturn]] void invalid(const SemStructure& s, const std::string& why) {
  throw CompositionError("invalid " + std::string(to_string(s.category())) + ": " + why);
}

void expect_only(const SemStructure& s, std::initializer_list<Slot> allowed) {
  for (const auto& [slot, v] : s.slots()) {
    if (std::find(allowed.begin(), allowed.end(), slot) == allowed.end()) {
      invalid(s, "unexpected slot " + std::string(to_string(slot)));
    }
  }
}

void expect_word(const SemStructure& s, Slot slot, std::initializer_list<std::string_view> values) {
  const SemValue* v = s.get(slot);
  if (v == nullptr) invalid(s, "missing slot " + std::string(to_string(slot)));
  const auto* w = std::get_if<std::string>(v);
  if (w == nullptr || !one_of(*w, values)) invalid(s, "bad value in slot " + std::string(to_string(slot)));
}

// A slot holding either a word from `values` or a structure of category `c`.
void expect_word_or(const SemStructure& s, Slot slot, Category c, std::initializer_list<std::string_view> values) {
  const SemValue* v = s.get(slot);
  if (v == nullptr) return;
  if (const auto* w = std::get_if<std::string>(v)) {
    if (!one_of(*w, values)) invalid(s, "bad word in slot " + std::string(to_string(slot)));
    return;
  }
  const SemStructure& sub = *std::get<SemPtr>(*v);
  if (sub.category() != c) invalid(s, "slot " + std::string(to_string(slot)) + " holds the wrong category");
  validate(sub);
}

void expect_structure(const SemStructure& s, Slot slot, std::initializer_list<Category> cats, bool required) {
  const SemValue* v = s.get(slot);
  if (v == nullptr) {
    if (required) invalid(s, "missing slot " + std::string(to_string(slot)));
    return;
  }
  const auto* p = std::get_if<SemPtr>(v);
  if (p == nullptr || std::find(cats.begin(), cats.end(), (*p)->category()) == cats.end()) {
    invalid(s, "slot " + std::string(to_string(slot)) + " holds the wrong kind of value");
  }
  validate(**p);
}

constexpr std::initializer_list<Category> kEntities = {Category::kShape, Category::kAttribute, Category::kDirection};

}  // namespace

void validate(const SemStructure& s) {
  switch (s.category()) {
    case Category::kShape:
      expect_only(s, {Slot::kShape});
      expect_word(s, Slot::kShape, {"shape1", "shape2"});
      break;
    case Category::kAttribute:
      expect_only(s, {Slot::kAttribute, Slot::kSelect, Slot::kShape, Slot::kDirection});
      if (!s.has(Slot::kAttribute)) invalid(s, "missing slot attribute");
      expect_word_or(s, Slot::kAttribute, Category::kAttribute, {"edge", "corner", "midpoint"});
      if (s.has(Slot::kSelect)) expect_word(s, Slot::kSelect, {"edge", "corner", "midpoint"});
      expect_structure(s, Slot::kShape, {Category::kShape}, false);
      expect_word_or(s, Slot::kDirection, Category::kDirection, {"right", "left", "top", "bottom"});
      break;
    case Category::kDirection:
      expect_only(s, {Slot::kDirection, Slot::kAttribute, Slot::kShape, Slot::kComparative});
      if (!s.has(Slot::kDirection) && !s.has(Slot::kAttribute)) invalid(s, "needs direction or attribute");
      expect_word_or(s, Slot::kDirection, Category::kDirection, {"right", "left", "top", "bottom"});
      expect_word_or(s, Slot::kAttribute, Category::kAttribute, {"edge", "corner", "midpoint"});
      expect_structure(s, Slot::kShape, {Category::kShape}, false);
      if (s.has(Slot::kComparative)) expect_word(s, Slot::kComparative, {"top", "bottom", "upper", "lower"});
      break;
    case Category::kAction:
      expect_only(s, {Slot::kAction, Slot::kTense, Slot::kTrajector, Slot::kLandmark});
      expect_word(s, Slot::kAction, {"is", "draw", "add", "subtract", "replace"});
      expect_word(s, Slot::kTense, {"present"});
      expect_structure(s, Slot::kTrajector, kEntities, false);
      expect_structure(s, Slot::kLandmark, kEntities, false);
      break;
    case Category::kSpatialRelation: {
      expect_only(s, {Slot::kRelation, Slot::kRegion, Slot::kAction, Slot::kTrajector, Slot::kLandmark});
      expect_word(s, Slot::kRelation, {"at", "on", "in"});
      expect_word(s, Slot::kRegion, {"ttp-nttp", "ec-ttp", "ec-ttp-nttp"});
      if (s.word(Slot::kRegion) != preposition_region(s.word(Slot::kRelation))) {
        invalid(s, "region does not match relation");
      }
      expect_structure(s, Slot::kAction, {Category::kAction}, true);
      expect_structure(s, Slot::kTrajector, kEntities, true);
      expect_structure(s, Slot::kLandmark, kEntities, true);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Text forms

std::string serialize(const SemStructure& s) {
  std::string out(to_string(s.category()));
  out += '[';
  bool first = true;
  for (const auto& [slot, v] : s.slots()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(slot);
    out += '=';
    if (const auto* w = std::get_if<std::string>(&v)) {
      out += *w;
    } else {
      out += serialize(*std::get<SemPtr>(v));
    }
  }
  return out + ']';
}

namespace {

class StructureReader {
 public:
  explicit StructureReader(std::string_view text) : text_(text) {}

  SemStructure read_all() {
    SemStructure s = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("cannot read structure at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-')) {
      ++pos_;
    }
    if (begin == pos_) fail("expected a name");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  SemStructure read() {
    const std::string cat = name();
    const auto c = category_from_string(cat);
    if (!c) fail("unknown category " + cat);
    SemStructure s(*c);
    expect('[');
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return s;
    }
    for (;;) {
      const std::string slot_name = name();
      const auto slot = slot_from_string(slot_name);
      if (!slot) fail("unknown slot " + slot_name);
      expect('=');
      skip_space();
      const std::size_t save = pos_;
      const std::string word = name();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '[') {
        pos_ = save;
        s.set(*slot, read());
      } else {
        s.set(*slot, word);
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return s;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Python-style string literal.
std::string py_repr(const std::string& s) {
  if (s.find('\'') != std::string::npos && s.find('"') == std::string::npos) return "\"" + s + "\"";
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

std::vector<Slot> positional_order(const SemStructure& s) {
  switch (s.category()) {
    case Category::kSpatialRelation:
      return {Slot::kRelation, Slot::kTrajector, Slot::kRegion, Slot::kLandmark, Slot::kAction};
    case Category::kAction:
      if (s.has(Slot::kTrajector) || s.has(Slot::kLandmark)) return {Slot::kAction, Slot::kTrajector, Slot::kLandmark};
      return {Slot::kAction, Slot::kTense};
    case Category::kShape:
      return {Slot::kShape};
    case Category::kAttribute:
      return {Slot::kSelect, Slot::kAttribute, Slot::kDirection, Slot::kShape};
    case Category::kDirection:
      return {Slot::kAttribute, Slot::kComparative, Slot::kDirection, Slot::kShape};
  }
  return {};
}

}  // namespace

SemStructure deserialize(std::string_view text) { return StructureReader(text).read_all(); }

std::string serialize_positional(const SemStructure& s) {
  std::string out(to_string(s.category()));
  out += '[';
  bool first = true;
  for (Slot slot : positional_order(s)) {
    const SemValue* v = s.get(slot);
    if (v == nullptr) continue;
    if (!first) out += ", ";
    first = false;
    if (const auto* w = std::get_if<std::string>(v)) {
      out += py_repr(*w);
    } else {
      out += py_repr(serialize_positional(*std::get<SemPtr>(*v)));
    }
  }
  return out + ']';
}

nlohmann::json to_json(const SemStructure& s) {
  nlohmann::json attrs = nlohmann::json::object();
  for (const auto& [slot, v] : s.slots()) {
    const std::string key(to_string(slot));
    if (const auto* w = std::get_if<std::string>(&v)) {
      attrs[key] = *w;
    } else {
      attrs[key] = to_json(*std::get<SemPtr>(v));
    }
  }
  return {{"category", std::string(to_string(s.category()))}, {"attributes", attrs}};
}

// ---------------------------------------------------------------------------
// Composition

namespace {

using Lambda = SemanticValue::Lambda;

SemanticValue make(SemStructure s) { return SemanticValue{std::move(s)}; }

SemanticValue curried(std::size_t arity, std::function<SemanticValue(std::vector<SemanticValue>)> body) {
  return SemanticValue{Lambda{arity, std::move(body)}};
}

SemValue slot_value(SemanticValue& v, std::string_view what) {
  if (auto* s = std::get_if<SemStructure>(&v.value)) return std::make_shared<const SemStructure>(std::move(*s));
  if (auto* w = std::get_if<std::string>(&v.value)) return std::move(*w);
  throw CompositionError("cannot fill " + std::string(what) + " with an unsaturated or empty value");
}

enum class Tag {
  kDirection, kAttribute, kDirectionWord, kComparative, kSelect, kExistVerb, kActionVerb,
  kActionWithParticipants, kShape, kLocator, kFunctionWord,
  kProcessSentence, kIdentity, kDeterminer, kParticle, kConstructive, kActionPhrase, kPredication,
  kLocate, kExist, kPropertyOfShape, kDirectionAttribute, kLocatorPhrase, kComparativeAttribute,
  kAttributeOfAttribute, kUnknown,
};

Tag tag_of(std::string_view tag) {
  static constexpr std::pair<std::string_view, Tag> kTags[] = {
      {"direction", Tag::kDirection},
      {"attribute", Tag::kAttribute},
      {"direction_word", Tag::kDirectionWord},
      {"comparative", Tag::kComparative},
      {"select", Tag::kSelect},
      {"exist_verb", Tag::kExistVerb},
      {"action_verb", Tag::kActionVerb},
      {"action_with_participants", Tag::kActionWithParticipants},
      {"shape", Tag::kShape},
      {"locator", Tag::kLocator},
      {"function_word", Tag::kFunctionWord},
      {"process_sentence", Tag::kProcessSentence},
      {"identity", Tag::kIdentity},
      {"determiner", Tag::kDeterminer},
      {"particle", Tag::kParticle},
      {"constructive", Tag::kConstructive},
      {"action_phrase", Tag::kActionPhrase},
      {"predication", Tag::kPredication},
      {"locate", Tag::kLocate},
      {"exist", Tag::kExist},
      {"property_of_shape", Tag::kPropertyOfShape},
      {"direction_attribute", Tag::kDirectionAttribute},
      {"locator_phrase", Tag::kLocatorPhrase},
      {"comparative_attribute", Tag::kComparativeAttribute},
      {"attribute_of_attribute", Tag::kAttributeOfAttribute},
  };
  for (const auto& [name, t] : kTags) {
    if (name == tag) return t;
  }
  return Tag::kUnknown;
}

// Tag of every rule, computed once per grammar.
const std::vector<Tag>& rule_tags(const Grammar& g) {
  thread_local std::uint64_t cached_id = 0;
  thread_local std::vector<Tag> tags;
  if (cached_id != g.id()) {
    tags.clear();
    for (const auto& r : g.rules()) tags.push_back(tag_of(r.semantic_tag));
    cached_id = g.id();
  }
  return tags;
}

SemanticValue lexical_value(Tag t, const std::string& tag, const std::string& word) {
  if (t == Tag::kDirection) {
    // word -> attribute -> shape -> DIRECTION
    return curried(1, [word](std::vector<SemanticValue> a) {
      SemValue attr = slot_value(a[0], "attribute");
      return curried(1, [word, attr](std::vector<SemanticValue> b) {
        SemStructure s(Category::kDirection);
        s.set(Slot::kShape, slot_value(b[0], "shape")).set(Slot::kAttribute, attr).set(Slot::kDirection, word);
        return make(std::move(s));
      });
    });
  }
  if (t == Tag::kAttribute) {
    SemStructure s(Category::kAttribute);
    s.set(Slot::kAttribute, word);
    return make(std::move(s));
  }
  if (t == Tag::kDirectionWord) {
    SemStructure s(Category::kDirection);
    s.set(Slot::kDirection, word);
    return make(std::move(s));
  }
  if (t == Tag::kComparative || t == Tag::kSelect) {
    const bool comparative = t == Tag::kComparative;
    // word -> (direction, attribute) -> shape -> DIRECTION | ATTRIBUTE
    return curried(2, [word, comparative](std::vector<SemanticValue> a) {
      SemValue direct = slot_value(a[0], "direction");
      SemValue attr = slot_value(a[1], "attribute");
      return curried(1, [=](std::vector<SemanticValue> b) {
        SemStructure s(comparative ? Category::kDirection : Category::kAttribute);
        s.set(Slot::kShape, slot_value(b[0], "shape")).set(Slot::kAttribute, attr).set(Slot::kDirection, direct);
        s.set(comparative ? Slot::kComparative : Slot::kSelect, word);
        return make(std::move(s));
      });
    });
  }
  if (t == Tag::kExistVerb || t == Tag::kActionVerb) {
    SemStructure s(Category::kAction);
    s.set(Slot::kAction, word).set(Slot::kTense, "present");
    return make(std::move(s));
  }
  if (t == Tag::kActionWithParticipants) {
    // word -> (trajector, landmark) -> ACTION
    return curried(2, [word](std::vector<SemanticValue> a) {
      SemStructure s(Category::kAction);
      s.set(Slot::kAction, word)
          .set(Slot::kTrajector, slot_value(a[0], "trajector"))
          .set(Slot::kLandmark, slot_value(a[1], "landmark"));
      return make(std::move(s));
    });
  }
  if (t == Tag::kShape) return make(shape_ref(word));
  if (t == Tag::kLocator) {
    // word -> landmark -> action -> trajector -> SPATIAL_RELATION
    const std::string region(preposition_region(word));
    return curried(1, [word, region](std::vector<SemanticValue> a) {
      SemValue landmark = slot_value(a[0], "landmark");
      return curried(1, [=](std::vector<SemanticValue> b) {
        SemValue action = slot_value(b[0], "action");
        return curried(1, [=](std::vector<SemanticValue> c) {
          SemStructure s(Category::kSpatialRelation);
          s.set(Slot::kRelation, word)
              .set(Slot::kRegion, region)
              .set(Slot::kAction, action)
              .set(Slot::kTrajector, slot_value(c[0], "trajector"))
              .set(Slot::kLandmark, landmark);
          return make(std::move(s));
        });
      });
    });
  }
  if (t == Tag::kFunctionWord) return SemanticValue{};
  throw CompositionError("unknown lexical semantic tag @" + tag);
}

bool holds_category(const SemValue* v, Category c) {
  if (v == nullptr) return false;
  const auto* p = std::get_if<SemPtr>(v);
  return p != nullptr && (*p)->category() == c;
}

SemStructure with_tense(const SemStructure& action) {
  SemStructure a = action;
  if (!a.has(Slot::kTense)) a.set(Slot::kTense, "present");
  return a;
}

// Sentence-level normalization: ACTION values land in the action slot,
// entities in trajector/landmark, and every action is present tense.
SemStructure process_sentence(SemanticValue& v) {
  auto* s = std::get_if<SemStructure>(&v.value);
  if (s == nullptr) throw CompositionError("composition at the sentence root is unsaturated");
  SemStructure out = std::move(*s);
  if (out.category() == Category::kSpatialRelation) {
    const SemValue* action = out.get(Slot::kAction);
    const SemValue* trajector = out.get(Slot::kTrajector);
    if (action != nullptr && trajector != nullptr && !holds_category(action, Category::kAction) &&
        holds_category(trajector, Category::kAction)) {
      SemValue a = *action, t = *trajector;
      out.set(Slot::kAction, t).set(Slot::kTrajector, a);
    }
    if (const SemStructure* act = out.structure(Slot::kAction); act != nullptr && act->category() == Category::kAction) {
      out.set(Slot::kAction, with_tense(*act));
    }
  } else if (out.category() == Category::kAction) {
    out = with_tense(out);
  }
  validate(out);
  return out;
}

SemanticValue compose(const ParseTree& t, const Grammar& g, const std::vector<Tag>& tags) {
  const auto ri = static_cast<std::size_t>(t.rule);
  const auto& rule = g.rules().at(ri);
  const Tag tag = tags[ri];
  if (t.is_preterminal()) return lexical_value(tag, rule.semantic_tag, t.word);

  std::vector<SemanticValue> c;
  c.reserve(t.children.size());
  for (const auto& child : t.children) c.push_back(compose(child, g, tags));
  auto need = [&](std::size_t n) {
    if (c.size() != n) throw CompositionError("@" + rule.semantic_tag + " expects " + std::to_string(n) + " children");
  };
  auto call = [&](std::size_t f, std::initializer_list<std::size_t> args) {
    std::vector<SemanticValue> v;
    v.reserve(args.size());
    for (std::size_t i : args) v.push_back(std::move(c[i]));
    return verba::apply(c[f], std::move(v));
  };
  switch (tag) {
    case Tag::kProcessSentence: need(1); return make(process_sentence(c[0]));
    case Tag::kIdentity: need(1); return std::move(c[0]);
    case Tag::kDeterminer:
    case Tag::kParticle: need(2); return std::move(c[1]);
    case Tag::kConstructive: need(3); return call(0, {1, 2});
    case Tag::kActionPhrase:
    case Tag::kPredication:
    case Tag::kLocate:
    case Tag::kExist: need(2); return call(1, {0});
    case Tag::kPropertyOfShape: need(3); return call(0, {2});
    case Tag::kDirectionAttribute:
    case Tag::kLocatorPhrase: need(2); return call(0, {1});
    case Tag::kComparativeAttribute: need(3); return call(0, {1, 2});
    case Tag::kAttributeOfAttribute: need(5); return call(0, {3, 4});
    default: break;
  }
  throw CompositionError("unknown semantic tag @" + rule.semantic_tag + " on a phrasal rule");
}

}  // namespace

SemanticValue apply(const SemanticValue& f, std::vector<SemanticValue> args) {
  const auto* fn = std::get_if<Lambda>(&f.value);
  if (fn == nullptr) throw CompositionError("cannot apply a saturated value");
  if (fn->arity != args.size()) {
    throw CompositionError("arity mismatch: expected " + std::to_string(fn->arity) + ", got " +
                           std::to_string(args.size()));
  }
  return fn->body(std::move(args));
}

SemStructure interpret(const ParseTree& t, const Grammar& g) {
  SemanticValue v = compose(t, g, rule_tags(g));
  if (g.rules().at(static_cast<std::size_t>(t.rule)).semantic_tag != "process_sentence") {
    return process_sentence(v);
  }
  return std::move(std::get<SemStructure>(v.value));
}

SemStructure interpret_sentence(std::string_view sentence) { return interpret(parse_first(sentence)); }

// ---------------------------------------------------------------------------
// Realization

std::string_view to_string(Style s) { return s == Style::kConstructive ? "constructive" : "from-above"; }

std::optional<Style> style_from_string(std::string_view s) {
  if (s == "constructive") return Style::kConstructive;
  if (s == "from-above" || s == "from_above") return Style::kFromAbove;
  return std::nullopt;
}

namespace {

// Word held directly or one level down (DIRECTION{direction=w}).
std::string leaf_word(const SemStructure& s, Slot slot) {
  if (auto w = s.word(slot); !w.empty()) return w;
  if (const SemStructure* sub = s.structure(slot)) return sub->word(slot);
  return {};
}

std::string shape_word(const SemStructure& s) {
  const SemStructure* shape = s.structure(Slot::kShape);
  if (shape == nullptr) throw RealizationError("entity has no shape");
  return shape->word(Slot::kShape);
}

std::string entity_text(const SemStructure& e) {
  switch (e.category()) {
    case Category::kShape:
      return e.word(Slot::kShape);
    case Category::kDirection: {
      std::string out = "the ";
      if (e.has(Slot::kComparative)) out += e.word(Slot::kComparative) + " ";
      return out + leaf_word(e, Slot::kDirection) + " " + leaf_word(e, Slot::kAttribute) + " of " + shape_word(e);
    }
    case Category::kAttribute:
      if (!e.has(Slot::kSelect)) break;
      return "the " + e.word(Slot::kSelect) + " of the " + leaf_word(e, Slot::kDirection) + " " +
             leaf_word(e, Slot::kAttribute) + " of " + shape_word(e);
    default:
      break;
  }
  throw RealizationError("cannot realize " + serialize(e) + " as a noun phrase");
}

std::string particle_for(const std::string& verb) {
  if (verb == "subtract") return "from";
  if (verb == "replace") return "with";
  return "to";
}

struct Phrases {
  std::string trajector;
  std::string landmark;
};

std::string realize_with(const SemStructure& s, Style style, const Phrases* given) {
  const SemStructure* traj = s.structure(Slot::kTrajector);
  const SemStructure* land = s.structure(Slot::kLandmark);
  if (traj == nullptr || land == nullptr) throw RealizationError("structure lacks a trajector or landmark");
  const std::string t = given ? given->trajector : entity_text(*traj);
  const std::string l = given ? given->landmark : entity_text(*land);

  if (s.category() == Category::kSpatialRelation) {
    const std::string rel = s.word(Slot::kRelation);
    if (style == Style::kFromAbove) return t + " is " + rel + " " + l;
    const SemStructure* action = s.structure(Slot::kAction);
    std::string verb = action ? action->word(Slot::kAction) : "is";
    if (verb == "is") verb = "draw";
    return verb + " " + t + " " + rel + " " + l;
  }
  if (s.category() == Category::kAction) {
    if (style == Style::kFromAbove) {
      throw RealizationError("an action without a spatial relation has no from-above form");
    }
    const std::string verb = s.word(Slot::kAction);
    return verb + " " + t + " " + particle_for(verb) + " " + l;
  }
  throw RealizationError("only SPATIAL_RELATION and ACTION structures can be realized");
}

const ParseTree& child(const ParseTree& t, std::size_t i) {
  if (i >= t.children.size()) throw RealizationError("unexpected parse shape");
  return t.children[i];
}

std::string surface(const ParseTree& t) { return detokenize(leaves(t)); }

}  // namespace

std::string realize(const SemStructure& s, Style style) { return realize_with(s, style, nullptr); }

std::string convert_style(std::string_view sentence, Style target) {
  const Grammar& g = Grammar::builtin();
  const auto tokens = tokenize(sentence);
  const ParseTree tree = Parser(g).parse(tokens);
  const SemStructure meaning = interpret(tree, g);

  // Start -> S; the S rule decides where the participant phrases sit.
  const ParseTree& s = child(tree, 0);
  const std::string& tag = g.rules().at(static_cast<std::size_t>(s.rule)).semantic_tag;
  Phrases p;
  Style current;
  if (tag == "predication") {  // NP (EXIST_VERB (IN NP))
    current = Style::kFromAbove;
    p.trajector = surface(child(s, 0));
    p.landmark = surface(child(child(child(s, 1), 1), 1));
  } else if (tag == "action_phrase") {  // VACT (NP (IN NP))
    current = Style::kConstructive;
    p.trajector = surface(child(child(s, 1), 0));
    p.landmark = surface(child(child(child(s, 1), 1), 1));
  } else if (tag == "constructive") {  // VERB NP (PARTICLE NP)
    current = Style::kConstructive;
    p.trajector = surface(child(s, 1));
    p.landmark = surface(child(child(s, 2), 1));
  } else {
    throw RealizationError("unsupported sentence form");
  }
  if (current == target) return detokenize(tokens);
  return realize_with(meaning, target, &p);
}

}  // namespace verba
