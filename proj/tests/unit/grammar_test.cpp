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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "goldens.hpp"
#include "language.hpp"
#include "verba/error.hpp"
#include "verba/grammar.hpp"

using namespace verba;
using namespace verba::testing;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.surface);
  return out;
}

std::vector<std::string> child_labels(const ParseTree& t) {
  std::vector<std::string> out;
  for (const auto& c : t.children) out.push_back(c.label);
  return out;
}

bool uses_rule(const ParseTree& t, const std::string& lhs, const std::vector<std::string>& rhs) {
  if (t.label == lhs && child_labels(t) == rhs) return true;
  return std::any_of(t.children.begin(), t.children.end(), [&](const ParseTree& c) { return uses_rule(c, lhs, rhs); });
}

}  // namespace

TEST_CASE("tokenize") {
  const auto simple = tokenize("shape1 is at shape2.");
  CHECK(surfaces(simple) == std::vector<std::string>{"shape1", "is", "at", "shape2"});
  CHECK(simple[3].position == 3);
  CHECK_FALSE(simple[0].reference);

  const auto refs = tokenize("add <shape2> to <shape1>.");
  CHECK(surfaces(refs) == std::vector<std::string>{"add", "shape2", "to", "shape1"});
  CHECK(refs[1].reference);
  CHECK(refs[3].reference);
  CHECK_FALSE(refs[0].reference);

  CHECK(surfaces(tokenize("  Shape1   IS at SHAPE2 ")) == surfaces(simple));
}

TEST_CASE("out-of-vocabulary words are lexical errors") {
  try {
    (void)tokenize("the blue square");
    FAIL("expected a lexical error");
  } catch (const LexicalError& e) {
    CHECK(e.word() == "blue");
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(tokenize("hello"), LexicalError);
  CHECK_THROWS_AS(tokenize("<shape3> is at shape1"), LexicalError);
}

TEST_CASE("detokenize inverts tokenize") {
  for (const auto& s : reference_sentences()) {
    const auto ts = tokenize(s);
    CHECK(tokenize(detokenize(ts)) == ts);
  }
  CHECK(detokenize(tokenize("add <shape2> to shape1.")) == "add <shape2> to shape1");
}

TEST_CASE("lexicon") {
  const auto& lex = lexicon();
  CHECK(lex.size() == 24);
  CHECK(lex == reference_lexicon());
  CHECK(in_lexicon("replace"));
  CHECK_FALSE(in_lexicon("square"));
  CHECK(std::find(lex.begin(), lex.end(), "square") == lex.end());
}

TEST_CASE("simple sentence parses to the printed tree") {
  const auto trees = parse(tokenize(kSimpleSentence));
  REQUIRE(trees.size() == 1);
  const ParseTree& t = trees[0];
  CHECK(uses_rule(t, "S", {"NP", "VP"}));
  CHECK(uses_rule(t, "VP", {"EXIST_VERB", "PP"}));
  CHECK(uses_rule(t, "PP", {"IN", "NP"}));
  CHECK(render_tree(t) == kSimpleTree);
}

TEST_CASE("leaf rendering") {
  ParseTree leaf{"SHAPE", -1, {}, "shape1", false};
  CHECK(render_tree(leaf) == "(SHAPE[] shape1)");
}

TEST_CASE("constructive sentence uses the argument-bearing rule") {
  const auto trees = parse(tokenize(kActionSentence));
  REQUIRE(trees.size() == 1);
  CHECK(uses_rule(trees[0], "S", {"ADD", "NP", "NPP1"}));
  CHECK(uses_rule(trees[0], "NPP1", {"To", "NP"}));
}

TEST_CASE("complex sentence") {
  const auto trees = parse(tokenize(kComplexSentence));
  REQUIRE(trees.size() == 1);
  CHECK(uses_rule(trees[0], "PROP", {"COMP", "DIR_", "ATTR_"}));
  CHECK(uses_rule(trees[0], "PROP", {"ATTR", "OF", "DET", "DIR_", "ATTR_"}));
}

TEST_CASE("parsing is deterministic and covers the tokens") {
  for (const auto& s : reference_sentences()) {
    const auto ts = tokenize(s);
    const auto a = parse(ts);
    const auto b = parse(ts);
    REQUIRE(!a.empty());
    CHECK(a == b);
    for (const auto& t : a) CHECK(leaves(t) == ts);
  }
}

TEST_CASE("syntax errors report the furthest position") {
  try {
    (void)parse(tokenize("shape1 at"));
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
  try {
    (void)parse(tokenize("shape1 is at"));
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse(std::vector<Token>{}), SyntaxError);
}

TEST_CASE("locative verb phrases read as action phrases") {
  // No constructive rule takes 'at', so S -> VACT NPP is the only reading.
  const auto trees = parse(tokenize("add shape1 at shape2"));
  REQUIRE(trees.size() == 1);
  CHECK(uses_rule(trees[0], "S", {"VACT", "NPP"}));
}

TEST_CASE("rule order decides between complete parses") {
  const Grammar g = Grammar::from_text(R"(
    S -> A B @first
    S -> A C @second
    A -> 'shape1' @word
    B -> 'is' @word
    C -> 'is' @word
  )");
  const auto trees = Parser(g).parse_all(tokenize("shape1 is"));
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].children[1].label == "B");
  CHECK(trees[1].children[1].label == "C");
  CHECK(Parser(g).parse(tokenize("shape1 is")).rule == 0);
}

TEST_CASE("grammar files are validated") {
  CHECK_THROWS_AS(Grammar::from_text("S -> A"), GrammarError);
  CHECK_THROWS_AS(Grammar::from_text("S => A @x"), GrammarError);
  CHECK_THROWS_AS(Grammar::from_text("S -> A @x"), GrammarError);  // A has no rules
  CHECK_THROWS_AS(Grammar::from_text("S -> A 'x' @x\nA -> 'y' @w"), GrammarError);
  CHECK_THROWS_AS(Grammar::from_text("# only a comment\n"), GrammarError);
  std::string long_rule = "S ->";
  for (std::size_t i = 0; i <= kMaxRuleLength; ++i) long_rule += " A";
  CHECK_THROWS_AS(Grammar::from_text(long_rule + " @x\nA -> 'y' @w"), GrammarError);

  const Grammar g = Grammar::from_text("S -> A A @pair   # trailing comment\nA -> 'shape1' @w");
  CHECK(g.start() == "S");
  CHECK(g.rules().size() == 2);
  CHECK(g.id() != Grammar::builtin().id());
  CHECK(Parser(g).parse_all(tokenize("shape1 shape1")).size() == 1);
}

TEST_CASE("built-in grammar text reloads to the same rules") {
  const Grammar g = Grammar::from_text(Grammar::builtin_text());
  REQUIRE(g.rules().size() == Grammar::builtin().rules().size());
  for (std::size_t i = 0; i < g.rules().size(); ++i) {
    CHECK(g.rules()[i].lhs == Grammar::builtin().rules()[i].lhs);
    CHECK(g.rules()[i].rhs == Grammar::builtin().rules()[i].rhs);
  }
}

// Bounded form of the generation/parsing duality: every string the grammar
// generates through each sentence rule parses, and some parse of it uses
// that rule at the top.
TEST_CASE("generated sentences parse back through their sentence rule") {
  const Grammar& g = Grammar::builtin();
  Language lang(g);
  const int s = g.symbol("S");
  std::size_t total = 0;
  for (int r : g.rules_for(s)) {
    lang.for_each(r, 10, [&](const std::string& text) {
      ++total;
      const auto trees = parse(tokenize(text));
      const bool found = std::any_of(trees.begin(), trees.end(), [&](const ParseTree& t) {
        return t.children.size() == 1 && t.children[0].rule == r;
      });
      if (!found) FAIL_CHECK(text);
    });
  }
  CHECK(total > 10000);
}
