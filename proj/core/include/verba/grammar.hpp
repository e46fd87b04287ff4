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

#ifndef VERBA_GRAMMAR_HPP_
#define VERBA_GRAMMAR_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verba {

struct Token {
  std::string surface;    // lowercase lexicon word; "shape1" for "<shape1>"
  std::size_t position;   // 0-based index in the sentence
  bool reference = false; // written as <shapeN>

  friend bool operator==(const Token&, const Token&) = default;
};

// The closed vocabulary of description sentences, in a fixed order.
const std::vector<std::string>& lexicon();
bool in_lexicon(std::string_view word);

// Lowercases, drops a sentence-final period and maps <shape1>/<shape2> to
// reference tokens. Throws LexicalError on out-of-vocabulary words.
std::vector<Token> tokenize(std::string_view sentence);
std::string detokenize(std::span<const Token> tokens);

// Longest right-hand side a grammar file may use.
inline constexpr std::size_t kMaxRuleLength = 32;

// One context-free rule. Lexical rules have a single quoted terminal on
// the right, e.g. `DIR -> 'right' @direction`.
struct GrammarRule {
  std::string lhs;
  std::vector<std::string> rhs;
  std::string semantic_tag;
  bool lexical = false;
};

// Rule inventory with interned symbols. Rule order is parse priority:
// earlier rules win ties between complete parses.
class Grammar {
 public:
  // The built-in description grammar.
  static const Grammar& builtin();
  static std::string_view builtin_text();

  // One rule per line: `LHS -> RHS... @tag`; `#` starts a comment.
  static Grammar from_text(std::string_view text);
  static Grammar load(const std::filesystem::path& path);

  const std::vector<GrammarRule>& rules() const { return rules_; }
  const std::string& start() const { return start_; }
  // Distinct for every grammar built; copies share it. Lets clients cache
  // per-grammar tables.
  std::uint64_t id() const { return id_; }

  // Internal symbol tables used by the parser.
  int symbol(std::string_view name) const;  // -1 if unknown
  std::size_t symbol_count() const { return names_.size(); }
  const std::string& symbol_name(int id) const { return names_[static_cast<std::size_t>(id)]; }
  bool is_preterminal(int id) const { return preterminal_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& rules_for(int lhs) const { return by_lhs_[static_cast<std::size_t>(lhs)]; }
  const std::vector<int>& rhs_ids(int rule) const { return rhs_ids_[static_cast<std::size_t>(rule)]; }
  int lhs_id(int rule) const { return lhs_ids_[static_cast<std::size_t>(rule)]; }
  // Lexical rules whose terminal is `word`.
  const std::vector<int>& lexical_rules(std::string_view word) const;

 private:
  void index();
  int intern(const std::string& name);

  std::vector<GrammarRule> rules_;
  std::string start_;
  std::uint64_t id_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  std::vector<bool> preterminal_;
  std::vector<std::vector<int>> by_lhs_;
  std::vector<std::vector<int>> rhs_ids_;
  std::vector<int> lhs_ids_;
  std::unordered_map<std::string, std::vector<int>> by_word_;
};

struct ParseTree {
  std::string label;
  int rule = -1;                  // index into Grammar::rules()
  std::vector<ParseTree> children;
  std::string word;               // set on preterminal nodes only
  bool reference = false;         // preterminal leaf came from <shapeN>

  bool is_preterminal() const { return children.empty(); }
  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

std::vector<Token> leaves(const ParseTree& t);

// Chart parser returning every complete parse, best first. Parse order:
// compare the preorder sequence of rule indices; on equal rules the child
// covering the longer leftmost span wins.
class Parser {
 public:
  explicit Parser(const Grammar& grammar = Grammar::builtin()) : grammar_(&grammar) {}

  // Throws SyntaxError when no complete parse exists.
  std::vector<ParseTree> parse_all(std::span<const Token> tokens) const;
  ParseTree parse(std::span<const Token> tokens) const;

  const Grammar& grammar() const { return *grammar_; }

 private:
  const Grammar* grammar_;
};

std::vector<ParseTree> parse(std::span<const Token> tokens);
ParseTree parse_first(std::string_view sentence);

// Bracketed rendering in the NLTK pretty-print layout (70 column margin),
// with cosmetic feature slots: NP prints as NP[-pro, -wh], every other
// label as LABEL[], and the preposition category IN as SP.
std::string render_tree(const ParseTree& t);

}  // namespace verba

#endif  // VERBA_GRAMMAR_HPP_
