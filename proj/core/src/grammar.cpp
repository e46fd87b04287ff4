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

#include "verba/grammar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "verba/error.hpp"

namespace verba {

const std::vector<std::string>& lexicon() {
  static const std::vector<std::string> words = {
      "right", "left", "top", "bottom", "upper", "lower", "edge", "corner",
      "midpoint", "shape1", "shape2", "is", "draw", "add", "subtract", "replace",
      "at", "on", "in", "to", "from", "with", "of", "the"};
  return words;
}

bool in_lexicon(std::string_view word) {
  const auto& w = lexicon();
  return std::find(w.begin(), w.end(), word) != w.end();
}

std::vector<Token> tokenize(std::string_view sentence) {
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!sentence.empty() && space(sentence.back())) sentence.remove_suffix(1);
  if (!sentence.empty() && sentence.back() == '.') sentence.remove_suffix(1);

  std::vector<Token> tokens;
  tokens.reserve(sentence.size() / 3 + 1);
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && space(sentence[i])) ++i;
    const std::size_t begin = i;
    while (i < sentence.size() && !space(sentence[i])) ++i;
    if (begin == i) break;
    std::string word(sentence.substr(begin, i - begin));
    for (auto& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Token t{word, tokens.size(), false};
    if (word.size() > 2 && word.front() == '<' && word.back() == '>') {
      t.surface = word.substr(1, word.size() - 2);
      t.reference = true;
      if (t.surface != "shape1" && t.surface != "shape2") throw LexicalError(word, tokens.size() + 1);
    }
    if (!in_lexicon(t.surface)) throw LexicalError(word, tokens.size() + 1);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.reference ? "<" + t.surface + ">" : t.surface;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grammar

std::string_view Grammar::builtin_text() {
  // Constructive sentence rules come first: they outrank S -> VACT NPP,
  // which outranks S -> NP VP.
  static constexpr std::string_view kText = R"(# Description grammar.
Start -> S @process_sentence
S -> ADD NP NPP1 @constructive
S -> DRAW NP NPP1 @constructive
S -> SUBTRACT NP NPP1 @constructive
S -> REPLACE NP NPP1 @constructive
S -> VACT NPP @action_phrase
S -> NP VP @predication
NP -> SHAPE @identity
NP -> DET NP @determiner
NP -> PROP OF SHAPE @property_of_shape
NPP -> NP PP @locate
NPP1 -> To NP @particle
NPP1 -> FROM NP @particle
NPP1 -> WITH NP @particle
PROP -> DIR ATTR_ @direction_attribute
PROP -> COMP DIR_ ATTR_ @comparative_attribute
PROP -> ATTR OF DET DIR_ ATTR_ @attribute_of_attribute
VP -> EXIST_VERB PP @exist
VACT -> ACTION_VERB @identity
PP -> IN NP @locator_phrase
DIR -> 'right' @direction
DIR -> 'left' @direction
DIR -> 'top' @direction
DIR -> 'bottom' @direction
ATTR_ -> 'edge' @attribute
ATTR_ -> 'corner' @attribute
ATTR_ -> 'midpoint' @attribute
DIR_ -> 'right' @direction_word
DIR_ -> 'left' @direction_word
DIR_ -> 'top' @direction_word
DIR_ -> 'bottom' @direction_word
COMP -> 'top' @comparative
COMP -> 'bottom' @comparative
COMP -> 'upper' @comparative
COMP -> 'lower' @comparative
ATTR -> 'edge' @select
ATTR -> 'corner' @select
ATTR -> 'midpoint' @select
EXIST_VERB -> 'is' @exist_verb
ACTION_VERB -> 'draw' @action_verb
ACTION_VERB -> 'add' @action_verb
ACTION_VERB -> 'subtract' @action_verb
ACTION_VERB -> 'replace' @action_verb
ADD -> 'add' @action_with_participants
SUBTRACT -> 'subtract' @action_with_participants
DRAW -> 'draw' @action_with_participants
REPLACE -> 'replace' @action_with_participants
SHAPE -> 'shape1' @shape
SHAPE -> 'shape2' @shape
IN -> 'at' @locator
IN -> 'on' @locator
IN -> 'in' @locator
To -> 'to' @function_word
FROM -> 'from' @function_word
WITH -> 'with' @function_word
OF -> 'of' @function_word
DET -> 'the' @function_word
)";
  return kText;
}

const Grammar& Grammar::builtin() {
  static const Grammar g = from_text(builtin_text());
  return g;
}

Grammar Grammar::from_text(std::string_view text) {
  Grammar g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw GrammarError("grammar line " + std::to_string(lineno) + ": " + why);
    };
    if (words.size() < 4 || words[1] != "->") fail("expected `LHS -> RHS... @tag`");
    if (words.back().size() < 2 || words.back().front() != '@') fail("missing @semantic-tag");
    GrammarRule r;
    r.lhs = words[0];
    r.semantic_tag = words.back().substr(1);
    r.rhs.assign(words.begin() + 2, words.end() - 1);
    const bool quoted = r.rhs.size() == 1 && r.rhs[0].size() > 2 && r.rhs[0].front() == '\'' && r.rhs[0].back() == '\'';
    if (quoted) {
      r.lexical = true;
      r.rhs[0] = r.rhs[0].substr(1, r.rhs[0].size() - 2);
    } else {
      for (const auto& s : r.rhs) {
        if (s.front() == '\'') fail("terminals may only appear alone on the right-hand side");
      }
    }
    if (r.rhs.size() > kMaxRuleLength) fail("right-hand side longer than " + std::to_string(kMaxRuleLength));
    if (g.start_.empty()) g.start_ = r.lhs;
    g.rules_.push_back(std::move(r));
  }
  if (g.rules_.empty()) throw GrammarError("grammar has no rules");
  g.index();
  return g;
}

Grammar Grammar::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open grammar file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

int Grammar::intern(const std::string& name) {
  auto [it, inserted] = ids_.emplace(name, static_cast<int>(names_.size()));
  if (inserted) {
    names_.push_back(name);
    preterminal_.push_back(false);
    by_lhs_.emplace_back();
  }
  return it->second;
}

void Grammar::index() {
  static std::atomic<std::uint64_t> next_id{1};
  id_ = next_id++;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    const int lhs = intern(r.lhs);
    lhs_ids_.push_back(lhs);
    by_lhs_[static_cast<std::size_t>(lhs)].push_back(static_cast<int>(i));
    std::vector<int> rhs;
    if (r.lexical) {
      preterminal_[static_cast<std::size_t>(lhs)] = true;
      by_word_[r.rhs[0]].push_back(static_cast<int>(i));
    } else {
      for (const auto& s : r.rhs) rhs.push_back(intern(s));
    }
    rhs_ids_.push_back(std::move(rhs));
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (!r.lexical && preterminal_[static_cast<std::size_t>(lhs_ids_[i])]) {
      throw GrammarError("symbol " + r.lhs + " has both lexical and phrasal rules");
    }
    for (int s : rhs_ids_[i]) {
      if (by_lhs_[static_cast<std::size_t>(s)].empty()) {
        throw GrammarError("symbol " + names_[static_cast<std::size_t>(s)] + " has no rules");
      }
    }
  }
}

int Grammar::symbol(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  return it == ids_.end() ? -1 : it->second;
}

const std::vector<int>& Grammar::lexical_rules(std::string_view word) const {
  static const std::vector<int> kNone;
  auto it = by_word_.find(std::string(word));
  return it == by_word_.end() ? kNone : it->second;
}

// ---------------------------------------------------------------------------
// Earley recognition and forest unpacking

namespace {

// Scratch table whose entries are valid only under the current stamp, so a
// parse never has to clear it.
template <typename T>
class StampedTable {
 public:
  void reset(std::size_t size) {
    if (stamps_.size() < size) {
      stamps_.resize(size, 0);
      values_.resize(size);
    }
    ++stamp_;
  }
  bool has(std::size_t k) const { return stamps_[k] == stamp_; }
  const T& get(std::size_t k) const { return values_[k]; }
  void put(std::size_t k, T v) {
    stamps_[k] = stamp_;
    values_[k] = v;
  }

 private:
  std::vector<std::uint64_t> stamps_;
  std::vector<T> values_;
  std::uint64_t stamp_ = 0;
};

struct Item {
  int rule;
  int dot;
  int origin;
  int next_waiting;  // next item in the same chart cell awaiting the same symbol
};

struct Constituent {
  int rule;
  int start;
  int end;
  int next_same_start;  // next constituent with the same start and category
};

// Per-thread buffers reused across parses to keep allocation off the hot
// path. A parse on one thread must finish before the next starts there.
struct ChartScratch {
  std::vector<int> lex;
  std::vector<std::vector<Item>> chart;
  std::vector<int> waiting;
  std::vector<Constituent> done;
  std::vector<int> start_head;
  std::vector<char> predicted;
  StampedTable<char> seen;
  StampedTable<int> counts;
};

ChartScratch& chart_scratch() {
  thread_local ChartScratch scratch;
  return scratch;
}

class ChartParse {
 public:
  ChartParse(const Grammar& g, std::span<const Token> tokens)
      : g_(g), tokens_(tokens), n_(static_cast<int>(tokens.size())), syms_(static_cast<int>(g.symbol_count())),
        scratch_(chart_scratch()), lex_(scratch_.lex), chart_(scratch_.chart), waiting_(scratch_.waiting),
        done_(scratch_.done), start_head_(scratch_.start_head) {
    const auto cells = static_cast<std::size_t>(n_ + 1);
    const auto nsym = static_cast<std::size_t>(syms_);
    lex_.assign(static_cast<std::size_t>(n_) * nsym, -1);
    for (int pos = 0; pos < n_; ++pos) {
      for (int r : g.lexical_rules(tokens[static_cast<std::size_t>(pos)].surface)) {
        int& slot = lex_[static_cast<std::size_t>(pos) * nsym + static_cast<std::size_t>(g.lhs_id(r))];
        if (slot < 0) slot = r;
      }
    }
    max_dot_ = 1;
    for (std::size_t r = 0; r < g.rules().size(); ++r) {
      max_dot_ = std::max(max_dot_, static_cast<int>(g.rhs_ids(static_cast<int>(r)).size()) + 1);
    }
    if (chart_.size() < cells) chart_.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) chart_[i].clear();
    cells_ = cells;
    waiting_.assign(cells * nsym, -1);
    start_head_.assign(cells * nsym, -1);
    done_.clear();
    auto& seen = scratch_.seen;
    seen.reset(cells * g.rules().size() * static_cast<std::size_t>(max_dot_) * cells);

    const int start = g.symbol(g.start());
    for (int r : g.rules_for(start)) add(0, r, 0, 0);
    auto& predicted = scratch_.predicted;
    predicted.resize(nsym);
    for (int i = 0; i <= n_; ++i) {
      std::fill(predicted.begin(), predicted.end(), 0);
      auto& items = chart_[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < items.size(); ++k) process(i, k, predicted);
    }
  }

  bool accepted() const {
    const int start = g_.symbol(g_.start());
    for (int k = start_head_[static_cast<std::size_t>(start)]; k >= 0; k = done_[static_cast<std::size_t>(k)].next_same_start) {
      const auto& c = done_[static_cast<std::size_t>(k)];
      if (c.end == n_ && g_.lhs_id(c.rule) == start) return true;
    }
    return false;
  }

  // 1-based position of the first token no item could consume.
  std::size_t failure_position() const {
    for (std::size_t i = 1; i < cells_; ++i) {
      if (chart_[i].empty()) return i;
    }
    return tokens_.size() + 1;
  }

  std::vector<ParseTree> trees() const {
    const int root = g_.symbol(g_.start());
    auto& memo = scratch_.counts;
    memo.reset(cells_ * cells_ * static_cast<std::size_t>(syms_));
    if (count(root, 0, n_) == 1) {
      std::vector<ParseTree> out;
      out.push_back(build_one(root, 0, n_));
      return out;
    }
    return build(root, 0, n_);
  }

 private:
  std::size_t head_key(int pos, int sym) const {
    return static_cast<std::size_t>(pos) * static_cast<std::size_t>(syms_) + static_cast<std::size_t>(sym);
  }

  int lexical_rule(int preterminal, int pos) const {
    return lex_[static_cast<std::size_t>(pos) * static_cast<std::size_t>(syms_) + static_cast<std::size_t>(preterminal)];
  }

  void add(int pos, int rule, int dot, int origin) {
    const auto cells = static_cast<std::size_t>(n_ + 1);
    const std::size_t key =
        ((static_cast<std::size_t>(pos) * g_.rules().size() + static_cast<std::size_t>(rule)) *
             static_cast<std::size_t>(max_dot_) + static_cast<std::size_t>(dot)) * cells + static_cast<std::size_t>(origin);
    auto& seen = scratch_.seen;
    if (seen.has(key)) return;
    seen.put(key, 1);
    auto& items = chart_[static_cast<std::size_t>(pos)];
    Item it{rule, dot, origin, -1};
    const auto& rhs = g_.rhs_ids(rule);
    if (dot < static_cast<int>(rhs.size()) && !g_.is_preterminal(rhs[static_cast<std::size_t>(dot)])) {
      int& head = waiting_[static_cast<std::size_t>(pos) * static_cast<std::size_t>(syms_) +
                           static_cast<std::size_t>(rhs[static_cast<std::size_t>(dot)])];
      it.next_waiting = head;
      head = static_cast<int>(items.size());
    }
    items.push_back(it);
  }

  void process(int i, std::size_t k, std::vector<char>& predicted) {
    const Item it = chart_[static_cast<std::size_t>(i)][k];
    const auto& rhs = g_.rhs_ids(it.rule);
    if (it.dot == static_cast<int>(rhs.size())) {
      complete(i, it);
      return;
    }
    const int next = rhs[static_cast<std::size_t>(it.dot)];
    if (g_.is_preterminal(next)) {
      if (i < n_ && lexical_rule(next, i) >= 0) add(i + 1, it.rule, it.dot + 1, it.origin);
      return;
    }
    if (!predicted[static_cast<std::size_t>(next)]) {
      predicted[static_cast<std::size_t>(next)] = 1;
      for (int r : g_.rules_for(next)) add(i, r, 0, i);
    }
  }

  void complete(int i, const Item& it) {
    const int lhs = g_.lhs_id(it.rule);
    int& head = start_head_[head_key(it.origin, lhs)];
    done_.push_back({it.rule, it.origin, i, head});
    head = static_cast<int>(done_.size() - 1);
    // Rules are never empty, so origin < i and that cell is complete.
    const auto& cell = chart_[static_cast<std::size_t>(it.origin)];
    for (int w = waiting_[static_cast<std::size_t>(it.origin) * static_cast<std::size_t>(syms_) + static_cast<std::size_t>(lhs)];
         w >= 0; w = cell[static_cast<std::size_t>(w)].next_waiting) {
      const Item& p = cell[static_cast<std::size_t>(w)];
      add(i, p.rule, p.dot + 1, p.origin);
    }
  }

  // Calls f(bounds) for every way to cut [pos, end) among children k.. of
  // `rule`, where bounds[j] is the end of child j.
  template <typename F>
  void each_cut(int rule, std::size_t k, int pos, int end, int* bounds, F&& f) const {
    const auto& rhs = g_.rhs_ids(rule);
    if (k == rhs.size()) {
      if (pos == end) f(static_cast<const int*>(bounds));
      return;
    }
    const int sym = rhs[k];
    const int limit = end - static_cast<int>(rhs.size() - k - 1);
    if (g_.is_preterminal(sym)) {
      if (pos < limit && lexical_rule(sym, pos) >= 0) {
        bounds[k] = pos + 1;
        each_cut(rule, k + 1, pos + 1, end, bounds, f);
      }
      return;
    }
    for (int d = start_head_[head_key(pos, sym)]; d >= 0; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      const int e = done_[static_cast<std::size_t>(d)].end;
      if (e > limit || first_with_end(pos, sym, e) != d) continue;
      bounds[k] = e;
      each_cut(rule, k + 1, e, end, bounds, f);
    }
  }

  // First constituent in the (pos, sym) list ending at e; -1 if none.
  int first_with_end(int pos, int sym, int e) const {
    for (int d = start_head_[head_key(pos, sym)]; d >= 0; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      if (done_[static_cast<std::size_t>(d)].end == e) return d;
    }
    return -1;
  }

  // Number of trees for sym over [start, end), saturating at 2.
  int count(int sym, int start, int end) const {
    if (g_.is_preterminal(sym)) return end == start + 1 && lexical_rule(sym, start) >= 0 ? 1 : 0;
    const std::size_t key =
        (static_cast<std::size_t>(start) * cells_ + static_cast<std::size_t>(end)) * static_cast<std::size_t>(syms_) +
        static_cast<std::size_t>(sym);
    auto& memo = scratch_.counts;
    if (memo.has(key)) return memo.get(key);
    int total = 0;
    int bounds[kMaxRhs];
    for (int d = start_head_[head_key(start, sym)]; d >= 0 && total < 2; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      const auto& c = done_[static_cast<std::size_t>(d)];
      if (c.end != end) continue;
      const auto& rhs = g_.rhs_ids(c.rule);
      each_cut(c.rule, 0, start, end, bounds, [&](const int* b) {
        int product = 1;
        int from = start;
        for (std::size_t k = 0; k < rhs.size() && product > 0; ++k) {
          product = std::min(2, product * count(rhs[k], from, b[k]));
          from = b[k];
        }
        total = std::min(2, total + product);
      });
    }
    memo.put(key, total);
    return total;
  }

  // The only tree over [start, end); requires count(...) == 1.
  ParseTree build_one(int sym, int start, int end) const {
    ParseTree node;
    node.label = g_.symbol_name(sym);
    if (g_.is_preterminal(sym)) {
      const auto& tok = tokens_[static_cast<std::size_t>(start)];
      node.rule = lexical_rule(sym, start);
      node.word = tok.surface;
      node.reference = tok.reference;
      return node;
    }
    int bounds[kMaxRhs];
    for (int d = start_head_[head_key(start, sym)]; d >= 0 && node.rule < 0; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      const auto& c = done_[static_cast<std::size_t>(d)];
      if (c.end != end) continue;
      const auto& rhs = g_.rhs_ids(c.rule);
      each_cut(c.rule, 0, start, end, bounds, [&](const int* b) {
        if (node.rule >= 0) return;
        int from = start;
        for (std::size_t k = 0; k < rhs.size(); ++k) {
          if (count(rhs[k], from, b[k]) == 0) return;
          from = b[k];
        }
        node.rule = c.rule;
        node.children.reserve(rhs.size());
        from = start;
        for (std::size_t k = 0; k < rhs.size(); ++k) {
          node.children.push_back(build_one(rhs[k], from, b[k]));
          from = b[k];
        }
      });
    }
    return node;
  }

  // Every way to cut [pos, end) among the remaining children of `rule`.
  void splits(int rule, std::size_t k, int pos, int end, std::vector<int>& bounds,
              std::vector<std::vector<int>>& out) const {
    const auto& rhs = g_.rhs_ids(rule);
    if (k == rhs.size()) {
      if (pos == end) out.push_back(bounds);
      return;
    }
    const int sym = rhs[k];
    const int limit = end - static_cast<int>(rhs.size() - k - 1);  // later children need a token each
    if (g_.is_preterminal(sym)) {
      if (pos < limit && lexical_rule(sym, pos) >= 0) {
        bounds.push_back(pos + 1);
        splits(rule, k + 1, pos + 1, end, bounds, out);
        bounds.pop_back();
      }
      return;
    }
    std::uint64_t tried = 0;  // ends already explored, for short inputs
    std::vector<int> tried_long;
    for (int d = start_head_[head_key(pos, sym)]; d >= 0; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      const auto& c = done_[static_cast<std::size_t>(d)];
      if (g_.lhs_id(c.rule) != sym || c.end > limit) continue;
      if (c.end < 64) {
        if (tried & (std::uint64_t{1} << c.end)) continue;
        tried |= std::uint64_t{1} << c.end;
      } else {
        if (std::find(tried_long.begin(), tried_long.end(), c.end) != tried_long.end()) continue;
        tried_long.push_back(c.end);
      }
      bounds.push_back(c.end);
      splits(rule, k + 1, c.end, end, bounds, out);
      bounds.pop_back();
    }
  }

  std::vector<ParseTree> build(int symbol, int start, int end) const {
    std::vector<ParseTree> out;
    if (g_.is_preterminal(symbol)) {
      if (end != start + 1) return out;
      const int r = lexical_rule(symbol, start);
      if (r < 0) return out;
      const auto& tok = tokens_[static_cast<std::size_t>(start)];
      ParseTree leaf;
      leaf.label = g_.symbol_name(symbol);
      leaf.rule = r;
      leaf.word = tok.surface;
      leaf.reference = tok.reference;
      out.push_back(std::move(leaf));
      return out;
    }
    std::vector<int> bounds;
    std::vector<std::vector<int>> cuts;
    for (int d = start_head_[head_key(start, symbol)]; d >= 0; d = done_[static_cast<std::size_t>(d)].next_same_start) {
      const auto& c = done_[static_cast<std::size_t>(d)];
      if (c.end != end || g_.lhs_id(c.rule) != symbol) continue;
      cuts.clear();
      splits(c.rule, 0, start, end, bounds, cuts);
      const auto& rhs = g_.rhs_ids(c.rule);
      for (const auto& cut : cuts) {
        std::vector<std::vector<ParseTree>> alts;
        alts.reserve(rhs.size());
        int from = start;
        bool ok = true;
        for (std::size_t k = 0; k < rhs.size() && ok; ++k) {
          alts.push_back(build(rhs[k], from, cut[k]));
          ok = !alts.back().empty();
          from = cut[k];
        }
        if (!ok) continue;
        combine(c.rule, alts, out);
      }
    }
    return out;
  }

  // Cartesian product of child alternatives; the common single-choice case
  // moves subtrees instead of copying them.
  void combine(int rule, std::vector<std::vector<ParseTree>>& alts, std::vector<ParseTree>& out) const {
    ParseTree node;
    node.label = g_.symbol_name(g_.lhs_id(rule));
    node.rule = rule;
    const bool single = std::all_of(alts.begin(), alts.end(), [](const auto& a) { return a.size() == 1; });
    if (single) {
      node.children.reserve(alts.size());
      for (auto& a : alts) node.children.push_back(std::move(a.front()));
      out.push_back(std::move(node));
      return;
    }
    std::vector<std::size_t> pick(alts.size(), 0);
    for (;;) {
      ParseTree t = node;
      for (std::size_t k = 0; k < alts.size(); ++k) t.children.push_back(alts[k][pick[k]]);
      out.push_back(std::move(t));
      std::size_t k = alts.size();
      while (k > 0) {
        --k;
        if (++pick[k] < alts[k].size()) break;
        pick[k] = 0;
        if (k == 0) return;
      }
      if (alts.empty()) return;
    }
  }

  static constexpr int kMaxRhs = static_cast<int>(kMaxRuleLength);

  const Grammar& g_;
  std::span<const Token> tokens_;
  int n_;
  int syms_;
  ChartScratch& scratch_;
  std::vector<int>& lex_;
  std::vector<std::vector<Item>>& chart_;
  std::vector<int>& waiting_;
  std::vector<Constituent>& done_;
  std::vector<int>& start_head_;
  std::size_t cells_ = 0;
  int max_dot_ = 1;
};

std::size_t span_length(const ParseTree& t) {
  if (t.is_preterminal()) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children) n += span_length(c);
  return n;
}

void priority_key(const ParseTree& t, std::vector<long>& key) {
  key.push_back(t.rule);
  key.push_back(-static_cast<long>(span_length(t)));
  for (const auto& c : t.children) priority_key(c, key);
}

}  // namespace

std::vector<ParseTree> Parser::parse_all(std::span<const Token> tokens) const {
  if (tokens.empty()) throw SyntaxError("syntax error: empty sentence", 1);
  ChartParse chart(*grammar_, tokens);
  if (!chart.accepted()) {
    const std::size_t pos = chart.failure_position();
    if (pos > tokens.size()) {
      throw SyntaxError("syntax error: sentence ends early at position " + std::to_string(pos), pos);
    }
    throw SyntaxError("syntax error at position " + std::to_string(pos) + " ('" +
                          tokens[pos - 1].surface + "')",
                      pos);
  }
  auto trees = chart.trees();
  if (trees.size() > 1) {
    std::vector<std::pair<std::vector<long>, std::size_t>> keyed;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::vector<long> key;
      priority_key(trees[i], key);
      keyed.emplace_back(std::move(key), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<ParseTree> sorted;
    for (const auto& [key, i] : keyed) sorted.push_back(std::move(trees[i]));
    trees = std::move(sorted);
  }
  return trees;
}

ParseTree Parser::parse(std::span<const Token> tokens) const { return std::move(parse_all(tokens).front()); }

std::vector<ParseTree> parse(std::span<const Token> tokens) { return Parser().parse_all(tokens); }

ParseTree parse_first(std::string_view sentence) {
  const auto tokens = tokenize(sentence);
  return Parser().parse(tokens);
}

std::vector<Token> leaves(const ParseTree& t) {
  std::vector<Token> out;
  auto walk = [&](const auto& self, const ParseTree& n) -> void {
    if (n.is_preterminal()) {
      out.push_back({n.word, out.size(), n.reference});
      return;
    }
    for (const auto& c : n.children) self(self, c);
  };
  walk(walk, t);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

constexpr std::size_t kMargin = 70;

std::string decorated(const std::string& label) {
  if (label == "NP") return "NP[-pro, -wh]";
  if (label == "IN") return "SP[]";
  return label + "[]";
}

std::string flat(const ParseTree& t) {
  std::string s = "(" + decorated(t.label);
  if (t.is_preterminal()) return s + " " + t.word + ")";
  for (const auto& c : t.children) s += " " + flat(c);
  return s + ")";
}

std::string pretty(const ParseTree& t, std::size_t indent) {
  std::string s = flat(t);
  if (s.size() + indent < kMargin) return s;
  s = "(" + decorated(t.label);
  if (t.is_preterminal()) {
    return s + "\n" + std::string(indent + 2, ' ') + t.word + ")";
  }
  for (const auto& c : t.children) s += "\n" + std::string(indent + 2, ' ') + pretty(c, indent + 2);
  return s + ")";
}

}  // namespace

std::string render_tree(const ParseTree& t) { return pretty(t, 0); }

}  // namespace verba
