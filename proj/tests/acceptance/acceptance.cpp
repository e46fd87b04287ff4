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

// Acceptance run: one PASS/FAIL line per criterion with its measured time.
//
// Exit status is nonzero when any criterion fails on correctness. A run
// that is correct but slower than its time budget prints FAIL with the
// measured time and does not change the exit status, since the budgets
// depend on the machine.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "algebra_laws.hpp"
#include "goldens.hpp"
#include "language.hpp"
#include "match_instances.hpp"
#include "match_oracle.hpp"
#include "raster_oracle.hpp"
#include "verba/grammar.hpp"
#include "verba/region.hpp"
#include "verba/rules.hpp"
#include "verba/rules_io.hpp"
#include "verba/semantics.hpp"
#include "verba/shape_io.hpp"

using namespace verba;
using namespace verba::testing;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

// Exact interpretation of the simple locative sentence and its positional
// rendering.
Verdict golden_interpretation() {
  const SemStructure got = interpret_sentence(kSimpleSentence);
  if (!(got == simple_golden())) return fail("structure " + serialize(got));
  const std::string positional = serialize_positional(got);
  if (positional != kSimplePositional) return fail("positional " + positional);
  return {true, serialize(got)};
}

Verdict golden_action() {
  const SemStructure got = interpret_sentence(kActionSentence);
  if (!(got == action_golden())) return fail("structure " + serialize(got));
  if (serialize_positional(got) != kActionPositional) return fail("positional " + serialize_positional(got));
  return {true, serialize(got)};
}

Verdict complex_golden_check() {
  const auto tokens = tokenize(kComplexSentence);
  const auto trees = parse(tokens);
  if (trees.size() != 1) return fail(std::to_string(trees.size()) + " parses");
  const SemStructure got = interpret(trees[0]);
  if (!(got == complex_golden())) return fail("structure " + serialize(got));
  const SemStructure* lm = got.structure(Slot::kLandmark);
  const SemStructure* tr = got.structure(Slot::kTrajector);
  const bool landmark_ok = lm && lm->category() == Category::kAttribute && lm->word(Slot::kSelect) == "midpoint" &&
                           lm->structure(Slot::kAttribute) && lm->structure(Slot::kAttribute)->word(Slot::kAttribute) == "edge" &&
                           lm->structure(Slot::kDirection) && lm->structure(Slot::kDirection)->word(Slot::kDirection) == "right" &&
                           lm->structure(Slot::kShape) && lm->structure(Slot::kShape)->word(Slot::kShape) == "shape1";
  const bool trajector_ok = tr && tr->category() == Category::kDirection && tr->word(Slot::kComparative) == "upper" &&
                            tr->structure(Slot::kAttribute) && tr->structure(Slot::kAttribute)->word(Slot::kAttribute) == "corner" &&
                            tr->structure(Slot::kShape) && tr->structure(Slot::kShape)->word(Slot::kShape) == "shape2";
  if (!landmark_ok || !trajector_ok) return fail("participants " + serialize(got));
  if (got.word(Slot::kRelation) != "at" || got.word(Slot::kRegion) != "ttp-nttp") return fail("relation slots");
  return {true, "unique parse, " + serialize(got)};
}

Verdict lexicon_closure() {
  if (lexicon() != reference_lexicon()) return fail("lexicon differs (" + std::to_string(lexicon().size()) + " terms)");
  for (const auto& s : reference_sentences()) {
    try {
      validate(interpret_sentence(s));
    } catch (const std::exception& e) {
      return fail(s + ": " + e.what());
    }
  }
  return {true, "24 terms, " + std::to_string(reference_sentences().size()) + " example sentences"};
}

Verdict preposition_mapping() {
  const std::map<std::string, std::string> expected = {{"at", "ttp-nttp"}, {"on", "ec-ttp"}, {"in", "ec-ttp-nttp"}};
  const Grammar& g = Grammar::builtin();
  Language lang(g);
  std::vector<std::string> pool;
  for (int r : g.rules_for(g.symbol("S"))) {
    lang.for_each(r, 9, [&](const std::string& s) {
      for (const auto& t : tokenize(s)) {
        if (expected.count(t.surface)) {
          pool.push_back(s);
          break;
        }
      }
    });
  }
  if (pool.size() < 100) return fail("only " + std::to_string(pool.size()) + " locative sentences");
  std::map<std::string, int> seen;
  const std::size_t stride = pool.size() / 100;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::string& s = pool[i * stride];
    std::string prep;
    for (const auto& t : tokenize(s)) {
      if (expected.count(t.surface)) prep = t.surface;
    }
    const SemStructure m = interpret_sentence(s);
    if (m.word(Slot::kRelation) != prep || m.word(Slot::kRegion) != expected.at(prep)) {
      return fail(s + " -> " + serialize(m));
    }
    ++seen[prep];
  }
  if (seen.size() != 3) return fail("not every preposition sampled");
  return {true, "100 sentences (at " + std::to_string(seen["at"]) + ", on " + std::to_string(seen["on"]) + ", in " +
                    std::to_string(seen["in"]) + ")"};
}

Verdict shape_algebra() {
  int failures = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto failed = check_algebra_laws({1000 + i, i % 2 == 1});
    if (!failed.empty()) {
      if (failures++ == 0) first = "case " + std::to_string(i) + ": " + failed.front();
    }
  }
  if (failures) return fail(std::to_string(failures) + " failing cases, first " + first);
  return {true, "1000 random segment sets (half rotated by 45 degrees)"};
}

Verdict match_oracle() {
  const auto instances = match_instances();
  std::size_t transforms = 0;
  for (const auto& in : instances) {
    const auto got = find_matches(in.pattern, in.target, {.allow_reflection = in.allow_reflection});
    const auto want = oracle_matches(in.pattern, in.target, in.allow_reflection);
    std::string why;
    if (!same_transform_set(got, want, &why)) return fail(in.name + ": " + why);
    transforms += got.size();
  }
  if (instances.size() < 50) return fail("only " + std::to_string(instances.size()) + " instances");
  return {true, std::to_string(instances.size()) + " instances, " + std::to_string(transforms) + " transforms"};
}

Verdict rcc_oracle() {
  std::vector<IntRect> rects;
  for (int x0 = 0; x0 <= 8; ++x0)
    for (int x1 = x0 + 1; x1 <= 8; ++x1)
      for (int y0 = 0; y0 <= 8; ++y0)
        for (int y1 = y0 + 1; y1 <= 8; ++y1) rects.push_back({x0, y0, x1, y1});
  std::vector<std::vector<Region>> regions;
  for (const auto& r : rects) regions.push_back(extract_regions(axis_rectangle(r.x0, r.y0, r.x1, r.y1)));

  auto index_of = [](const IntRect& r) {
    // Position in the enumeration order above.
    std::size_t i = 0;
    for (int x0 = 0; x0 <= 8; ++x0)
      for (int x1 = x0 + 1; x1 <= 8; ++x1)
        for (int y0 = 0; y0 <= 8; ++y0)
          for (int y1 = y0 + 1; y1 <= 8; ++y1, ++i)
            if (x0 == r.x0 && x1 == r.x1 && y0 == r.y0 && y1 == r.y1) return i;
    return i;
  };

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, rects.size() - 1);
  std::uniform_int_distribution<int> grow(0, 2);
  std::map<RegionRelation, int> seen;
  const int kPairs = 10000;
  for (int i = 0; i < kPairs; ++i) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    // Uniform pairs are rarely nested; every fourth pair encloses the first
    // rectangle in a grown copy of itself.
    if (i % 4 == 0) {
      const IntRect& r = rects[a];
      b = index_of({std::max(0, r.x0 - grow(rng)), std::max(0, r.y0 - grow(rng)), std::min(8, r.x1 + grow(rng)),
                    std::min(8, r.y1 + grow(rng))});
    }
    const RegionRelation want = raster_relation(rects[a], rects[b]);
    const RegionRelation got = classify(regions[a], regions[b]);
    if (got != want) {
      const auto& x = rects[a];
      const auto& y = rects[b];
      char buf[160];
      std::snprintf(buf, sizeof buf, "(%d,%d)-(%d,%d) vs (%d,%d)-(%d,%d): %s, oracle %s", x.x0, x.y0, x.x1, x.y1, y.x0,
                    y.y0, y.x1, y.y1, std::string(to_string(got)).c_str(), std::string(to_string(want)).c_str());
      return fail(buf);
    }
    ++seen[got];
  }
  std::string counts;
  for (auto r : {RegionRelation::kEC, RegionRelation::kTPP, RegionRelation::kNTPP}) {
    counts += " " + std::string(to_string(r)) + "=" + std::to_string(seen[r]);
    if (seen[r] < 100) return fail("coverage:" + counts);
  }
  return {true, std::to_string(kPairs) + " pairs," + counts};
}

Verdict rewrite_soundness() {
  const std::string data = VERBA_TEST_DATA;
  const auto rules = load_rules(data + "/corner_square_rule.json");
  const Shape initial = load_shape(data + "/framed_square.json");
  const Derivation d = derive(rules, initial, Strategy::random(7), 3);
  if (d.steps.size() != 3) return fail(std::to_string(d.steps.size()) + " steps");
  const ShapeRule& rule = rules[0].shape_rule;
  Shape current = initial;
  int claims = 0;
  for (const auto& st : d.steps) {
    const std::string at = "step " + std::to_string(st.index) + ": ";
    if (!equal(st.before, current)) return fail(at + "does not chain");
    const Shape lhs = st.transform(rule.lhs);
    const Shape rhs = st.transform(rule.rhs);
    if (!subshape(lhs, st.before)) return fail(at + "lhs not a part");
    if (!equal(st.after, sum(difference(st.before, lhs), rhs))) return fail(at + "rewrite mismatch");
    if (!equal(st.binding.shape2, rhs) || !equal(st.binding.shape1, difference(st.after, rhs))) {
      return fail(at + "binding mismatch");
    }
    for (const auto& text : st.descriptions) {
      try {
        (void)interpret_sentence(text);
      } catch (const std::exception& e) {
        return fail(at + text + ": " + e.what());
      }
    }
    for (const auto& v : st.verification) {
      const SemStructure m = interpret_sentence(v.sentence);
      if (m.category() != Category::kSpatialRelation) continue;
      ++claims;
      if (v.status == VerificationStatus::kRefuted) return fail(at + v.sentence + " refuted");
      if (v.status != VerificationStatus::kVerified && !v.coarse) return fail(at + v.sentence + " " + v.note);
    }
    current = st.after;
  }
  const std::string once = trace_text(d);
  const std::string twice = trace_text(derive(rules, initial, Strategy::random(7), 3));
  if (once != twice) return fail("traces differ between runs");
  return {true, "3 steps, " + std::to_string(claims) + " claims verified, identical " + std::to_string(once.size()) +
                    "-byte traces"};
}

Verdict style_round_trip() {
  const Grammar& g = Grammar::builtin();
  Language lang(g);
  const int rule = lang.rule_with_tag("predication");
  if (rule < 0) return fail("no predication rule");
  const std::size_t total = lang.count(rule, 20);

  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> done{0}, failures{0};
  std::mutex mu;
  std::string first;
  auto worker = [&](unsigned id) {
    Language local(g);
    std::size_t i = 0;
    local.for_each(rule, 20, [&](const std::string& s) {
      if (i++ % threads != id) return;
      std::string back;
      try {
        back = convert_style(convert_style(s, Style::kConstructive), Style::kFromAbove);
      } catch (const std::exception& e) {
        back = std::string("error: ") + e.what();
      }
      if (back != s) {
        std::lock_guard lock(mu);
        if (failures++ == 0) first = s + " -> " + back;
      }
      ++done;
    });
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();
  if (done != total) return fail("visited " + std::to_string(done.load()) + " of " + std::to_string(total));
  if (failures) return fail(std::to_string(failures.load()) + " of " + std::to_string(total) + " fail, first " + first);
  return {true, std::to_string(total) + " sentences on " + std::to_string(threads) + " thread(s)"};
}

}  // namespace

int main(int argc, char** argv) {
  // An optional argument restricts the run to criteria whose name contains it.
  const std::string only = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"golden-interpretation", 1, golden_interpretation},
      {"golden-action", 1, golden_action},
      {"complex-golden", 1, complex_golden_check},
      {"lexicon-closure", 1, lexicon_closure},
      {"preposition-mapping", 1e9, preposition_mapping},
      {"shape-algebra-properties", 10, shape_algebra},
      {"match-oracle-equivalence", 30, match_oracle},
      {"rcc-oracle-equivalence", 30, rcc_oracle},
      {"rewrite-soundness-and-joint-derivation", 5, rewrite_soundness},
      {"style-round-trip", 30, style_round_trip},
  };
  int wrong = 0, slow = 0;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (std::string(c.name).find(only) == std::string::npos) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    if (!v.ok) ++wrong;
    if (v.ok && !in_time) ++slow;
    std::string timing = std::to_string(secs);
    timing.resize(timing.find('.') + 4);
    timing += "s";
    if (c.budget_seconds < 1e9) {
      char budget[32];
      std::snprintf(budget, sizeof budget, "%g", c.budget_seconds);
      timing += std::string(in_time ? " within " : " over the ") + budget + "s budget";
    }
    std::printf("%s %s [%s] %s\n", v.ok && in_time ? "PASS" : "FAIL", c.name, timing.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria: %zu passed, %d failed on correctness, %d only over their time budget\n", ran,
              ran - static_cast<std::size_t>(wrong + slow), wrong, slow);
  return wrong == 0 ? 0 : 1;
}
