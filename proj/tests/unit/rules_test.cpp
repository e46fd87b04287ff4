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

#include <numbers>
#include <string>

#include "doctest.h"
#include "match_oracle.hpp"
#include "verba/error.hpp"
#include "verba/rules.hpp"
#include "verba/rules_io.hpp"
#include "verba/shape_io.hpp"

using namespace verba;
using namespace verba::testing;

namespace {

const std::string kData = VERBA_TEST_DATA;

Shape dotted(const Shape& s, Point p) { return s.with_labels(std::vector{LabelledPoint(p, kRegistrationMark)}); }

RulePair pair(std::string name, Shape lhs, Shape rhs, std::string constructive = "add <shape2> to <shape1>",
              std::vector<std::string> from_above = {}) {
  return {{std::move(name), std::move(lhs), std::move(rhs)}, {std::move(constructive), std::move(from_above)}};
}

Binding bound(Shape one, Shape two) { return {std::move(one), std::move(two)}; }

}  // namespace

TEST_CASE("applicable") {
  const Shape sq = dotted(axis_rectangle(0, 0, 1, 1), {0.25, 0.75});
  const ShapeRule same{"same", sq, sq};
  const auto ms = applicable(same, sq);
  REQUIRE(!ms.empty());
  CHECK(std::any_of(ms.begin(), ms.end(), [](const Transform& t) { return same_transform(t, Transform()); }));

  const Point tri[] = {{0, 0}, {1, 0}, {0, 1}};
  CHECK(applicable({"tri", polyline(tri, true), Shape{}}, sq).empty());

  // Distractors: a second square and a crossing line.
  const Shape s = sum(sum(dotted(axis_rectangle(0, 0, 2, 2), {0.5, 1.5}), axis_rectangle(3, 0, 5, 2)),
                      Shape::canonicalize(std::vector{Segment({-1, 1}, {6, 1})}));
  const auto got = applicable(same, s);
  CHECK(!got.empty());
  CHECK(same_transform_set(got, oracle_matches(sq, s, true)));
}

TEST_CASE("apply") {
  const Shape sq = axis_rectangle(0, 0, 1, 1);
  const Shape s = sum(sq, axis_rectangle(2, 0, 3, 1));
  SUBCASE("identity rule leaves the shape unchanged") {
    const ShapeRule r{"keep", sq, sq};
    for (const auto& t : applicable(r, s)) CHECK(equal(apply(r, s, t), s));
  }
  SUBCASE("erasing rule empties a matching shape") {
    const ShapeRule r{"erase", sq, Shape{}};
    CHECK(apply(r, sq, Transform()).empty());
  }
  SUBCASE("additive rule adds the transformed increment") {
    const Shape rhs = sum(sq, axis_rectangle(1, 0, 2, 1));
    const ShapeRule r{"grow", sq, rhs};
    for (const auto& t : applicable(r, s)) {
      CHECK(equal(apply(r, s, t), sum(s, t(difference(rhs, sq)))));
    }
  }
  SUBCASE("stale transforms are rejected") {
    const ShapeRule r{"keep", sq, sq};
    CHECK_THROWS_AS(apply(r, s, Transform::translation(10, 10)), RuleError);
  }
}

TEST_CASE("bind splits the new shape") {
  const Shape sq = axis_rectangle(0, 0, 1, 1);
  const ShapeRule r{"grow", sq, sum(sq, axis_rectangle(1, 0, 2, 1))};
  const Shape s = axis_rectangle(-5, -5, -4, -4);
  const Shape init = sum(sq, s);
  const Shape after = apply(r, init, Transform());
  const Binding b = bind(r, after, Transform());
  CHECK(equal(b.shape2, r.rhs));
  CHECK(equal(b.shape1, s));
  CHECK(equal(sum(b.shape1, b.shape2), after));
}

TEST_CASE("verify_sentence") {
  const Shape outer = axis_rectangle(0, 0, 3, 3);
  const Shape inner = axis_rectangle(1, 1, 2, 2);
  SUBCASE("nested squares, in") {
    const auto v = verify_sentence("shape2 is in shape1", bound(outer, inner));
    CHECK(v.status == VerificationStatus::kVerified);
    CHECK(v.relation == RegionRelation::kNTPP);
    CHECK_FALSE(v.coarse);
  }
  SUBCASE("edge-adjacent squares, on") {
    const auto v = verify_sentence("shape2 is on shape1", bound(axis_rectangle(0, 0, 1, 1), axis_rectangle(1, 0, 2, 1)));
    CHECK(v.status == VerificationStatus::kVerified);
    CHECK(v.relation == RegionRelation::kEC);
  }
  SUBCASE("disjoint squares, at") {
    const auto v = verify_sentence("shape1 is at shape2", bound(axis_rectangle(0, 0, 1, 1), axis_rectangle(3, 0, 4, 1)));
    CHECK(v.status == VerificationStatus::kRefuted);
    CHECK(v.relation == RegionRelation::kDC);
  }
  SUBCASE("open polyline") {
    const Point open[] = {{1, 1}, {2, 1}, {2, 2}};
    const auto v = verify_sentence("<shape2> is in <shape1>.", bound(outer, polyline(open, false)));
    CHECK(v.status == VerificationStatus::kUnverifiable);
    CHECK(v.note == "no closed region");
  }
  SUBCASE("actions carry no relation") {
    const auto v = verify_sentence("add shape2 to shape1", bound(outer, inner));
    CHECK(v.status == VerificationStatus::kUnverifiable);
    CHECK(v.note == "no spatial relation");
  }
  SUBCASE("attribute claims are checked on whole shapes") {
    const auto v = verify_sentence("the top edge of shape2 is at the midpoint of the left edge of shape1", bound(outer, inner));
    CHECK(v.coarse);
    CHECK(v.status == VerificationStatus::kVerified);
  }
  SUBCASE("verdicts survive a common similarity") {
    const Transform t = Transform::translation(4, -1) * Transform::rotation(0.4) * Transform::scaling(0.3);
    const auto v = verify_sentence("shape2 is in shape1", bound(t(outer), t(inner)));
    CHECK(v.status == VerificationStatus::kVerified);
    CHECK(v.relation == RegionRelation::kNTPP);
  }
}

TEST_CASE("instantiate normalizes templates") {
  CHECK(instantiate("Add <shape2> to <shape1>") == "add <shape2> to <shape1>.");
  CHECK(instantiate("<shape2> is in <shape1>.") == "<shape2> is in <shape1>.");
}

TEST_CASE("rule validation") {
  const Shape sq = axis_rectangle(0, 0, 1, 1);
  CHECK_NOTHROW(validate_rule(pair("ok", sq, sq, "add <shape2> to <shape1>", {"<shape2> is in <shape1>"})));
  CHECK_THROWS_AS(validate_rule(pair("", sq, sq)), RuleError);
  CHECK_THROWS_AS(validate_rule(pair("bad", sq, sq, "add <shape2> beside <shape1>")), RuleError);
  CHECK_THROWS_AS(validate_rule(pair("bad", sq, sq, "add <shape2> to")), RuleError);
  CHECK_THROWS_AS(validate_rule(pair("bad", sq, sq, "")), RuleError);
  const Shape line = Shape::canonicalize(std::vector{Segment({0, 0}, {1, 0})});
  CHECK_THROWS_AS(validate_rule(pair("line", line, line)), RuleError);
  const std::vector<RulePair> dup{pair("a", sq, sq), pair("a", sq, sq)};
  CHECK_THROWS_AS(validate_rule_set(dup), RuleError);
}

TEST_CASE("step") {
  const auto rules = load_rules(kData + "/corner_square_rule.json");
  const Shape s = load_shape(kData + "/framed_square.json");
  const auto ms = applicable(rules[0].shape_rule, s);
  REQUIRE(!ms.empty());
  const DerivationStep st = step(rules[0], s, ms[0]);
  CHECK(st.descriptions.size() == 3);
  CHECK(st.descriptions[0] == "add <shape2> to <shape1>.");
  CHECK(st.semantics.size() == 3);
  CHECK(check_step(rules[0], st));
  CHECK(st.verification[0].status == VerificationStatus::kUnverifiable);
  CHECK(st.verification[1].status == VerificationStatus::kVerified);
  CHECK(st.verification[1].relation == RegionRelation::kNTPP);

  DerivationStep broken = st;
  broken.after = st.before;
  CHECK_FALSE(check_step(rules[0], broken));
}

TEST_CASE("derive") {
  const auto rules = load_rules(kData + "/corner_square_rule.json");
  const Shape s = load_shape(kData + "/framed_square.json");

  SUBCASE("zero steps") {
    const Derivation d = derive(rules, s, Strategy::first(), 0);
    CHECK(d.steps.empty());
    CHECK(d.termination == Termination::kMaxSteps);
  }
  SUBCASE("three chained steps") {
    const Derivation d = derive(rules, s, Strategy::first(), 3);
    REQUIRE(d.steps.size() == 3);
    CHECK(d.termination == Termination::kMaxSteps);
    CHECK(equal(d.steps[0].before, s));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(d.steps[i].index == i + 1);
      CHECK(check_step(rules[0], d.steps[i]));
      if (i > 0) CHECK(equal(d.steps[i].before, d.steps[i - 1].after));
      for (std::size_t k = 1; k < d.steps[i].verification.size(); ++k) {
        CHECK(d.steps[i].verification[k].status == VerificationStatus::kVerified);
      }
    }
  }
  SUBCASE("label removal stops the run") {
    const Shape sq = axis_rectangle(0, 0, 1, 1);
    const std::vector<RulePair> erase{pair("unmark", dotted(sq, {0.5, 0.25}), sq)};
    const Derivation d = derive(erase, dotted(sq, {0.5, 0.25}), Strategy::first(), 10);
    CHECK(d.steps.size() == 1);
    CHECK(d.termination == Termination::kNoLabel);
  }
  SUBCASE("no applicable rule") {
    const Point tri[] = {{0, 0}, {1, 0}, {0, 1}};
    const std::vector<RulePair> none{pair("tri", dotted(polyline(tri, true), {0.2, 0.2}), Shape{})};
    const Derivation d = derive(none, s, Strategy::first(), 10);
    CHECK(d.steps.empty());
    CHECK(d.termination == Termination::kNoMatch);
  }
  SUBCASE("random strategy is reproducible") {
    const auto a = trace_text(derive(rules, s, Strategy::random(42), 3));
    const auto b = trace_text(derive(rules, s, Strategy::random(42), 3));
    CHECK(a == b);
  }
  SUBCASE("script") {
    const auto ms = applicable(rules[0].shape_rule, s);
    REQUIRE(ms.size() == 2);
    const Derivation d = derive(rules, s, Strategy::scripted({{"corner-square", 1}}), 10);
    REQUIRE(d.steps.size() == 1);
    CHECK(same_transform(d.steps[0].transform, ms[1]));
    CHECK(d.termination == Termination::kMaxSteps);
    CHECK_THROWS_AS(derive(rules, s, Strategy::scripted({{"corner-square", 7}}), 10), RuleError);
    CHECK_THROWS_AS(derive(rules, s, Strategy::scripted({{"missing", 0}}), 10), RuleError);
  }
}

TEST_CASE("names") {
  CHECK(to_string(VerificationStatus::kRefuted) == "refuted");
  CHECK(to_string(Termination::kNoLabel) == "no-label");
  CHECK(to_string(Termination::kNoMatch) == "no-match");
  CHECK(to_string(Termination::kMaxSteps) == "max-steps");
}
