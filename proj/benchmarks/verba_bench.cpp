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

#include <benchmark/benchmark.h>

#include <vector>

#include "verba/grammar.hpp"
#include "verba/region.hpp"
#include "verba/semantics.hpp"
#include "verba/transform.hpp"

namespace {

using namespace verba;

Shape grid(int n) {
  std::vector<Segment> segs;
  for (int i = 0; i <= n; ++i) {
    segs.emplace_back(Point{0, double(i)}, Point{double(n), double(i)});
    segs.emplace_back(Point{double(i), 0}, Point{double(i), double(n)});
  }
  return Shape::canonicalize(segs);
}

const char* const kSentences[] = {
    "shape1 is at shape2",
    "the upper left corner of shape2 is at the midpoint of the right edge of shape1",
    "the the the the the the midpoint of the right edge of shape1 is on the the the the bottom edge of shape2",
};

void BM_FindMatches(benchmark::State& state) {
  const Shape a = axis_rectangle(0, 0, 1, 1);
  const Shape s = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_matches(a, s));
}
BENCHMARK(BM_FindMatches)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Sum(benchmark::State& state) {
  const Shape a = grid(static_cast<int>(state.range(0)));
  const Shape b = Transform::translation(0.5, 0.5)(a);
  for (auto _ : state) benchmark::DoNotOptimize(sum(a, b));
}
BENCHMARK(BM_Sum)->Arg(4)->Arg(16);

void BM_ExtractRegions(benchmark::State& state) {
  const Shape s = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_regions(s));
}
BENCHMARK(BM_ExtractRegions)->Arg(2)->Arg(8);

void BM_Classify(benchmark::State& state) {
  const auto x = extract_regions(axis_rectangle(1, 1, 2, 2));
  const auto y = extract_regions(axis_rectangle(0, 0, 3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify(x, y));
}
BENCHMARK(BM_Classify);

void BM_Parse(benchmark::State& state) {
  const auto tokens = tokenize(kSentences[state.range(0)]);
  const Parser parser;
  for (auto _ : state) benchmark::DoNotOptimize(parser.parse(tokens));
  state.SetLabel(std::to_string(tokens.size()) + " tokens");
}
BENCHMARK(BM_Parse)->DenseRange(0, 2);

void BM_Interpret(benchmark::State& state) {
  const ParseTree tree = parse_first(kSentences[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(interpret(tree));
}
BENCHMARK(BM_Interpret)->DenseRange(0, 2);

void BM_StyleRoundTrip(benchmark::State& state) {
  const char* s = kSentences[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(convert_style(convert_style(s, Style::kConstructive), Style::kFromAbove));
  }
}
BENCHMARK(BM_StyleRoundTrip)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
