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

#ifndef VERBA_TESTS_MATCH_INSTANCES_HPP_
#define VERBA_TESTS_MATCH_INSTANCES_HPP_

#include <string>
#include <vector>

#include "verba/shape.hpp"

namespace verba::testing {

struct MatchInstance {
  std::string name;
  Shape pattern;
  Shape target;
  bool allow_reflection;
};

// Squares, nested squares and grids with emergent sub-squares, each
// pattern against each target, with and without reflections.
std::vector<MatchInstance> match_instances();

}  // namespace verba::testing

#endif  // VERBA_TESTS_MATCH_INSTANCES_HPP_
