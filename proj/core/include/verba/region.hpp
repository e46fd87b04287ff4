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

#ifndef VERBA_REGION_HPP_
#define VERBA_REGION_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verba/shape.hpp"

namespace verba {

// Simple polygon bounded by segments of a shape, counterclockwise, starting
// at its canonically smallest vertex.
class Region {
 public:
  // Throws GeometryError for fewer than three vertices or a clockwise /
  // zero-area boundary.
  explicit Region(std::vector<Point> boundary);

  const std::vector<Point>& boundary() const { return boundary_; }
  double area() const;
  bool contains_strictly(Point p) const;  // undefined for boundary points

 private:
  std::vector<Point> boundary_;
};

double signed_area(std::span<const Point> polygon);

// Bounded faces of the planar arrangement formed by the shape's segments.
// Dangling edges and bridges are ignored; holes are not subtracted, so a
// square drawn inside another yields two overlapping regions.
std::vector<Region> extract_regions(const Shape& s);

// RCC8. Values are JEPD: exactly one holds for any ordered pair.
enum class RegionRelation { kDC, kEC, kPO, kTPP, kNTPP, kEQ, kTPPi, kNTPPi };

std::string_view to_string(RegionRelation r);
RegionRelation inverse(RegionRelation r);

// A spatial entity as the union of one or more regions.
using RegionSet = std::span<const Region>;

// Point-set realizations of the calculus primitives on region unions:
// connect = closures meet, part = closure containment,
// overlap = interiors share positive area.
bool connect(RegionSet x, RegionSet y);
bool part(RegionSet x, RegionSet y);
bool overlap(RegionSet x, RegionSet y);
RegionRelation classify(RegionSet x, RegionSet y);

inline bool connect(const Region& x, const Region& y) { return connect(RegionSet(&x, 1), RegionSet(&y, 1)); }
inline bool part(const Region& x, const Region& y) { return part(RegionSet(&x, 1), RegionSet(&y, 1)); }
inline bool overlap(const Region& x, const Region& y) { return overlap(RegionSet(&x, 1), RegionSet(&y, 1)); }
inline RegionRelation classify(const Region& x, const Region& y) { return classify(RegionSet(&x, 1), RegionSet(&y, 1)); }

// Relations a locative preposition may denote:
//   at -> {TPP, NTPP}, on -> {EC, TPP}, in -> {EC, TPP, NTPP}.
std::span<const RegionRelation> preposition_relations(std::string_view preposition);
bool is_mapped_preposition(std::string_view preposition);

// Region string carried by the semantic structure of a preposition:
// "ttp-nttp", "ec-ttp", "ec-ttp-nttp".
std::string_view preposition_region(std::string_view preposition);

// Throws CompositionError for an unmapped preposition.
bool check_preposition(std::string_view preposition, RegionSet trajector, RegionSet landmark);
inline bool check_preposition(std::string_view preposition, const Region& trajector, const Region& landmark) {
  return check_preposition(preposition, RegionSet(&trajector, 1), RegionSet(&landmark, 1));
}

}  // namespace verba

#endif  // VERBA_REGION_HPP_
