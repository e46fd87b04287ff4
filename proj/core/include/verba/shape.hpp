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

#ifndef VERBA_SHAPE_HPP_
#define VERBA_SHAPE_HPP_

#include <span>
#include <string>
#include <vector>

#include "verba/geometry.hpp"

namespace verba {

// The registration mark of shape rules.
inline constexpr const char* kRegistrationMark = "dot";

struct LabelledPoint {
  Point at;
  std::string label;

  // Throws GeometryError on an empty label or non-finite point.
  LabelledPoint(Point at, std::string label);
};

bool same_label(const LabelledPoint& a, const LabelledPoint& b);

// A set of maximal line segments plus labelled points. Every constructor
// canonicalizes: collinear overlapping or abutting segments are merged,
// duplicate labels collapse and both lists are sorted canonically. Values
// are immutable.
class Shape {
 public:
  Shape() = default;

  static Shape canonicalize(std::span<const Segment> segments,
                            std::span<const LabelledPoint> labels = {});

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<LabelledPoint>& labels() const { return labels_; }
  bool empty() const { return segments_.empty() && labels_.empty(); }
  bool has_segments() const { return !segments_.empty(); }

  // Same shape with all labels dropped / with extra labels.
  Shape without_labels() const;
  Shape with_labels(std::span<const LabelledPoint> extra) const;

 private:
  std::vector<Segment> segments_;
  std::vector<LabelledPoint> labels_;
};

Shape sum(const Shape& a, const Shape& b);
// Shared one-dimensional parts; isolated crossing points are dropped.
Shape product(const Shape& a, const Shape& b);
Shape difference(const Shape& a, const Shape& b);
bool subshape(const Shape& a, const Shape& s);
bool equal(const Shape& a, const Shape& b);

inline Shape operator+(const Shape& a, const Shape& b) { return sum(a, b); }
inline Shape operator-(const Shape& a, const Shape& b) { return difference(a, b); }

// Pairwise intersection points of the shape's non-parallel carriers,
// deduplicated and sorted canonically. These survive any embedding of the
// shape into a larger one, unlike segment endpoints.
std::vector<Point> carrier_intersections(const Shape& s);

// Number of distinct carriers of the shape.
std::size_t carrier_count(const Shape& s);

std::string debug_string(const Shape& s);

// Convenience builders used by tests, tools and benchmarks.
Shape axis_rectangle(double x0, double y0, double x1, double y1);
Shape polyline(std::span<const Point> pts, bool closed);

}  // namespace verba

#endif  // VERBA_SHAPE_HPP_
