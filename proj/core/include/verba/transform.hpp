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

#ifndef VERBA_TRANSFORM_HPP_
#define VERBA_TRANSFORM_HPP_

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "verba/geometry.hpp"
#include "verba/shape.hpp"

namespace verba {

// Plane similarity x -> L x + t where L = s R, R a rotation optionally
// composed with a reflection and s > 0 a uniform scale.
class Transform {
 public:
  // Identity.
  Transform() = default;

  // Throws GeometryError unless (a b; c d) is a non-degenerate similarity.
  Transform(double a, double b, double c, double d, double tx, double ty);

  static Transform translation(double tx, double ty);
  static Transform rotation(double radians);
  static Transform scaling(double s);
  static Transform reflection_x();  // (x, y) -> (x, -y)

  // Unique similarity sending p1 -> q1 and p2 -> q2. `reflect` selects the
  // orientation-reversing one.
  static Transform from_correspondence(Point p1, Point p2, Point q1, Point q2, bool reflect);

  Point operator()(Point p) const;
  Segment operator()(const Segment& s) const;
  Shape operator()(const Shape& s) const;

  // (this * other)(x) = this(other(x)).
  Transform operator*(const Transform& other) const;
  Transform inverse() const;

  double scale() const;
  bool reflects() const { return a_ * d_ - b_ * c_ < 0.0; }

  // a, b, c, d, tx, ty.
  std::array<double, 6> coefficients() const { return {a_, b_, c_, d_, tx_, ty_}; }

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
  double tx_ = 0.0, ty_ = 0.0;
};

bool same_transform(const Transform& x, const Transform& y);

// Order by the coefficients quantized to the canonical grid.
std::strong_ordering canonical_order(const Transform& x, const Transform& y);

std::string to_string(const Transform& t);

inline Shape apply_transform(const Transform& t, const Shape& s) { return t(s); }

struct MatchOptions {
  bool allow_reflection = true;
};

// All similarities t with t(a) a subshape of s, labels included,
// deduplicated and in canonical order. Throws UnderdeterminedMatchError when
// `a` has fewer than two distinct carrier intersection points.
std::vector<Transform> find_matches(const Shape& a, const Shape& s, const MatchOptions& opts = {});

}  // namespace verba

#endif  // VERBA_TRANSFORM_HPP_
