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

#ifndef VERBA_GEOMETRY_HPP_
#define VERBA_GEOMETRY_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace verba {

// Numeric model shared by every geometric module.
namespace tol {
// Two points closer than this are the same point.
inline constexpr double kAbs = 1e-9;
// Relative tolerance for direction and length comparisons.
inline constexpr double kRel = 1e-9;
// Grid used for canonical ordering and hashing of coordinates.
inline constexpr double kGrid = 1e-6;
}  // namespace tol

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Absolute tolerance grown with coordinate magnitude so that far-off
// coordinates do not fall below floating-point resolution.
inline double scaled_tol(Point a) {
  return tol::kAbs * std::max(1.0, std::max(std::abs(a.x), std::abs(a.y)));
}

inline bool coincident(Point a, Point b) {
  return distance(a, b) <= std::max(scaled_tol(a), scaled_tol(b));
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Quantized coordinate, used for canonical ordering.
inline std::int64_t grid_key(double v) {
  return static_cast<std::int64_t>(std::llround(v / tol::kGrid));
}

// Total order on points by their grid keys, x first.
inline std::strong_ordering grid_order(Point a, Point b) {
  if (auto c = grid_key(a.x) <=> grid_key(b.x); c != 0) return c;
  return grid_key(a.y) <=> grid_key(b.y);
}

// A non-degenerate straight segment. Endpoints are stored in canonical
// order so that Segment(p, q) == Segment(q, p).
class Segment {
 public:
  // Throws GeometryError for coincident or non-finite endpoints.
  Segment(Point p, Point q);

  Point p() const { return p_; }
  Point q() const { return q_; }
  double length() const { return distance(p_, q_); }
  Point direction() const;  // unit vector from p to q
  Point midpoint() const { return 0.5 * (p_ + q_); }

  // Exact coordinate equality of the stored endpoints.
  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point p_;
  Point q_;
};

// Tolerant segment equality.
bool same_segment(const Segment& a, const Segment& b);

// Canonical order for segments: by start point then end point on the grid.
std::strong_ordering canonical_order(const Segment& a, const Segment& b);

// The infinite line carrying a segment: unit normal and offset, with the
// normal's sign fixed so that every segment of a line yields the same value.
struct Carrier {
  Point normal;
  double offset = 0.0;

  static Carrier of(const Segment& s);

  Point direction() const { return {normal.y, -normal.x}; }
  double signed_distance(Point p) const { return dot(normal, p) - offset; }
  bool contains(Point p) const;
  bool parallel_to(const Carrier& other) const;
  bool same_line(const Carrier& other) const;
};

// Intersection point of two non-parallel carriers.
Point intersect(const Carrier& a, const Carrier& b);

std::string to_string(Point p);

}  // namespace verba

#endif  // VERBA_GEOMETRY_HPP_
