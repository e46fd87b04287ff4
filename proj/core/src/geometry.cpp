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

#include "verba/geometry.hpp"

#include <cstdio>

#include "verba/error.hpp"

namespace verba {

Segment::Segment(Point p, Point q) {
  if (!is_finite(p) || !is_finite(q)) {
    throw GeometryError("segment has a non-finite coordinate");
  }
  if (coincident(p, q)) {
    throw GeometryError("zero-length segment at " + to_string(p));
  }
  if (grid_order(q, p) < 0 || (grid_order(q, p) == 0 && (q.x < p.x || (q.x == p.x && q.y < p.y)))) {
    std::swap(p, q);
  }
  p_ = p;
  q_ = q;
}

Point Segment::direction() const {
  const Point d = q_ - p_;
  return (1.0 / norm(d)) * d;
}

bool same_segment(const Segment& a, const Segment& b) {
  return (coincident(a.p(), b.p()) && coincident(a.q(), b.q())) ||
         (coincident(a.p(), b.q()) && coincident(a.q(), b.p()));
}

std::strong_ordering canonical_order(const Segment& a, const Segment& b) {
  if (auto c = grid_order(a.p(), b.p()); c != 0) return c;
  return grid_order(a.q(), b.q());
}

Carrier Carrier::of(const Segment& s) {
  Point d = s.direction();
  // Direction angle folded into [0, pi).
  if (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) d = -1.0 * d;
  Carrier c;
  c.normal = {-d.y, d.x};
  c.offset = dot(c.normal, s.p());
  return c;
}

bool Carrier::contains(Point p) const {
  return std::abs(signed_distance(p)) <= scaled_tol(p);
}

bool Carrier::parallel_to(const Carrier& other) const {
  return std::abs(cross(normal, other.normal)) <= tol::kRel;
}

bool Carrier::same_line(const Carrier& other) const {
  return parallel_to(other) && contains(other.offset * other.normal);
}

Point intersect(const Carrier& a, const Carrier& b) {
  const double det = cross(a.normal, b.normal);
  // Solve n_a . p = c_a, n_b . p = c_b.
  return {(a.offset * b.normal.y - b.offset * a.normal.y) / det,
          (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

std::string to_string(Point p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%g, %g)", p.x, p.y);
  return buf;
}

}  // namespace verba
