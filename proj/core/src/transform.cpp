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

#include "verba/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <unordered_map>

#include "verba/error.hpp"

namespace verba {

namespace {

constexpr double kSimilarityTol = 1e-8;

bool is_similarity(double a, double b, double c, double d) {
  const double s = std::sqrt(std::abs(a * d - b * c));
  const double slack = kSimilarityTol * std::max(1.0, s);
  const bool direct = std::abs(a - d) <= slack && std::abs(b + c) <= slack;
  const bool reflected = std::abs(a + d) <= slack && std::abs(b - c) <= slack;
  return direct || reflected;
}

}  // namespace

Transform::Transform(double a, double b, double c, double d, double tx, double ty)
    : a_(a), b_(b), c_(c), d_(d), tx_(tx), ty_(ty) {
  for (double v : {a, b, c, d, tx, ty}) {
    if (!std::isfinite(v)) throw GeometryError("transform has a non-finite coefficient");
  }
  if (scale() <= tol::kAbs) throw GeometryError("degenerate transform: scale " + std::to_string(scale()));
  if (!is_similarity(a, b, c, d)) throw GeometryError("transform is not a similarity: " + to_string(*this));
}

Transform Transform::translation(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }

Transform Transform::rotation(double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  return {c, -s, s, c, 0, 0};
}

Transform Transform::scaling(double s) { return {s, 0, 0, s, 0, 0}; }

Transform Transform::reflection_x() { return {1, 0, 0, -1, 0, 0}; }

Transform Transform::from_correspondence(Point p1, Point p2, Point q1, Point q2, bool reflect) {
  using C = std::complex<double>;
  const C dp(p2.x - p1.x, p2.y - p1.y);
  const C dq(q2.x - q1.x, q2.y - q1.y);
  if (std::abs(dp) <= tol::kAbs) throw GeometryError("correspondence source points coincide");
  const C alpha = reflect ? dq / std::conj(dp) : dq / dp;
  const double ar = alpha.real(), ai = alpha.imag();
  const double a = ar, b = reflect ? ai : -ai, c = ai, d = reflect ? -ar : ar;
  return {a, b, c, d, q1.x - (a * p1.x + b * p1.y), q1.y - (c * p1.x + d * p1.y)};
}

Point Transform::operator()(Point p) const {
  return {a_ * p.x + b_ * p.y + tx_, c_ * p.x + d_ * p.y + ty_};
}

Segment Transform::operator()(const Segment& s) const { return {(*this)(s.p()), (*this)(s.q())}; }

Shape Transform::operator()(const Shape& s) const {
  std::vector<Segment> segs;
  segs.reserve(s.segments().size());
  for (const auto& seg : s.segments()) segs.push_back((*this)(seg));
  std::vector<LabelledPoint> labels;
  labels.reserve(s.labels().size());
  for (const auto& l : s.labels()) labels.emplace_back((*this)(l.at), l.label);
  return Shape::canonicalize(segs, labels);
}

Transform Transform::operator*(const Transform& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
          c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_,
          a_ * o.tx_ + b_ * o.ty_ + tx_, c_ * o.tx_ + d_ * o.ty_ + ty_};
}

Transform Transform::inverse() const {
  const double det = a_ * d_ - b_ * c_;
  const double ia = d_ / det, ib = -b_ / det, ic = -c_ / det, id = a_ / det;
  return {ia, ib, ic, id, -(ia * tx_ + ib * ty_), -(ic * tx_ + id * ty_)};
}

double Transform::scale() const { return std::sqrt(std::abs(a_ * d_ - b_ * c_)); }

bool same_transform(const Transform& x, const Transform& y) {
  const auto cx = x.coefficients(), cy = y.coefficients();
  for (std::size_t i = 0; i < cx.size(); ++i) {
    const double slack = 1e-7 * std::max(1.0, std::max(std::abs(cx[i]), std::abs(cy[i])));
    if (std::abs(cx[i] - cy[i]) > slack) return false;
  }
  return true;
}

std::strong_ordering canonical_order(const Transform& x, const Transform& y) {
  const auto cx = x.coefficients(), cy = y.coefficients();
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (auto c = grid_key(cx[i]) <=> grid_key(cy[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Transform& t) {
  const auto c = t.coefficients();
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%.9g %.9g; %.9g %.9g | %.9g %.9g]", c[0], c[1], c[2], c[3], c[4], c[5]);
  return buf;
}

namespace {

// Point set with tolerant membership, bucketed on a coarse grid.
class PointIndex {
 public:
  explicit PointIndex(const std::vector<Point>& pts) : pts_(pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) buckets_.emplace(key(cell(pts[i].x), cell(pts[i].y)), i);
  }

  bool contains(Point p) const {
    const auto cx = cell(p.x), cy = cell(p.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto [lo, hi] = buckets_.equal_range(key(cx + dx, cy + dy));
        for (auto it = lo; it != hi; ++it) {
          if (coincident(pts_[it->second], p)) return true;
        }
      }
    }
    return false;
  }

 private:
  static std::int64_t cell(double v) { return static_cast<std::int64_t>(std::floor(v / tol::kGrid)); }
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(y);
  }

  const std::vector<Point>& pts_;
  std::unordered_multimap<std::uint64_t, std::size_t> buckets_;
};

}  // namespace

std::vector<Transform> find_matches(const Shape& a, const Shape& s, const MatchOptions& opts) {
  const auto source = carrier_intersections(a);
  if (source.size() < 2) {
    throw UnderdeterminedMatchError(
        "underdetermined match: shape needs at least two non-parallel carriers meeting in two "
        "distinct points");
  }
  // Anchor on the two source points farthest apart for conditioning.
  std::size_t i1 = 0, i2 = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = i + 1; j < source.size(); ++j) {
      if (double d = distance(source[i], source[j]); d > best) {
        best = d;
        i1 = i;
        i2 = j;
      }
    }
  }
  const auto target = carrier_intersections(s);
  const PointIndex index(target);

  std::vector<Transform> found;
  for (std::size_t j1 = 0; j1 < target.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < target.size(); ++j2) {
      if (j1 == j2) continue;
      for (bool reflect : {false, true}) {
        if (reflect && !opts.allow_reflection) continue;
        const auto& p1 = source[i1];
        const auto& p2 = source[i2];
        const double scale = distance(target[j1], target[j2]) / distance(p1, p2);
        if (scale <= tol::kAbs) continue;
        const Transform t = Transform::from_correspondence(p1, p2, target[j1], target[j2], reflect);
        const bool points_land = std::all_of(source.begin(), source.end(),
                                             [&](Point p) { return index.contains(t(p)); });
        if (!points_land || !subshape(t(a), s)) continue;
        if (std::none_of(found.begin(), found.end(), [&](const Transform& f) { return same_transform(f, t); })) {
          found.push_back(t);
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Transform& x, const Transform& y) { return canonical_order(x, y) < 0; });
  return found;
}

}  // namespace verba
