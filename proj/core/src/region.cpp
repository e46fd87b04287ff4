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

#include "verba/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "verba/error.hpp"

namespace verba {

double signed_area(std::span<const Point> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return 0.5 * twice;
}

Region::Region(std::vector<Point> boundary) : boundary_(std::move(boundary)) {
  if (boundary_.size() < 3) throw GeometryError("region needs at least three vertices");
  if (signed_area(boundary_) <= tol::kAbs) throw GeometryError("region boundary must be counterclockwise with positive area");
}

double Region::area() const { return signed_area(boundary_); }

bool Region::contains_strictly(Point p) const {
  bool inside = false;
  const std::size_t n = boundary_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = boundary_[i], b = boundary_[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

// Planar arrangement of a segment soup: segments split at every crossing,
// touching point and shared endpoint, with coincident pieces merged.
class Arrangement {
 public:
  explicit Arrangement(std::span<const Segment> segments) {
    for (const auto& s : segments) {
      std::vector<std::pair<double, Point>> cuts{{0.0, s.p()}, {s.length(), s.q()}};
      const Point d = s.direction();
      for (const auto& o : segments) {
        if (&o == &s) continue;
        for (Point e : {o.p(), o.q()}) {
          if (point_segment_distance(e, s.p(), s.q()) <= scaled_tol(e)) cuts.emplace_back(dot(d, e - s.p()), e);
        }
        if (auto x = crossing(s, o)) cuts.emplace_back(dot(d, *x - s.p()), *x);
      }
      std::sort(cuts.begin(), cuts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      std::size_t prev = vertex(cuts.front().second);
      for (std::size_t i = 1; i < cuts.size(); ++i) {
        const std::size_t v = vertex(cuts[i].second);
        if (v != prev) add_edge(prev, v);
        prev = v;
      }
    }
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::array<std::size_t, 2>>& edges() const { return edges_; }

 private:
  static std::optional<Point> crossing(const Segment& s, const Segment& o) {
    const Point r = s.q() - s.p(), q = o.q() - o.p();
    const double denom = cross(r, q);
    if (std::abs(denom) <= tol::kRel * norm(r) * norm(q)) return std::nullopt;
    const Point w = o.p() - s.p();
    const double t = cross(w, q) / denom;
    const double u = cross(w, r) / denom;
    const double et = tol::kAbs / norm(r), eu = tol::kAbs / norm(q);
    if (t < -et || t > 1 + et || u < -eu || u > 1 + eu) return std::nullopt;
    return s.p() + t * r;
  }

  std::size_t vertex(Point p) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (coincident(vertices_[i], p)) return i;
    }
    vertices_.push_back(p);
    return vertices_.size() - 1;
  }

  void add_edge(std::size_t u, std::size_t v) {
    std::array<std::size_t, 2> e{std::min(u, v), std::max(u, v)};
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) edges_.push_back(e);
  }

  std::vector<Point> vertices_;
  std::vector<std::array<std::size_t, 2>> edges_;
};

// Face tracing over the live edges of an arrangement. Half-edge 2k runs
// edges[k][0] -> edges[k][1]; 2k+1 is its twin.
class FaceTracer {
 public:
  FaceTracer(const Arrangement& arr, const std::vector<bool>& live) : arr_(arr) {
    out_.resize(arr.vertices().size());
    for (std::size_t k = 0; k < arr.edges().size(); ++k) {
      if (!live[k]) continue;
      out_[arr.edges()[k][0]].push_back(2 * k);
      out_[arr.edges()[k][1]].push_back(2 * k + 1);
    }
    for (std::size_t v = 0; v < out_.size(); ++v) {
      auto& list = out_[v];
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    }
    face_of_.assign(2 * arr.edges().size(), kNone);
    for (std::size_t k = 0; k < arr.edges().size(); ++k) {
      if (!live[k]) continue;
      for (std::size_t h : {2 * k, 2 * k + 1}) {
        if (face_of_[h] == kNone) trace(h);
      }
    }
  }

  const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
  std::size_t face_of(std::size_t half_edge) const { return face_of_[half_edge]; }
  std::size_t origin(std::size_t h) const { return arr_.edges()[h / 2][h % 2]; }
  std::size_t target(std::size_t h) const { return arr_.edges()[h / 2][1 - h % 2]; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double angle(std::size_t h) const {
    const Point d = arr_.vertices()[target(h)] - arr_.vertices()[origin(h)];
    return std::atan2(d.y, d.x);
  }

  void trace(std::size_t start) {
    const std::size_t id = faces_.size();
    faces_.emplace_back();
    std::size_t h = start;
    do {
      face_of_[h] = id;
      faces_.back().push_back(h);
      const auto& list = out_[target(h)];
      const std::size_t twin = h ^ 1;
      const auto pos = static_cast<std::size_t>(std::find(list.begin(), list.end(), twin) - list.begin());
      h = list[(pos + list.size() - 1) % list.size()];
    } while (h != start);
  }

  const Arrangement& arr_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> face_of_;
  std::vector<std::vector<std::size_t>> faces_;
};

void prune_dangling(const Arrangement& arr, std::vector<bool>& live) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(arr.vertices().size(), 0);
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (!live[k]) continue;
      ++degree[arr.edges()[k][0]];
      ++degree[arr.edges()[k][1]];
    }
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (live[k] && (degree[arr.edges()[k][0]] < 2 || degree[arr.edges()[k][1]] < 2)) {
        live[k] = false;
        changed = true;
      }
    }
  }
}

std::vector<Point> simplify(std::vector<Point> poly) {
  bool changed = true;
  while (changed && poly.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point a = poly[(i + poly.size() - 1) % poly.size()], b = poly[i], c = poly[(i + 1) % poly.size()];
      const Point u = b - a, v = c - b;
      if (std::abs(cross(u, v)) <= tol::kRel * norm(u) * norm(v) && dot(u, v) > 0.0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  const auto first = std::min_element(poly.begin(), poly.end(), [](Point x, Point y) { return grid_order(x, y) < 0; });
  std::rotate(poly.begin(), first, poly.end());
  return poly;
}

}  // namespace

std::vector<Region> extract_regions(const Shape& s) {
  const Arrangement arr(s.segments());
  std::vector<bool> live(arr.edges().size(), true);
  prune_dangling(arr, live);

  std::vector<Region> regions;
  for (;;) {
    const FaceTracer tracer(arr, live);
    bool removed = false;
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (live[k] && tracer.face_of(2 * k) == tracer.face_of(2 * k + 1)) {
        live[k] = false;  // bridge
        removed = true;
      }
    }
    if (removed) {
      prune_dangling(arr, live);
      continue;
    }
    for (const auto& face : tracer.faces()) {
      std::vector<Point> poly;
      for (std::size_t h : face) poly.push_back(arr.vertices()[tracer.origin(h)]);
      if (signed_area(poly) > tol::kAbs) regions.emplace_back(simplify(std::move(poly)));
    }
    break;
  }
  std::sort(regions.begin(), regions.end(), [](const Region& a, const Region& b) {
    if (auto c = grid_order(a.boundary().front(), b.boundary().front()); c != 0) return c < 0;
    return a.area() < b.area();
  });
  return regions;
}

std::string_view to_string(RegionRelation r) {
  switch (r) {
    case RegionRelation::kDC: return "DC";
    case RegionRelation::kEC: return "EC";
    case RegionRelation::kPO: return "PO";
    case RegionRelation::kTPP: return "TPP";
    case RegionRelation::kNTPP: return "NTPP";
    case RegionRelation::kEQ: return "EQ";
    case RegionRelation::kTPPi: return "TPPi";
    case RegionRelation::kNTPPi: return "NTPPi";
  }
  return "?";
}

RegionRelation inverse(RegionRelation r) {
  switch (r) {
    case RegionRelation::kTPP: return RegionRelation::kTPPi;
    case RegionRelation::kTPPi: return RegionRelation::kTPP;
    case RegionRelation::kNTPP: return RegionRelation::kNTPPi;
    case RegionRelation::kNTPPi: return RegionRelation::kNTPP;
    default: return r;
  }
}

namespace {

bool inside(RegionSet set, Point p) {
  return std::any_of(set.begin(), set.end(), [&](const Region& r) { return r.contains_strictly(p); });
}

struct OverlayFacts {
  bool interiors_meet = false;
  bool x_in_y = true;
  bool y_in_x = true;
  bool boundaries_meet = false;
};

void add_edges(RegionSet set, std::vector<Segment>& out) {
  for (const auto& r : set) {
    const auto& b = r.boundary();
    for (std::size_t i = 0; i < b.size(); ++i) out.emplace_back(b[i], b[(i + 1) % b.size()]);
  }
}

// Overlays both boundaries and samples each arrangement edge just off both
// of its sides. Every face of the overlay lies wholly inside or outside
// each operand and touches at least one edge, so side samples decide
// interior relations; an edge bounds an operand iff its sides disagree.
OverlayFacts overlay(RegionSet x, RegionSet y) {
  std::vector<Segment> segs;
  add_edges(x, segs);
  add_edges(y, segs);
  const Arrangement arr(segs);
  const auto& verts = arr.vertices();
  const auto& edges = arr.edges();

  OverlayFacts f;
  std::vector<bool> vx(verts.size(), false), vy(verts.size(), false);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Point a = verts[edges[k][0]], b = verts[edges[k][1]];
    const Point m = 0.5 * (a + b);
    double clearance = 0.25 * distance(a, b);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j == k) continue;
      clearance = std::min(clearance, 0.5 * point_segment_distance(m, verts[edges[j][0]], verts[edges[j][1]]));
    }
    const Point d = (1.0 / distance(a, b)) * (b - a);
    const Point n{-d.y, d.x};
    const Point left = m + clearance * n, right = m - clearance * n;
    const bool xl = inside(x, left), xr = inside(x, right);
    const bool yl = inside(y, left), yr = inside(y, right);
    if ((xl && yl) || (xr && yr)) f.interiors_meet = true;
    if ((xl && !yl) || (xr && !yr)) f.x_in_y = false;
    if ((yl && !xl) || (yr && !xr)) f.y_in_x = false;
    const bool bx = xl != xr, by = yl != yr;
    if (bx && by) f.boundaries_meet = true;
    if (bx) vx[edges[k][0]] = vx[edges[k][1]] = true;
    if (by) vy[edges[k][0]] = vy[edges[k][1]] = true;
  }
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (vx[v] && vy[v]) f.boundaries_meet = true;
  }
  return f;
}

void require_nonempty(RegionSet x, RegionSet y) {
  if (x.empty() || y.empty()) throw GeometryError("region relation needs at least one region on each side");
}

}  // namespace

bool connect(RegionSet x, RegionSet y) {
  require_nonempty(x, y);
  const auto f = overlay(x, y);
  return f.interiors_meet || f.boundaries_meet;
}

bool part(RegionSet x, RegionSet y) {
  require_nonempty(x, y);
  return overlay(x, y).x_in_y;
}

bool overlap(RegionSet x, RegionSet y) {
  require_nonempty(x, y);
  return overlay(x, y).interiors_meet;
}

RegionRelation classify(RegionSet x, RegionSet y) {
  require_nonempty(x, y);
  const auto f = overlay(x, y);
  if (!f.interiors_meet) return f.boundaries_meet ? RegionRelation::kEC : RegionRelation::kDC;
  if (f.x_in_y && f.y_in_x) return RegionRelation::kEQ;
  if (f.x_in_y) return f.boundaries_meet ? RegionRelation::kTPP : RegionRelation::kNTPP;
  if (f.y_in_x) return f.boundaries_meet ? RegionRelation::kTPPi : RegionRelation::kNTPPi;
  return RegionRelation::kPO;
}

namespace {

struct PrepositionEntry {
  std::string_view word;
  std::string_view region;
  std::vector<RegionRelation> relations;
};

const std::vector<PrepositionEntry>& preposition_table() {
  static const std::vector<PrepositionEntry> table = {
      {"at", "ttp-nttp", {RegionRelation::kTPP, RegionRelation::kNTPP}},
      {"on", "ec-ttp", {RegionRelation::kEC, RegionRelation::kTPP}},
      {"in", "ec-ttp-nttp", {RegionRelation::kEC, RegionRelation::kTPP, RegionRelation::kNTPP}},
  };
  return table;
}

const PrepositionEntry& lookup(std::string_view word) {
  for (const auto& e : preposition_table()) {
    if (e.word == word) return e;
  }
  throw CompositionError("unmapped preposition '" + std::string(word) + "'");
}

}  // namespace

bool is_mapped_preposition(std::string_view preposition) {
  const auto& t = preposition_table();
  return std::any_of(t.begin(), t.end(), [&](const PrepositionEntry& e) { return e.word == preposition; });
}

std::span<const RegionRelation> preposition_relations(std::string_view preposition) {
  return lookup(preposition).relations;
}

std::string_view preposition_region(std::string_view preposition) { return lookup(preposition).region; }

bool check_preposition(std::string_view preposition, RegionSet trajector, RegionSet landmark) {
  const auto allowed = preposition_relations(preposition);
  const RegionRelation r = classify(trajector, landmark);
  return std::find(allowed.begin(), allowed.end(), r) != allowed.end();
}

}  // namespace verba
