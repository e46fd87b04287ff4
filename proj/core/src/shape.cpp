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

#include "verba/shape.hpp"

#include <algorithm>
#include <sstream>

#include "verba/error.hpp"

namespace verba {

LabelledPoint::LabelledPoint(Point at_in, std::string label_in)
    : at(at_in), label(std::move(label_in)) {
  if (label.empty()) throw GeometryError("empty label");
  if (!is_finite(at)) throw GeometryError("label '" + label + "' has a non-finite position");
}

bool same_label(const LabelledPoint& a, const LabelledPoint& b) {
  return a.label == b.label && coincident(a.at, b.at);
}

namespace {

// Parametric interval along a line, remembering the actual endpoints so
// results never drift away from input coordinates.
struct Interval {
  double lo;
  double hi;
  Point plo;
  Point phi;
};

struct LineGroup {
  Carrier carrier;
  Point origin;
  Point dir;
  std::vector<Interval> a;
  std::vector<Interval> b;

  double param(Point p) const { return dot(dir, p - origin); }
  double eps(const Interval& i) const {
    return std::max(scaled_tol(i.plo), scaled_tol(i.phi));
  }
};

Interval to_interval(const LineGroup& g, const Segment& s) {
  double t0 = g.param(s.p());
  double t1 = g.param(s.q());
  if (t0 <= t1) return {t0, t1, s.p(), s.q()};
  return {t1, t0, s.q(), s.p()};
}

std::vector<LineGroup> group_by_line(std::span<const Segment> a, std::span<const Segment> b) {
  std::vector<LineGroup> groups;
  auto place = [&](const Segment& s, bool into_a) {
    const Carrier c = Carrier::of(s);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const LineGroup& g) { return g.carrier.same_line(c); });
    if (it == groups.end()) {
      groups.push_back(LineGroup{c, s.p(), s.direction(), {}, {}});
      it = std::prev(groups.end());
    }
    (into_a ? it->a : it->b).push_back(to_interval(*it, s));
  };
  for (const auto& s : a) place(s, true);
  for (const auto& s : b) place(s, false);
  return groups;
}

// Sorted, pairwise separated intervals covering the same points.
std::vector<Interval> merge(const LineGroup& g, std::vector<Interval> in) {
  std::sort(in.begin(), in.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (const auto& iv : in) {
    if (!out.empty() && iv.lo <= out.back().hi + g.eps(out.back())) {
      if (iv.hi > out.back().hi) {
        out.back().hi = iv.hi;
        out.back().phi = iv.phi;
      }
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<Interval> intersect_intervals(const LineGroup& g, const std::vector<Interval>& x,
                                          const std::vector<Interval>& y) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    Interval r = x[i];
    if (y[j].lo > r.lo) {
      r.lo = y[j].lo;
      r.plo = y[j].plo;
    }
    if (y[j].hi < r.hi) {
      r.hi = y[j].hi;
      r.phi = y[j].phi;
    }
    if (r.hi - r.lo > g.eps(r)) out.push_back(r);
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::vector<Interval> subtract_intervals(const LineGroup& g, const std::vector<Interval>& x,
                                         const std::vector<Interval>& y) {
  std::vector<Interval> out;
  for (const auto& iv : x) {
    double cur = iv.lo;
    Point pcur = iv.plo;
    for (const auto& cut : y) {
      if (cut.hi <= cur || cut.lo >= iv.hi) continue;
      if (cut.lo > cur) {
        Interval piece{cur, cut.lo, pcur, cut.plo};
        if (piece.hi - piece.lo > g.eps(piece)) out.push_back(piece);
      }
      if (cut.hi > cur) {
        cur = cut.hi;
        pcur = cut.phi;
      }
    }
    Interval tail{cur, iv.hi, pcur, iv.phi};
    if (tail.hi - tail.lo > g.eps(tail)) out.push_back(tail);
  }
  return out;
}

void emit(const std::vector<Interval>& ivs, std::vector<Segment>& out) {
  for (const auto& iv : ivs) {
    if (!coincident(iv.plo, iv.phi)) out.emplace_back(iv.plo, iv.phi);
  }
}

enum class Op { kUnion, kIntersection, kDifference };

std::vector<Segment> combine(std::span<const Segment> a, std::span<const Segment> b, Op op) {
  std::vector<Segment> out;
  for (auto& g : group_by_line(a, b)) {
    auto ma = merge(g, std::move(g.a));
    auto mb = merge(g, std::move(g.b));
    switch (op) {
      case Op::kUnion: {
        ma.insert(ma.end(), mb.begin(), mb.end());
        emit(merge(g, std::move(ma)), out);
        break;
      }
      case Op::kIntersection:
        emit(intersect_intervals(g, ma, mb), out);
        break;
      case Op::kDifference:
        emit(subtract_intervals(g, ma, mb), out);
        break;
    }
  }
  return out;
}

bool contains_label(std::span<const LabelledPoint> labels, const LabelledPoint& l) {
  return std::any_of(labels.begin(), labels.end(),
                     [&](const LabelledPoint& m) { return same_label(l, m); });
}

std::vector<LabelledPoint> unique_labels(std::span<const LabelledPoint> in) {
  std::vector<LabelledPoint> out;
  for (const auto& l : in) {
    if (!contains_label(out, l)) out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [](const LabelledPoint& x, const LabelledPoint& y) {
    if (x.label != y.label) return x.label < y.label;
    return grid_order(x.at, y.at) < 0;
  });
  return out;
}

}  // namespace

Shape Shape::canonicalize(std::span<const Segment> segments, std::span<const LabelledPoint> labels) {
  Shape s;
  s.segments_ = combine(segments, {}, Op::kUnion);
  std::sort(s.segments_.begin(), s.segments_.end(),
            [](const Segment& x, const Segment& y) { return canonical_order(x, y) < 0; });
  s.labels_ = unique_labels(labels);
  return s;
}

Shape Shape::without_labels() const { return canonicalize(segments_, {}); }

Shape Shape::with_labels(std::span<const LabelledPoint> extra) const {
  std::vector<LabelledPoint> all = labels_;
  all.insert(all.end(), extra.begin(), extra.end());
  return canonicalize(segments_, all);
}

Shape sum(const Shape& a, const Shape& b) {
  std::vector<Segment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  std::vector<LabelledPoint> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return Shape::canonicalize(segs, labels);
}

Shape product(const Shape& a, const Shape& b) {
  std::vector<LabelledPoint> labels;
  for (const auto& l : a.labels()) {
    if (contains_label(b.labels(), l)) labels.push_back(l);
  }
  return Shape::canonicalize(combine(a.segments(), b.segments(), Op::kIntersection), labels);
}

Shape difference(const Shape& a, const Shape& b) {
  std::vector<LabelledPoint> labels;
  for (const auto& l : a.labels()) {
    if (!contains_label(b.labels(), l)) labels.push_back(l);
  }
  return Shape::canonicalize(combine(a.segments(), b.segments(), Op::kDifference), labels);
}

bool subshape(const Shape& a, const Shape& s) {
  for (const auto& l : a.labels()) {
    if (!contains_label(s.labels(), l)) return false;
  }
  return combine(a.segments(), s.segments(), Op::kDifference).empty();
}

bool equal(const Shape& a, const Shape& b) {
  if (a.segments().size() != b.segments().size() || a.labels().size() != b.labels().size()) {
    return false;
  }
  // Canonical segments are pairwise disjoint, so matching is one-to-one.
  for (const auto& s : a.segments()) {
    if (std::none_of(b.segments().begin(), b.segments().end(),
                     [&](const Segment& t) { return same_segment(s, t); })) {
      return false;
    }
  }
  for (const auto& l : a.labels()) {
    if (!contains_label(b.labels(), l)) return false;
  }
  return true;
}

namespace {

std::vector<Carrier> distinct_carriers(const Shape& s) {
  std::vector<Carrier> out;
  for (const auto& seg : s.segments()) {
    const Carrier c = Carrier::of(seg);
    if (std::none_of(out.begin(), out.end(), [&](const Carrier& d) { return d.same_line(c); })) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::size_t carrier_count(const Shape& s) { return distinct_carriers(s).size(); }

std::vector<Point> carrier_intersections(const Shape& s) {
  const auto carriers = distinct_carriers(s);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    for (std::size_t j = i + 1; j < carriers.size(); ++j) {
      if (carriers[i].parallel_to(carriers[j])) continue;
      const Point p = intersect(carriers[i], carriers[j]);
      if (std::none_of(pts.begin(), pts.end(), [&](Point q) { return coincident(p, q); })) {
        pts.push_back(p);
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](Point x, Point y) { return grid_order(x, y) < 0; });
  return pts;
}

std::string debug_string(const Shape& s) {
  std::ostringstream os;
  os << "Shape{";
  for (const auto& seg : s.segments()) os << to_string(seg.p()) << "-" << to_string(seg.q()) << " ";
  for (const auto& l : s.labels()) os << l.label << "@" << to_string(l.at) << " ";
  os << "}";
  return os.str();
}

Shape axis_rectangle(double x0, double y0, double x1, double y1) {
  const Point pts[] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  return polyline(pts, true);
}

Shape polyline(std::span<const Point> pts, bool closed) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.emplace_back(pts[i], pts[i + 1]);
  if (closed && pts.size() > 2) segs.emplace_back(pts.back(), pts.front());
  return Shape::canonicalize(segs);
}

}  // namespace verba
